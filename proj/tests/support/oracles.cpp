#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace oracle {

using namespace incgrade;

Poset random_poset(std::mt19937_64& rng, std::size_t n, double density) {
  std::vector<Index> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::bernoulli_distribution coin(density);
  std::vector<Pair> relation;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) relation.emplace_back(order[i], order[j]);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
  return Poset::from_relation(labels, relation);
}

namespace {

bool is_chain(const Poset& p, const std::vector<Index>& s) {
  for (Index a : s)
    for (Index b : s)
      if (!p.comparable(a, b)) return false;
  return true;
}

}  // namespace

std::vector<std::vector<Index>> chains(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<std::uint32_t> all;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<Index> s;
    for (Index i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(i);
    if (is_chain(p, s)) all.push_back(mask);
  }
  std::vector<std::vector<Index>> out;
  for (auto m : all) {
    const bool maximal = std::none_of(all.begin(), all.end(), [&](auto o) { return o != m && (o & m) == m; });
    if (!maximal) continue;
    std::vector<Index> s;
    for (Index i = 0; i < n; ++i)
      if (m >> i & 1) s.push_back(i);
    std::sort(s.begin(), s.end(), [&](Index a, Index b) { return p.lt(a, b); });
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::set<Index>> components(const Poset& p) {
  std::vector<bool> seen(p.size());
  std::vector<std::set<Index>> out;
  for (Index s = 0; s < p.size(); ++s) {
    if (seen[s]) continue;
    std::set<Index> comp;
    std::vector<Index> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const Index x = stack.back();
      stack.pop_back();
      comp.insert(x);
      for (Index y = 0; y < p.size(); ++y)
        if (!seen[y] && p.comparable(x, y)) seen[y] = true, stack.push_back(y);
    }
    out.push_back(comp);
  }
  return out;
}

std::vector<std::vector<Index>> automorphisms(const Poset& p) {
  std::vector<Index> perm(p.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<Index>> out;
  do {
    bool ok = true;
    for (Index i = 0; i < p.size() && ok; ++i)
      for (Index j = 0; j < p.size() && ok; ++j) ok = p.leq(i, j) == p.leq(perm[i], perm[j]);
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

Dense to_dense(const IncidenceFunction& f) {
  const std::size_t n = f.poset().size();
  Dense d(n, std::vector<Rational>(n));
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) d[x][y] = f(x, y);
  return d;
}

Dense multiply(const Dense& a, const Dense& b) {
  const std::size_t n = a.size();
  Dense c(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

Dense unit_matrix(std::size_t n, Index x, Index y) {
  Dense d(n, std::vector<Rational>(n));
  d[x][y] = 1;
  return d;
}

GroupElement grade(const GradingMap& theta, Index x, Index y) {
  const FiniteGroup& g = theta.group();
  for (GroupElement inv = 0; inv < g.order(); ++inv)
    if (g.multiply(inv, theta[x]) == g.identity()) return g.multiply(inv, theta[y]);
  throw std::logic_error("no inverse");
}

namespace {

// Every assignment of one group element per component.
void for_each_shift(std::size_t k, std::size_t order, const std::function<void(const std::vector<GroupElement>&)>& fn) {
  std::vector<GroupElement> h(k, 0);
  while (true) {
    fn(h);
    std::size_t i = 0;
    while (i < k && ++h[i] == order) h[i++] = 0;
    if (i == k) return;
  }
}

std::vector<std::size_t> component_index(const Poset& p) {
  std::vector<std::size_t> idx(p.size());
  const auto comps = components(p);
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (Index x : comps[c]) idx[x] = c;
  return idx;
}

// h θ σ with (θσ)(x) = θ(σ⁻¹x).
std::vector<GroupElement> transform(const FiniteGroup& g, const std::vector<GroupElement>& theta,
                                    const std::vector<GroupElement>& h, const std::vector<Index>& sigma,
                                    const std::vector<std::size_t>& comp) {
  std::vector<GroupElement> out(theta.size());
  for (Index x = 0; x < theta.size(); ++x) out[sigma[x]] = theta[x];
  for (Index x = 0; x < theta.size(); ++x) out[x] = g.multiply(h[comp[x]], out[x]);
  return out;
}

std::uint64_t count_orbits(const Poset& p, const FiniteGroup& g, const std::vector<std::vector<Index>>& sigmas) {
  const std::size_t n = p.size(), q = g.order();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= q;
  std::vector<std::uint64_t> parent(total);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::uint64_t(std::uint64_t)> find = [&](std::uint64_t a) {
    return parent[a] == a ? a : parent[a] = find(parent[a]);
  };
  auto encode = [&](const std::vector<GroupElement>& t) {
    std::uint64_t c = 0;
    for (auto e : t) c = c * q + e;
    return c;
  };
  const auto comp = component_index(p);
  const std::size_t k = components(p).size();
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<GroupElement> t(n);
    std::uint64_t c = code;
    for (std::size_t i = n; i-- > 0;) t[i] = c % q, c /= q;
    for (const auto& s : sigmas)
      for_each_shift(k, q, [&](const std::vector<GroupElement>& h) {
        parent[find(encode(transform(g, t, h, s, comp)))] = find(code);
      });
  }
  std::uint64_t roots = 0;
  for (std::uint64_t c = 0; c < total; ++c) roots += find(c) == c;
  return roots;
}

}  // namespace

bool equivalent(const GradingMap& theta, const GradingMap& mu) {
  const Poset& p = theta.poset();
  const auto comp = component_index(p);
  const std::size_t k = components(p).size();
  bool found = false;
  for (const auto& s : oracle::automorphisms(p))
    for_each_shift(k, theta.group().order(), [&](const std::vector<GroupElement>& h) {
      if (transform(theta.group(), theta.values(), h, s, comp) == mu.values()) found = true;
    });
  return found;
}

std::uint64_t shift_orbits(const Poset& p, const FiniteGroup& g) {
  std::vector<Index> id(p.size());
  std::iota(id.begin(), id.end(), 0);
  return count_orbits(p, g, {id});
}

std::uint64_t equivalence_classes(const Poset& p, const FiniteGroup& g) {
  return count_orbits(p, g, oracle::automorphisms(p));
}

std::vector<Substitution> substitutions(const GradingMap& theta, const Multidegree& md) {
  const Poset& p = theta.poset();
  std::vector<std::vector<Pair>> choices(md.size());
  for (std::size_t i = 0; i < md.size(); ++i)
    for (Index x = 0; x < p.size(); ++x)
      for (Index y = 0; y < p.size(); ++y)
        if (p.leq(x, y) && grade(theta, x, y) == md[i]) choices[i].emplace_back(x, y);
  std::vector<Substitution> out{{}};
  for (const auto& options : choices) {
    std::vector<Substitution> next;
    for (const auto& partial : out)
      for (const auto& pr : options) {
        auto s = partial;
        s.push_back(pr);
        next.push_back(s);
      }
    out = std::move(next);
  }
  return out;
}

Dense monomial_value(std::size_t n, const Substitution& sub, const Permutation& perm) {
  Dense acc = unit_matrix(n, 0, 0);
  for (Index i = 0; i < n; ++i) acc[i][i] = 1;
  for (std::size_t i : perm) acc = multiply(acc, unit_matrix(n, sub[i].first, sub[i].second));
  return acc;
}

bool monomial_vanishes(const GradingMap& theta, const Multidegree& md) {
  Permutation id(md.size());
  std::iota(id.begin(), id.end(), 0);
  const std::size_t n = theta.poset().size();
  const Dense zero(n, std::vector<Rational>(n));
  for (const auto& sub : substitutions(theta, md))
    if (monomial_value(n, sub, id) != zero) return false;
  return true;
}

namespace {

std::vector<Permutation> permutations(std::size_t m) {
  Permutation p(m);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Permutation> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::size_t matrix_rank(std::vector<std::vector<Rational>> rows) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      const Rational f = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace

std::size_t slice_dimension(const GradingMap& theta, const Multidegree& md) {
  const std::size_t n = theta.poset().size();
  const auto perms = permutations(md.size());
  std::vector<std::vector<Rational>> rows;
  for (const auto& sub : substitutions(theta, md)) {
    std::vector<Dense> values;
    for (const auto& perm : perms) values.push_back(monomial_value(n, sub, perm));
    for (Index x = 0; x < n; ++x)
      for (Index y = 0; y < n; ++y) {
        std::vector<Rational> row;
        for (const auto& v : values) row.push_back(v[x][y]);
        if (std::any_of(row.begin(), row.end(), [](const Rational& q) { return q != 0; })) rows.push_back(row);
      }
  }
  return perms.size() - matrix_rank(rows);
}

bool is_identity(const GradingMap& theta, const Multidegree& md, const std::vector<Rational>& c) {
  const std::size_t n = theta.poset().size();
  const auto perms = permutations(md.size());
  for (const auto& sub : substitutions(theta, md)) {
    Dense total(n, std::vector<Rational>(n));
    for (std::size_t k = 0; k < perms.size(); ++k) {
      if (c[k] == 0) continue;
      const Dense v = monomial_value(n, sub, perms[k]);
      for (Index x = 0; x < n; ++x)
        for (Index y = 0; y < n; ++y) total[x][y] += c[k] * v[x][y];
    }
    for (const auto& row : total)
      for (const auto& q : row)
        if (q != 0) return false;
  }
  return true;
}

std::vector<Rational> commutator_product() {
  // [x1,x2][x3,x4] = x1x2x3x4 - x2x1x3x4 - x1x2x4x3 + x2x1x4x3
  const auto perms = permutations(4);
  std::vector<Rational> c(perms.size());
  const std::map<Permutation, int> terms = {
      {{0, 1, 2, 3}, 1}, {{1, 0, 2, 3}, -1}, {{0, 1, 3, 2}, -1}, {{1, 0, 3, 2}, 1}};
  for (std::size_t k = 0; k < perms.size(); ++k)
    if (auto it = terms.find(perms[k]); it != terms.end()) c[k] = it->second;
  return c;
}

}  // namespace oracle
