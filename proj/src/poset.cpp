#include "incgrade/poset.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "incgrade/errors.hpp"

namespace incgrade {

Poset Poset::from_relation(std::vector<std::string> labels, std::span<const Pair> relation) {
  const std::size_t n = labels.size();
  if (n == 0) throw EmptyPosetError("a poset needs at least one element");
  {
    std::set<std::string> seen;
    for (const auto& l : labels)
      if (!seen.insert(l).second) throw DuplicateLabelError("duplicate element label '" + l + "'");
  }
  Poset p;
  p.labels_ = std::move(labels);
  p.leq_.assign(n * n, false);
  for (Index i = 0; i < n; ++i) p.leq_[i * n + i] = true;
  for (const auto& [x, y] : relation) {
    if (x >= n || y >= n)
      throw InputError("relation pair (" + std::to_string(x) + "," + std::to_string(y) +
                       ") out of range for " + std::to_string(n) + " elements");
    p.leq_[x * n + y] = true;
  }
  // Warshall closure.
  for (Index k = 0; k < n; ++k)
    for (Index i = 0; i < n; ++i) {
      if (!p.leq_[i * n + k]) continue;
      for (Index j = 0; j < n; ++j)
        if (p.leq_[k * n + j]) p.leq_[i * n + j] = true;
    }
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      if (p.leq_[i * n + j] && p.leq_[j * n + i])
        throw CycleError("relation forces " + p.labels_[i] + " and " + p.labels_[j] +
                         " to be mutually comparable");
  p.derive();
  return p;
}

void Poset::derive() {
  const std::size_t n = size();
  covers_.clear();
  pairs_.clear();
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) {
      if (!leq(x, y)) continue;
      pairs_.emplace_back(x, y);
      if (x == y) continue;
      bool is_cover = true;
      for (Index z = 0; z < n && is_cover; ++z)
        if (lt(x, z) && lt(z, y)) is_cover = false;
      if (is_cover) covers_.emplace_back(x, y);
    }
  std::vector<std::size_t> below(n, 0);
  for (const auto& [x, y] : pairs_) ++below[y];
  linear_extension_.resize(n);
  std::iota(linear_extension_.begin(), linear_extension_.end(), Index{0});
  std::stable_sort(linear_extension_.begin(), linear_extension_.end(),
                   [&](Index a, Index b) { return below[a] < below[b]; });
}

std::optional<Index> Poset::index_of(std::string_view label) const {
  for (Index i = 0; i < size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

std::optional<std::size_t> Poset::pair_position(Index x, Index y) const {
  const Pair key{x, y};
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), key);
  if (it == pairs_.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - pairs_.begin());
}

Poset Poset::induced(std::span<const Index> subset) const {
  std::vector<Index> sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InputError("induced subposet: repeated element");
  if (sorted.empty()) throw EmptyPosetError("induced subposet must be nonempty");
  if (sorted.back() >= size()) throw InputError("induced subposet: index out of range");
  const std::size_t m = sorted.size();
  Poset q;
  for (Index i : sorted) q.labels_.push_back(labels_[i]);
  q.leq_.assign(m * m, false);
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j) q.leq_[i * m + j] = leq(sorted[i], sorted[j]);
  q.derive();
  return q;
}

std::vector<Index> segment_indices(const Poset& p, Index x, Index z) {
  if (x >= p.size() || z >= p.size()) throw InputError("segment: index out of range");
  if (!p.leq(x, z))
    throw NotComparableError("segment [" + p.label(x) + "," + p.label(z) + "] is undefined: " + p.label(x) +
                             " is not below " + p.label(z));
  std::vector<Index> out;
  for (Index y = 0; y < p.size(); ++y)
    if (p.leq(x, y) && p.leq(y, z)) out.push_back(y);
  return out;
}

Poset segment(const Poset& p, Index x, Index z) { return p.induced(segment_indices(p, x, z)); }

std::vector<Chain> maximal_chains(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<std::vector<Index>> up(n);
  std::vector<bool> minimal(n, true);
  for (const auto& [x, y] : p.covers()) {
    up[x].push_back(y);
    minimal[y] = false;
  }
  // A chain is maximal iff it runs along covers from a minimal to a maximal element.
  std::vector<Chain> chains;
  std::vector<Index> path;
  std::function<void(Index)> walk = [&](Index x) {
    path.push_back(x);
    if (up[x].empty()) chains.push_back(Chain{path});
    for (Index y : up[x]) walk(y);
    path.pop_back();
  };
  for (Index x = 0; x < n; ++x)
    if (minimal[x]) walk(x);
  std::sort(chains.begin(), chains.end());
  return chains;
}

std::vector<std::size_t> component_of(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<Index> parent(n);
  std::iota(parent.begin(), parent.end(), Index{0});
  std::function<Index(Index)> find = [&](Index x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const auto& [x, y] : p.covers()) {
    Index a = find(x), b = find(y);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> comp(n);
  std::vector<std::size_t> number(n, n);
  std::size_t next = 0;
  for (Index x = 0; x < n; ++x) {
    Index r = find(x);
    if (number[r] == n) number[r] = next++;
    comp[x] = number[r];
  }
  return comp;
}

std::vector<std::vector<Index>> connected_components(const Poset& p) {
  const auto comp = component_of(p);
  const std::size_t k = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<std::vector<Index>> out(k);
  for (Index x = 0; x < p.size(); ++x) out[comp[x]].push_back(x);
  return out;
}

std::vector<std::size_t> ranks(const Poset& p) {
  std::vector<std::size_t> r(p.size(), 1);
  for (Index y : p.linear_extension())
    for (Index x = 0; x < p.size(); ++x)
      if (p.lt(x, y)) r[y] = std::max(r[y], r[x] + 1);
  return r;
}

std::size_t bound(const Poset& p) {
  if (p.size() == 0) throw EmptyPosetError("bound of an empty poset");
  const auto r = ranks(p);
  return *std::max_element(r.begin(), r.end());
}

PosetAutomorphism PosetAutomorphism::identity(std::size_t n) {
  std::vector<Index> perm(n);
  std::iota(perm.begin(), perm.end(), Index{0});
  return PosetAutomorphism(std::move(perm));
}

bool PosetAutomorphism::is_identity() const {
  for (Index i = 0; i < perm_.size(); ++i)
    if (perm_[i] != i) return false;
  return true;
}

PosetAutomorphism PosetAutomorphism::inverse() const {
  std::vector<Index> inv(perm_.size());
  for (Index i = 0; i < perm_.size(); ++i) inv[perm_[i]] = i;
  return PosetAutomorphism(std::move(inv));
}

PosetAutomorphism operator*(const PosetAutomorphism& a, const PosetAutomorphism& b) {
  std::vector<Index> out(b.size());
  for (Index i = 0; i < b.size(); ++i) out[i] = a(b(i));
  return PosetAutomorphism(std::move(out));
}

bool is_automorphism(const Poset& p, std::span<const Index> perm) {
  const std::size_t n = p.size();
  if (perm.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (Index v : perm) {
    if (v >= n || hit[v]) return false;
    hit[v] = true;
  }
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (p.leq(i, j) != p.leq(perm[i], perm[j])) return false;
  return true;
}

namespace {

struct Signature {
  std::size_t rank, up_covers, down_covers, below, above;
  auto operator<=>(const Signature&) const = default;
};

std::vector<Signature> signatures(const Poset& p) {
  const std::size_t n = p.size();
  const auto r = ranks(p);
  std::vector<Signature> sig(n);
  for (Index x = 0; x < n; ++x) sig[x].rank = r[x];
  for (const auto& [x, y] : p.covers()) {
    ++sig[x].up_covers;
    ++sig[y].down_covers;
  }
  for (const auto& [x, y] : p.comparable_pairs()) {
    ++sig[x].above;
    ++sig[y].below;
  }
  return sig;
}

}  // namespace

std::vector<PosetAutomorphism> automorphisms(const Poset& p) {
  const std::size_t n = p.size();
  const auto sig = signatures(p);
  std::vector<Index> image(n);
  std::vector<bool> used(n, false);
  std::vector<PosetAutomorphism> out;
  std::function<void(Index)> extend = [&](Index x) {
    if (x == n) {
      out.emplace_back(image);
      return;
    }
    for (Index y = 0; y < n; ++y) {
      if (used[y] || sig[x] != sig[y]) continue;
      bool consistent = true;
      for (Index w = 0; w < x && consistent; ++w)
        consistent = p.leq(w, x) == p.leq(image[w], y) && p.leq(x, w) == p.leq(y, image[w]);
      if (!consistent) continue;
      image[x] = y;
      used[y] = true;
      extend(x + 1);
      used[y] = false;
    }
  };
  extend(0);
  return out;
}

Chain apply(const PosetAutomorphism& sigma, const Poset& /*p*/, const Chain& c) {
  // σ preserves the order, so the image of an ascending chain is ascending.
  Chain out;
  for (Index x : c.indices) out.indices.push_back(sigma(x));
  return out;
}

ChainTransitivity is_chain_transitive(const Poset& p) {
  ChainTransitivity result;
  result.chains = maximal_chains(p);
  result.automorphisms = automorphisms(p);
  const std::size_t c = result.chains.size();
  std::vector<std::vector<std::size_t>> witness(c, std::vector<std::size_t>(c));
  for (std::size_t i = 0; i < c; ++i) {
    std::vector<bool> found(c, false);
    for (std::size_t a = 0; a < result.automorphisms.size(); ++a) {
      const Chain image = apply(result.automorphisms[a], p, result.chains[i]);
      auto it = std::lower_bound(result.chains.begin(), result.chains.end(), image);
      if (it == result.chains.end() || *it != image) continue;
      const std::size_t j = static_cast<std::size_t>(it - result.chains.begin());
      if (!found[j]) {
        found[j] = true;
        witness[i][j] = a;
      }
    }
    for (std::size_t j = 0; j < c; ++j)
      if (!found[j]) {
        result.unreachable = std::make_pair(i, j);
        return result;
      }
  }
  result.transitive = true;
  result.witness = std::move(witness);
  return result;
}

}  // namespace incgrade
