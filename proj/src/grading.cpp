#include "incgrade/grading.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "incgrade/errors.hpp"

namespace incgrade {

GradingMap::GradingMap(PosetRef poset, GroupRef group, std::vector<GroupElement> theta)
    : poset_(std::move(poset)), group_(std::move(group)), theta_(std::move(theta)) {
  if (theta_.size() != poset_->size())
    throw InputError("grading map has " + std::to_string(theta_.size()) + " values for a poset with " +
                     std::to_string(poset_->size()) + " elements");
  for (GroupElement g : theta_)
    if (g >= group_->order()) throw InputError("grading map value out of range for " + group_->spec());
}

GradingMap GradingMap::parse(PosetRef poset, GroupRef group, std::string_view csv) {
  std::vector<GroupElement> theta;
  for (const auto& name : split_top_level(csv)) theta.push_back(group->parse_element(name));
  return GradingMap(std::move(poset), std::move(group), std::move(theta));
}

std::string GradingMap::to_csv() const {
  std::string out;
  for (std::size_t i = 0; i < theta_.size(); ++i) out += (i ? "," : "") + group_->name(theta_[i]);
  return out;
}

bool operator==(const GradingMap& a, const GradingMap& b) {
  return same_poset(a.poset_, b.poset_) && (a.group_ == b.group_ || *a.group_ == *b.group_) && a.theta_ == b.theta_;
}

GroupElement grade_of_pair(const GradingMap& theta, Index x, Index y) {
  const Poset& p = theta.poset();
  if (x >= p.size() || y >= p.size()) throw InputError("grade_of_pair: index out of range");
  if (!p.leq(x, y))
    throw NotComparableError("(" + p.label(x) + "," + p.label(y) + ") is not a comparable pair");
  const FiniteGroup& g = theta.group();
  return g.multiply(g.inverse(theta[x]), theta[y]);
}

std::vector<GroupElement> support(const GradingMap& theta) {
  std::set<GroupElement> out;
  for (const auto& [x, y] : theta.poset().comparable_pairs()) out.insert(grade_of_pair(theta, x, y));
  return {out.begin(), out.end()};
}

GradedComponent component_basis(const GradingMap& theta, GroupElement g) {
  if (g >= theta.group().order()) throw InputError("component_basis: group element out of range");
  GradedComponent c{g, {}};
  for (const auto& [x, y] : theta.poset().comparable_pairs())
    if (grade_of_pair(theta, x, y) == g) c.basis.emplace_back(x, y);
  return c;
}

std::vector<GradedComponent> homogeneous_components(const GradingMap& theta) {
  std::vector<GradedComponent> out;
  for (GroupElement g = 0; g < theta.group().order(); ++g) out.push_back({g, {}});
  for (const auto& [x, y] : theta.poset().comparable_pairs()) out[grade_of_pair(theta, x, y)].basis.emplace_back(x, y);
  return out;
}

namespace {

void require_compatible(const GradingMap& a, const GradingMap& b) {
  if (!same_poset(a.poset_ref(), b.poset_ref())) throw MismatchError("gradings are defined on different posets");
  if (!(a.group_ref() == b.group_ref() || a.group() == b.group()))
    throw MismatchError("gradings take values in different groups");
}

}  // namespace

bool same_grading(const GradingMap& theta, const GradingMap& mu) {
  require_compatible(theta, mu);
  for (const auto& [x, y] : theta.poset().comparable_pairs())
    if (grade_of_pair(theta, x, y) != grade_of_pair(mu, x, y)) return false;
  return true;
}

GradingMap shift_components(const GradingMap& theta, const std::vector<GroupElement>& shifts) {
  const auto comp = component_of(theta.poset());
  const std::size_t k = connected_components(theta.poset()).size();
  if (shifts.size() != k) throw InputError("expected one shift per connected component");
  std::vector<GroupElement> out(theta.values().size());
  for (Index x = 0; x < out.size(); ++x) out[x] = theta.group().multiply(shifts[comp[x]], theta[x]);
  return GradingMap(theta.poset_ref(), theta.group_ref(), std::move(out));
}

GradingMap act(const GradingMap& theta, const PosetAutomorphism& sigma) {
  if (sigma.size() != theta.poset().size()) throw InputError("automorphism size does not match the poset");
  const PosetAutomorphism inv = sigma.inverse();
  std::vector<GroupElement> out(theta.values().size());
  for (Index x = 0; x < out.size(); ++x) out[x] = theta[inv(x)];
  return GradingMap(theta.poset_ref(), theta.group_ref(), std::move(out));
}

GradingMap restrict(const GradingMap& theta, std::span<const Index> subset) {
  std::vector<Index> sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  PosetRef sub = make_poset_ref(theta.poset().induced(sorted));
  std::vector<GroupElement> values;
  for (Index x : sorted) values.push_back(theta[x]);
  return GradingMap(std::move(sub), theta.group_ref(), std::move(values));
}

std::uint64_t enumeration_size(const Poset& p, const FiniteGroup& g, std::uint64_t budget) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (total > budget / g.order())
      throw BudgetExceededError("|G|^|P| = " + std::to_string(g.order()) + "^" + std::to_string(p.size()) +
                                " exceeds the enumeration budget of " + std::to_string(budget));
    total *= g.order();
  }
  return total;
}

std::vector<GroupElement> decode_map(std::uint64_t code, std::size_t n, std::size_t order) {
  std::vector<GroupElement> theta(n);
  for (std::size_t i = n; i-- > 0;) {
    theta[i] = static_cast<GroupElement>(code % order);
    code /= order;
  }
  return theta;
}

std::uint64_t encode_map(std::span<const GroupElement> theta, std::size_t order) {
  std::uint64_t code = 0;
  for (GroupElement g : theta) code = code * order + g;
  return code;
}

namespace {

/// Odometer over G^k.
bool next_tuple(std::vector<GroupElement>& t, std::size_t order) {
  for (std::size_t i = t.size(); i-- > 0;) {
    if (++t[i] < order) return true;
    t[i] = 0;
  }
  return false;
}

std::uint64_t checked_power(std::uint64_t base, std::size_t exp) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && out > UINT64_MAX / base) throw BudgetExceededError("grading count overflows 64 bits");
    out *= base;
  }
  return out;
}

}  // namespace

CountReport count_distinct_gradings(const Poset& p, const FiniteGroup& g, bool verify, std::uint64_t budget) {
  const std::size_t n = p.size(), m = g.order();
  const auto comp = component_of(p);
  const std::size_t k = connected_components(p).size();
  CountReport report;
  report.formula = checked_power(m, n - k);
  if (!verify) return report;

  const std::uint64_t total = enumeration_size(p, g, budget);
  report.maps_enumerated = total;
  std::vector<bool> visited(total, false);
  std::set<std::vector<GroupElement>> signatures;
  std::vector<GroupElement> shifted(n);
  for (std::uint64_t code = 0; code < total; ++code) {
    const auto theta = decode_map(code, n, m);
    std::vector<GroupElement> sig;
    sig.reserve(p.comparable_pairs().size());
    for (const auto& [x, y] : p.comparable_pairs()) sig.push_back(g.multiply(g.inverse(theta[x]), theta[y]));
    signatures.insert(std::move(sig));
    if (visited[code]) continue;
    ++report.orbit_count;
    std::vector<GroupElement> h(k, 0);
    do {
      for (Index x = 0; x < n; ++x) shifted[x] = g.multiply(h[comp[x]], theta[x]);
      visited[encode_map(shifted, m)] = true;
    } while (next_tuple(h, m));
  }
  report.signature_count = signatures.size();
  report.verified = report.orbit_count == report.formula && report.signature_count == report.formula;
  return report;
}

bool certifies(const GradingMap& theta, const GradingMap& mu, const EquivalenceWitness& w) {
  require_compatible(theta, mu);
  const Poset& p = theta.poset();
  if (!is_automorphism(p, w.sigma.images())) return false;
  const auto comp = component_of(p);
  const std::size_t k = connected_components(p).size();
  if (w.shifts.size() != k) return false;
  const PosetAutomorphism inv = w.sigma.inverse();
  for (Index x = 0; x < p.size(); ++x)
    if (mu[x] != theta.group().multiply(w.shifts[comp[x]], theta[inv(x)])) return false;
  return true;
}

std::optional<EquivalenceWitness> equivalent(const GradingMap& theta, const GradingMap& mu,
                                             const std::vector<PosetAutomorphism>& automorphisms) {
  require_compatible(theta, mu);
  const Poset& p = theta.poset();
  const FiniteGroup& g = theta.group();
  const auto components = connected_components(p);
  const auto comp = component_of(p);
  for (const auto& sigma : automorphisms) {
    const GradingMap moved = act(theta, sigma);
    EquivalenceWitness w{std::vector<GroupElement>(components.size()), sigma};
    for (std::size_t c = 0; c < components.size(); ++c) {
      const Index anchor = components[c].front();
      w.shifts[c] = g.multiply(mu[anchor], g.inverse(moved[anchor]));
    }
    bool ok = true;
    for (Index x = 0; x < p.size() && ok; ++x) ok = mu[x] == g.multiply(w.shifts[comp[x]], moved[x]);
    if (ok) return w;
  }
  return std::nullopt;
}

std::optional<EquivalenceWitness> equivalent(const GradingMap& theta, const GradingMap& mu) {
  require_compatible(theta, mu);
  return equivalent(theta, mu, automorphisms(theta.poset()));
}

std::uint64_t burnside_count(const Poset& p, const FiniteGroup& g, std::uint64_t budget) {
  const std::size_t n = p.size(), m = g.order();
  const std::uint64_t total = enumeration_size(p, g, budget);
  const auto auts = automorphisms(p);
  const auto comp = component_of(p);
  const std::size_t k = connected_components(p).size();
  std::uint64_t fixed_sum = 0;
  std::uint64_t group_order = 0;
  std::vector<GroupElement> theta(n);
  for (const auto& sigma : auts) {
    const PosetAutomorphism inv = sigma.inverse();
    std::vector<GroupElement> h(k, 0);
    do {
      ++group_order;
      std::fill(theta.begin(), theta.end(), GroupElement{0});
      for (std::uint64_t code = 0; code < total; ++code) {
        bool fixed = true;
        for (Index x = 0; x < n && fixed; ++x) fixed = g.multiply(h[comp[x]], theta[inv(x)]) == theta[x];
        if (fixed) ++fixed_sum;
        next_tuple(theta, m);
      }
    } while (next_tuple(h, m));
  }
  if (fixed_sum % group_order != 0)
    throw Error("Burnside sum " + std::to_string(fixed_sum) + " is not divisible by the group order " +
                std::to_string(group_order));
  return fixed_sum / group_order;
}

Classification classify_gradings(const PosetRef& p, const GroupRef& g, std::uint64_t budget) {
  const std::size_t n = p->size(), m = g->order();
  const std::uint64_t total = enumeration_size(*p, *g, budget);
  const auto auts = automorphisms(*p);
  const auto comp = component_of(*p);
  const std::size_t k = connected_components(*p).size();
  Classification out;
  out.maps_enumerated = total;
  std::vector<bool> visited(total, false);
  std::vector<GroupElement> image(n);
  for (std::uint64_t code = 0; code < total; ++code) {
    if (visited[code]) continue;
    // Every smaller code has had its whole class marked, so this is the least member.
    const auto theta = decode_map(code, n, m);
    std::uint64_t size = 0;
    for (const auto& sigma : auts) {
      const PosetAutomorphism inv = sigma.inverse();
      std::vector<GroupElement> h(k, 0);
      do {
        for (Index x = 0; x < n; ++x) image[x] = g->multiply(h[comp[x]], theta[inv(x)]);
        const std::uint64_t c = encode_map(image, m);
        if (!visited[c]) {
          visited[c] = true;
          ++size;
        }
      } while (next_tuple(h, m));
    }
    out.representatives.emplace_back(p, g, theta);
    out.class_sizes.push_back(size);
  }
  out.burnside_count = burnside_count(*p, *g, budget);
  out.burnside_agrees = out.burnside_count == out.representatives.size();
  return out;
}

}  // namespace incgrade
