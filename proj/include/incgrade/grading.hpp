#pragma once

// Elementary G-gradings on incidence algebras. A map θ: P → G puts e_xy in
// degree θ_x⁻¹θ_y; the homogeneous component A^θ(g) is spanned by the basis
// elements of degree g.
//
// Two actions act on G^P: the per-component left shift (hθ)(x) = h_i θ(x) for
// x in the i-th connected component, and Aut(P) on the right,
// (θσ)(x) = θ(σ⁻¹ x). Shifts do not change the grading; θ ~ μ iff
// μ = hθσ for some h and σ.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "incgrade/algebra.hpp"
#include "incgrade/group.hpp"
#include "incgrade/poset.hpp"

namespace incgrade {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 1'000'000;

class GradingMap {
 public:
  /// Throws InputError if theta has the wrong length or an out-of-range element.
  GradingMap(PosetRef poset, GroupRef group, std::vector<GroupElement> theta);

  /// θ from comma-separated element names, e.g. "1,h,h^2,1".
  static GradingMap parse(PosetRef poset, GroupRef group, std::string_view csv);

  const Poset& poset() const { return *poset_; }
  const PosetRef& poset_ref() const { return poset_; }
  const FiniteGroup& group() const { return *group_; }
  const GroupRef& group_ref() const { return group_; }

  const std::vector<GroupElement>& values() const { return theta_; }
  GroupElement operator[](Index x) const { return theta_[x]; }

  /// Element names joined by commas.
  std::string to_csv() const;

  friend bool operator==(const GradingMap& a, const GradingMap& b);

 private:
  PosetRef poset_;
  GroupRef group_;
  std::vector<GroupElement> theta_;
};

/// θ_x⁻¹ θ_y. Throws NotComparableError unless x ⪯ y.
GroupElement grade_of_pair(const GradingMap& theta, Index x, Index y);

/// G_θ = {θ_x⁻¹θ_y | x ⪯ y}, ascending.
std::vector<GroupElement> support(const GradingMap& theta);

struct GradedComponent {
  GroupElement degree;
  std::vector<Pair> basis;  // lexicographic
};

GradedComponent component_basis(const GradingMap& theta, GroupElement g);

/// One component per group element, in group-element order.
std::vector<GradedComponent> homogeneous_components(const GradingMap& theta);

/// True iff θ and μ put every basis element in the same degree.
bool same_grading(const GradingMap& theta, const GradingMap& mu);

/// hθ with one shift per connected component (see connected_components()).
GradingMap shift_components(const GradingMap& theta, const std::vector<GroupElement>& shifts);

/// θσ, (θσ)(x) = θ(σ⁻¹ x).
GradingMap act(const GradingMap& theta, const PosetAutomorphism& sigma);

/// θ restricted to the induced subposet on `subset`.
GradingMap restrict(const GradingMap& theta, std::span<const Index> subset);

struct CountReport {
  std::uint64_t formula = 0;  // |G|^(n-k)
  bool verified = false;
  std::uint64_t maps_enumerated = 0;
  std::uint64_t orbit_count = 0;      // G^k-orbits on G^P
  std::uint64_t signature_count = 0;  // distinct degree assignments to basis elements
};

/// |G|^(n-k). With `verify`, also enumerates G^P, counts G^k-shift orbits and
/// distinct gradings, and sets `verified` when both agree with the formula.
/// Throws BudgetExceededError if verification would exceed `budget` maps.
CountReport count_distinct_gradings(const Poset& p, const FiniteGroup& g, bool verify,
                                    std::uint64_t budget = kDefaultEnumerationBudget);

struct EquivalenceWitness {
  std::vector<GroupElement> shifts;  // one per connected component
  PosetAutomorphism sigma;
};

/// True iff μ(x) = h_i θ(σ⁻¹ x) for every x (x in component i).
bool certifies(const GradingMap& theta, const GradingMap& mu, const EquivalenceWitness& w);

/// A witness for θ ~ μ if one exists. Tries each σ ∈ Aut(P) in order, anchors
/// each component at its least element and checks the induced shift globally.
/// Throws MismatchError if θ and μ use different posets or groups.
std::optional<EquivalenceWitness> equivalent(const GradingMap& theta, const GradingMap& mu);
std::optional<EquivalenceWitness> equivalent(const GradingMap& theta, const GradingMap& mu,
                                             const std::vector<PosetAutomorphism>& automorphisms);

struct Classification {
  std::vector<GradingMap> representatives;  // lexicographically least of each class
  std::vector<std::uint64_t> class_sizes;
  std::uint64_t maps_enumerated = 0;
  std::uint64_t burnside_count = 0;
  bool burnside_agrees = false;
};

/// Enumerates G^P and splits it into ~-classes under G^k × Aut(P), then
/// cross-checks the class count with burnside_count().
Classification classify_gradings(const PosetRef& p, const GroupRef& g,
                                 std::uint64_t budget = kDefaultEnumerationBudget);

/// Burnside count over G^k × Aut(P): the average number of θ with hθσ = θ.
std::uint64_t burnside_count(const Poset& p, const FiniteGroup& g, std::uint64_t budget = kDefaultEnumerationBudget);

/// |G|^|P|, throwing BudgetExceededError above `budget`.
std::uint64_t enumeration_size(const Poset& p, const FiniteGroup& g, std::uint64_t budget);

/// Decodes the code-th map of G^P in lexicographic order (θ_0 most significant).
std::vector<GroupElement> decode_map(std::uint64_t code, std::size_t n, std::size_t order);
std::uint64_t encode_map(std::span<const GroupElement> theta, std::size_t order);

}  // namespace incgrade
