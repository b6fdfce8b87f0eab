#pragma once

// Multilinear graded polynomial identities of elementary gradings.
//
// A multilinear polynomial of type (g_1, ..., g_m) is a combination of the m!
// monomials x_π(1) ... x_π(m), where x_i has degree g_i. Its coefficient
// vector is indexed by the permutations in lexicographic order. The identities
// of one type form a subspace of Q^{m!} (an identity slice): the kernel of the
// evaluation map on substitutions x_i ↦ e_{u_i v_i} with e_{u_i v_i} in the
// g_i-component. Basis substitutions suffice by multilinearity.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "incgrade/algebra.hpp"
#include "incgrade/grading.hpp"
#include "incgrade/linalg.hpp"

namespace incgrade {

using Multidegree = std::vector<GroupElement>;
/// 0-based; the monomial x_{π[0]+1} x_{π[1]+1} ... x_{π[m-1]+1}.
using Permutation = std::vector<std::size_t>;
/// Substitution x_i ↦ e_{pairs[i]}.
using Substitution = std::vector<Pair>;

inline constexpr std::size_t kDefaultDegreeCap = 4;

/// All permutations of 0..m-1 in lexicographic order.
std::vector<Permutation> lex_permutations(std::size_t m);

class MultilinearPolynomial {
 public:
  MultilinearPolynomial(GroupRef group, Multidegree multidegree);

  /// From a coefficient vector indexed like lex_permutations(m).
  static MultilinearPolynomial from_coefficients(GroupRef group, Multidegree multidegree,
                                                 std::span<const Rational> coefficients);

  const FiniteGroup& group() const { return *group_; }
  const GroupRef& group_ref() const { return group_; }
  const Multidegree& multidegree() const { return multidegree_; }
  std::size_t degree() const { return multidegree_.size(); }

  /// Adds k to the coefficient of the monomial π; zero coefficients are dropped.
  void add_term(const Permutation& perm, const Rational& k);
  const std::map<Permutation, Rational>& terms() const { return terms_; }

  std::vector<Rational> coefficient_vector() const;

  friend bool operator==(const MultilinearPolynomial& a, const MultilinearPolynomial& b) {
    return a.multidegree_ == b.multidegree_ && a.terms_ == b.terms_ && *a.group_ == *b.group_;
  }

 private:
  GroupRef group_;
  Multidegree multidegree_;
  std::map<Permutation, Rational> terms_;
};

/// Σ_π coeff(π) e_{sub[π0]} ... e_{sub[π(m-1)]}. Throws DegreeMismatchError if
/// the substitution has the wrong length or some pair has the wrong degree.
IncidenceFunction evaluate(const MultilinearPolynomial& phi, const GradingMap& theta, const Substitution& sub);

struct IdentitySlice {
  Multidegree multidegree;
  RationalMatrix basis;  // canonical echelon rows spanning the slice
  std::size_t evaluation_rank = 0;
  std::uint64_t substitutions = 0;

  std::size_t dimension() const { return basis.rows(); }
};

/// The slice of identities of type `multidegree`. Throws CapExceededError if
/// the degree exceeds `cap`, InputError for an empty multidegree.
IdentitySlice identity_slice(const GradingMap& theta, const Multidegree& multidegree,
                             std::size_t cap = kDefaultDegreeCap);

/// Every tuple over `alphabet` of length 1..max_length, shortest first, each
/// length in lexicographic order.
std::vector<Multidegree> multidegrees_over(std::span<const GroupElement> alphabet, std::size_t max_length);

struct SliceComparison {
  bool equal = true;
  std::optional<Multidegree> first_difference;
  std::size_t multidegrees_compared = 0;
};

/// Compares slices of every type of length <= max_degree over G_θ ∪ G_μ ∪ {1};
/// other types are vacuous on both sides.
SliceComparison slices_equal_upto(const GradingMap& theta, const GradingMap& mu, std::size_t max_degree,
                                  std::size_t cap = kDefaultDegreeCap);

struct ChainReductionReport {
  bool holds = false;             // whole slice == ∩ chain slices
  bool contained_in_chains = false;  // whole slice ⊆ each chain slice
  std::size_t whole_dimension = 0;
  std::size_t intersection_dimension = 0;
  std::vector<Chain> chains;
  std::vector<std::size_t> chain_dimensions;
};

/// Computes the slice for the whole poset and for θ restricted to every
/// maximal chain, and compares the whole slice with the intersection.
ChainReductionReport verify_chain_reduction(const GradingMap& theta, const Multidegree& multidegree,
                                            std::size_t cap = kDefaultDegreeCap);

/// True iff x_1 ... x_m of type `multidegree` vanishes under every substitution.
bool monomial_vanishes(const GradingMap& theta, const Multidegree& multidegree);

/// All types of length 1..max_degree over G whose monomial x_1...x_m is an identity.
std::vector<Multidegree> monomial_identities(const GradingMap& theta, std::size_t max_degree,
                                             std::size_t cap = kDefaultDegreeCap);

struct UnseparatedPair {
  std::size_t first = 0, second = 0;  // indices into the representatives
  bool separated_by_slices = false;
  std::optional<Multidegree> slice_difference;
};

struct TransitivityCheckReport {
  bool chain_transitive = false;
  std::size_t max_degree = 0;
  std::vector<GradingMap> representatives;
  std::size_t pairs_checked = 0;
  std::size_t separated_by_monomials = 0;
  /// Pairs with identical monomial identities up to max_degree, each escalated
  /// to a full slice comparison.
  std::vector<UnseparatedPair> unseparated;

  /// Pairs separated by neither monomials nor slices.
  std::size_t counterexamples() const;
};

/// For every pair of inequivalent grading representatives, compares their
/// monomial identities up to `max_degree`; pairs that agree are escalated to
/// slices_equal_upto. Throws PreconditionError unless Aut(P) is transitive on
/// the maximal chains.
TransitivityCheckReport chain_transitivity_identity_check(const PosetRef& p, const GroupRef& g,
                                                          std::size_t max_degree,
                                                          std::uint64_t budget = kDefaultEnumerationBudget,
                                                          std::size_t cap = kDefaultDegreeCap);

}  // namespace incgrade
