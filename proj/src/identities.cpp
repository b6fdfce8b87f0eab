#include "incgrade/identities.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "incgrade/errors.hpp"

namespace incgrade {

std::vector<Permutation> lex_permutations(std::size_t m) {
  std::vector<Permutation> out;
  Permutation p(m);
  std::iota(p.begin(), p.end(), std::size_t{0});
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

MultilinearPolynomial::MultilinearPolynomial(GroupRef group, Multidegree multidegree)
    : group_(std::move(group)), multidegree_(std::move(multidegree)) {
  if (multidegree_.empty()) throw InputError("a multilinear polynomial needs at least one variable");
  for (GroupElement g : multidegree_)
    if (g >= group_->order()) throw InputError("multidegree entry out of range for " + group_->spec());
}

MultilinearPolynomial MultilinearPolynomial::from_coefficients(GroupRef group, Multidegree multidegree,
                                                               std::span<const Rational> coefficients) {
  MultilinearPolynomial phi(std::move(group), std::move(multidegree));
  const auto perms = lex_permutations(phi.degree());
  if (coefficients.size() != perms.size())
    throw DimensionMismatchError("expected " + std::to_string(perms.size()) + " coefficients");
  for (std::size_t i = 0; i < perms.size(); ++i) phi.add_term(perms[i], coefficients[i]);
  return phi;
}

void MultilinearPolynomial::add_term(const Permutation& perm, const Rational& k) {
  Permutation sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  bool valid = sorted.size() == degree();
  for (std::size_t i = 0; i < sorted.size() && valid; ++i) valid = sorted[i] == i;
  if (!valid) throw InputError("term is not a permutation of the " + std::to_string(degree()) + " variables");
  Rational& c = terms_[perm];
  c += k;
  if (sgn(c) == 0) terms_.erase(perm);
}

std::vector<Rational> MultilinearPolynomial::coefficient_vector() const {
  const auto perms = lex_permutations(degree());
  std::vector<Rational> v(perms.size());
  for (std::size_t i = 0; i < perms.size(); ++i)
    if (auto it = terms_.find(perms[i]); it != terms_.end()) v[i] = it->second;
  return v;
}

namespace {

/// The pair e_{sub[π0]}···e_{sub[π(m-1)]} equals, or nothing if the product vanishes.
std::optional<Pair> monomial_value(const Permutation& perm, const Substitution& sub) {
  for (std::size_t i = 0; i + 1 < perm.size(); ++i)
    if (sub[perm[i]].second != sub[perm[i + 1]].first) return std::nullopt;
  return Pair{sub[perm.front()].first, sub[perm.back()].second};
}

void check_degree(std::size_t m, std::size_t cap) {
  if (m == 0) throw InputError("multidegree must be nonempty");
  if (m > cap)
    throw CapExceededError("degree " + std::to_string(m) + " exceeds the configured cap of " + std::to_string(cap));
}

}  // namespace

IncidenceFunction evaluate(const MultilinearPolynomial& phi, const GradingMap& theta, const Substitution& sub) {
  if (!(phi.group() == theta.group())) throw MismatchError("polynomial and grading use different groups");
  if (sub.size() != phi.degree())
    throw DegreeMismatchError("substitution has " + std::to_string(sub.size()) + " entries for a polynomial of degree " +
                              std::to_string(phi.degree()));
  for (std::size_t i = 0; i < sub.size(); ++i)
    if (grade_of_pair(theta, sub[i].first, sub[i].second) != phi.multidegree()[i])
      throw DegreeMismatchError("substituted element for x" + std::to_string(i + 1) + " has the wrong degree");
  IncidenceFunction out(theta.poset_ref());
  for (const auto& [perm, coeff] : phi.terms())
    if (auto value = monomial_value(perm, sub)) out.add(value->first, value->second, coeff);
  return out;
}

IdentitySlice identity_slice(const GradingMap& theta, const Multidegree& multidegree, std::size_t cap) {
  const std::size_t m = multidegree.size();
  check_degree(m, cap);
  for (GroupElement g : multidegree)
    if (g >= theta.group().order()) throw InputError("multidegree entry out of range");
  const auto perms = lex_permutations(m);
  const auto components = homogeneous_components(theta);

  IdentitySlice slice{multidegree, {}, 0, 0};
  RowReducer reducer(perms.size());
  std::vector<const std::vector<Pair>*> bases;
  bool vacuous = false;
  for (GroupElement g : multidegree) {
    bases.push_back(&components[g].basis);
    vacuous = vacuous || components[g].basis.empty();
  }
  if (!vacuous) {
    std::set<std::vector<bool>> seen_rows;
    std::vector<std::size_t> choice(m, 0);
    Substitution sub(m);
    std::vector<Rational> row(perms.size());
    do {
      ++slice.substitutions;
      for (std::size_t i = 0; i < m; ++i) sub[i] = (*bases[i])[choice[i]];
      // One row per output coordinate e_ab: the monomials evaluating to e_ab.
      std::map<Pair, std::vector<bool>> rows;
      for (std::size_t c = 0; c < perms.size(); ++c)
        if (auto value = monomial_value(perms[c], sub)) {
          auto& r = rows[*value];
          r.resize(perms.size());
          r[c] = true;
        }
      for (auto& [coord, pattern] : rows) {
        if (!seen_rows.insert(pattern).second) continue;
        for (std::size_t c = 0; c < perms.size(); ++c) row[c] = pattern[c] ? 1 : 0;
        reducer.add_row(row);
      }
      if (reducer.full()) break;
      std::size_t i = m;
      while (i-- > 0) {
        if (++choice[i] < bases[i]->size()) break;
        choice[i] = 0;
      }
      if (i == static_cast<std::size_t>(-1)) break;
    } while (true);
  }
  slice.evaluation_rank = reducer.rank();
  slice.basis = nullspace(reducer.basis());
  return slice;
}

std::vector<Multidegree> multidegrees_over(std::span<const GroupElement> alphabet, std::size_t max_length) {
  std::vector<Multidegree> out;
  if (alphabet.empty()) return out;
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<std::size_t> digits(len, 0);
    while (true) {
      Multidegree md(len);
      for (std::size_t i = 0; i < len; ++i) md[i] = alphabet[digits[i]];
      out.push_back(std::move(md));
      std::size_t i = len;
      while (i-- > 0) {
        if (++digits[i] < alphabet.size()) break;
        digits[i] = 0;
      }
      if (i == static_cast<std::size_t>(-1)) break;
    }
  }
  return out;
}

SliceComparison slices_equal_upto(const GradingMap& theta, const GradingMap& mu, std::size_t max_degree,
                                  std::size_t cap) {
  if (!same_poset(theta.poset_ref(), mu.poset_ref()) || !(theta.group() == mu.group()))
    throw MismatchError("slice comparison needs gradings on the same poset and group");
  if (max_degree > cap)
    throw CapExceededError("degree " + std::to_string(max_degree) + " exceeds the configured cap of " +
                           std::to_string(cap));
  std::set<GroupElement> letters{theta.group().identity()};
  for (GroupElement g : support(theta)) letters.insert(g);
  for (GroupElement g : support(mu)) letters.insert(g);
  const std::vector<GroupElement> alphabet(letters.begin(), letters.end());
  SliceComparison result;
  for (const auto& md : multidegrees_over(alphabet, max_degree)) {
    ++result.multidegrees_compared;
    if (identity_slice(theta, md, cap).basis != identity_slice(mu, md, cap).basis) {
      result.equal = false;
      result.first_difference = md;
      return result;
    }
  }
  return result;
}

ChainReductionReport verify_chain_reduction(const GradingMap& theta, const Multidegree& multidegree, std::size_t cap) {
  ChainReductionReport report;
  const IdentitySlice whole = identity_slice(theta, multidegree, cap);
  report.whole_dimension = whole.dimension();
  report.chains = maximal_chains(theta.poset());
  report.contained_in_chains = true;
  std::optional<RationalMatrix> intersection;
  for (const auto& chain : report.chains) {
    const IdentitySlice on_chain = identity_slice(restrict(theta, chain.indices), multidegree, cap);
    report.chain_dimensions.push_back(on_chain.dimension());
    report.contained_in_chains = report.contained_in_chains && subspace_contains(on_chain.basis, whole.basis);
    intersection = intersection ? subspace_intersect(*intersection, on_chain.basis) : rref(on_chain.basis);
  }
  report.intersection_dimension = intersection->rows();
  report.holds = subspace_equal(whole.basis, *intersection);
  return report;
}

bool monomial_vanishes(const GradingMap& theta, const Multidegree& multidegree) {
  const Poset& p = theta.poset();
  const auto components = homogeneous_components(theta);
  // reach[v]: some product of the first i substituted basis elements ends at v.
  std::vector<bool> reach(p.size(), true);
  bool first = true;
  for (GroupElement g : multidegree) {
    std::vector<bool> next(p.size(), false);
    for (const auto& [u, v] : components.at(g).basis)
      if (first || reach[u]) next[v] = true;
    reach = std::move(next);
    first = false;
  }
  return std::none_of(reach.begin(), reach.end(), [](bool b) { return b; });
}

std::vector<Multidegree> monomial_identities(const GradingMap& theta, std::size_t max_degree, std::size_t cap) {
  check_degree(max_degree, cap);
  std::vector<GroupElement> alphabet(theta.group().order());
  std::iota(alphabet.begin(), alphabet.end(), GroupElement{0});
  std::vector<Multidegree> out;
  for (auto& md : multidegrees_over(alphabet, max_degree))
    if (monomial_vanishes(theta, md)) out.push_back(std::move(md));
  return out;
}

std::size_t TransitivityCheckReport::counterexamples() const {
  return static_cast<std::size_t>(
      std::count_if(unseparated.begin(), unseparated.end(), [](const auto& u) { return !u.separated_by_slices; }));
}

TransitivityCheckReport chain_transitivity_identity_check(const PosetRef& p, const GroupRef& g,
                                                          std::size_t max_degree, std::uint64_t budget,
                                                          std::size_t cap) {
  TransitivityCheckReport report;
  report.chain_transitive = is_chain_transitive(*p).transitive;
  if (!report.chain_transitive)
    throw PreconditionError("Aut(P) does not act transitively on the maximal chains");
  report.max_degree = max_degree;
  report.representatives = classify_gradings(p, g, budget).representatives;
  const auto& reps = report.representatives;
  std::vector<std::vector<Multidegree>> monomials;
  for (const auto& theta : reps) monomials.push_back(monomial_identities(theta, max_degree, cap));
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j) {
      ++report.pairs_checked;
      if (monomials[i] != monomials[j]) {
        ++report.separated_by_monomials;
        continue;
      }
      const SliceComparison cmp = slices_equal_upto(reps[i], reps[j], max_degree, cap);
      report.unseparated.push_back({i, j, !cmp.equal, cmp.first_difference});
    }
  return report;
}

}  // namespace incgrade
