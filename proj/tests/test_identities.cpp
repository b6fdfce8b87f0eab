#include <gtest/gtest.h>

#include <algorithm>

#include "incgrade/corpus.hpp"
#include "incgrade/errors.hpp"
#include "incgrade/identities.hpp"
#include "incgrade/random.hpp"
#include "oracles.hpp"

using namespace incgrade;

namespace {

PosetRef corpus(const std::string& name) { return make_poset_ref(corpus_poset(name)); }
GroupRef group(const std::string& spec) { return make_group_ref(group_from_spec(spec)); }

Multidegree md(const FiniteGroup& g, const std::string& csv) {
  Multidegree out;
  for (const auto& n : split_top_level(csv)) out.push_back(g.parse_element(n));
  return out;
}

std::vector<Rational> row(const RationalMatrix& m, std::size_t r) {
  auto s = m.row(r);
  return {s.begin(), s.end()};
}

}  // namespace

TEST(Evaluate, Values) {
  const auto c3 = corpus("c3");
  const auto g = group("C1");
  const auto theta = GradingMap::parse(c3, g, "1,1,1");
  MultilinearPolynomial x1x2(g, {0, 0});
  x1x2.add_term({0, 1}, 1);
  EXPECT_EQ(evaluate(x1x2, theta, {{0, 1}, {1, 2}}), e_basis(c3, 0, 2));
  EXPECT_TRUE(evaluate(x1x2, theta, {{0, 1}, {0, 1}}).is_zero());
  MultilinearPolynomial comm(g, {0, 0});
  comm.add_term({0, 1}, 1);
  comm.add_term({1, 0}, -1);
  EXPECT_TRUE(evaluate(comm, theta, {{1, 1}, {2, 2}}).is_zero());
  EXPECT_THROW(evaluate(comm, theta, {{0, 1}}), DegreeMismatchError);

  const auto c2g = group("C2");
  const auto graded = GradingMap::parse(corpus("c2"), c2g, "1,h");
  MultilinearPolynomial p(c2g, {0});
  p.add_term({0}, 1);
  EXPECT_THROW(evaluate(p, graded, {{0, 1}}), DegreeMismatchError);
}

TEST(Slice, Values) {
  const auto c1 = group("C1");
  const auto ut2 = GradingMap::parse(corpus("c2"), c1, "1,1");
  EXPECT_EQ(identity_slice(ut2, {0, 0}).dimension(), 0u);
  EXPECT_EQ(identity_slice(ut2, {0, 0}).evaluation_rank, 2u);

  const auto s4 = identity_slice(ut2, {0, 0, 0, 0});
  EXPECT_TRUE(span_contains(s4.basis, oracle::commutator_product()));
  EXPECT_EQ(s4.dimension(), oracle::slice_dimension(ut2, {0, 0, 0, 0}));

  const auto c3 = group("C3");
  const auto theta = GradingMap::parse(corpus("example"), c3, "1,h,h^2,1");
  // h^2 has only (p2,p4); h·h·h^2-type slices with an empty component are full.
  const auto hh = identity_slice(theta, md(*c3, "h,h"));
  EXPECT_EQ(hh.dimension(), 2u);  // x1x2 and x2x1 both vanish: e_{p2p3}^2 = 0
  EXPECT_EQ(hh.substitutions, 1u);
  const auto c2 = group("C2");
  const auto vac = identity_slice(GradingMap::parse(corpus("c3"), c2, "1,1,1"), {1, 0, 0});
  EXPECT_EQ(vac.dimension(), 6u);
  EXPECT_THROW(identity_slice(theta, {}), InputError);
  EXPECT_THROW(identity_slice(theta, {0, 0, 0, 0, 0}), CapExceededError);
}

TEST(Compare, Values) {
  const auto c3 = group("C3");
  const auto ex = corpus("example");
  const auto theta = GradingMap::parse(ex, c3, "1,h,h^2,1");
  const auto mu = GradingMap::parse(ex, c3, "1,h^2,h,1");
  EXPECT_TRUE(slices_equal_upto(theta, theta, 3).equal);
  EXPECT_TRUE(slices_equal_upto(theta, mu, 3).equal);

  const auto c2 = group("C2");
  const auto r = slices_equal_upto(GradingMap::parse(corpus("c2"), c2, "1,1"), GradingMap::parse(corpus("c2"), c2, "1,h"), 1);
  EXPECT_FALSE(r.equal);
  EXPECT_EQ(r.first_difference, (Multidegree{1}));
}

TEST(ChainReduction, Values) {
  const auto c3 = group("C3");
  const auto theta = GradingMap::parse(corpus("example"), c3, "1,h,h^2,1");
  const auto r = verify_chain_reduction(theta, {0, 0});
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.chains.size(), 3u);
  Rng rng(9);
  const auto d = corpus("diamond");
  for (int t = 0; t < 5; ++t) EXPECT_TRUE(verify_chain_reduction(random_grading(d, c3, rng), {0, 0, 0}).holds);
  const auto chain = verify_chain_reduction(GradingMap::parse(corpus("c3"), c3, "1,h,1"), {0, 1});
  EXPECT_TRUE(chain.holds);
  EXPECT_EQ(chain.whole_dimension, chain.intersection_dimension);
}

TEST(Monomials, Values) {
  const auto c2 = group("C2");
  const auto trivial = GradingMap::parse(corpus("c2"), c2, "1,1");
  const auto ids = monomial_identities(trivial, 2);
  EXPECT_TRUE(std::find(ids.begin(), ids.end(), Multidegree{1}) != ids.end());
  EXPECT_TRUE(std::find(ids.begin(), ids.end(), Multidegree{0, 0}) == ids.end());
  EXPECT_TRUE(monomial_vanishes(GradingMap::parse(corpus("c2"), c2, "1,h"), {1, 1}));
  const auto alt = GradingMap::parse(corpus("c3"), c2, "1,h,1");
  EXPECT_TRUE(monomial_vanishes(alt, {1, 1, 1}));
  // e12 e22 e23 = e13, so x^h y^1 z^h is not an identity.
  EXPECT_FALSE(monomial_vanishes(alt, {1, 0, 1}));
  EXPECT_FALSE(oracle::monomial_vanishes(alt, {1, 0, 1}));
}

TEST(TransitivityCheck, SmallCases) {
  const auto c2 = group("C2");
  const auto r2 = chain_transitivity_identity_check(corpus("c2"), c2, 2);
  EXPECT_EQ(r2.representatives.size(), 2u);
  EXPECT_EQ(r2.separated_by_monomials, 1u);
  EXPECT_EQ(chain_transitivity_identity_check(corpus("c1"), c2, 1).pairs_checked, 0u);
  EXPECT_THROW(chain_transitivity_identity_check(corpus("example"), c2, 2), PreconditionError);

  // C_3 over C2: every pair is separated by slices, but (1,1,h) and (1,h,h)
  // have the same monomial identities up to degree 3.
  const auto r3 = chain_transitivity_identity_check(corpus("c3"), c2, 3);
  EXPECT_EQ(r3.representatives.size(), 4u);
  EXPECT_EQ(r3.counterexamples(), 0u);
  ASSERT_EQ(r3.unseparated.size(), 1u);
  const auto& u = r3.unseparated[0];
  EXPECT_EQ(r3.representatives[u.first].to_csv(), "1,1,h");
  EXPECT_EQ(r3.representatives[u.second].to_csv(), "1,h,h");
  EXPECT_TRUE(u.separated_by_slices);
}

TEST(TransitivityCheck, MonomialCoincidenceConfirmedByBruteForce) {
  const auto c2 = group("C2");
  const auto c3 = corpus("c3");
  const auto a = GradingMap::parse(c3, c2, "1,1,h");
  const auto b = GradingMap::parse(c3, c2, "1,h,h");
  for (const auto& m : multidegrees_over(std::vector<GroupElement>{0, 1}, 3))
    EXPECT_EQ(oracle::monomial_vanishes(a, m), oracle::monomial_vanishes(b, m));
  // Some identity of one grading fails for the other.
  bool separated = false;
  for (const auto& m : multidegrees_over(std::vector<GroupElement>{0, 1}, 3))
    for (const auto& [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
      const auto s = identity_slice(x, m);
      for (std::size_t r = 0; r < s.dimension(); ++r)
        if (oracle::is_identity(x, m, row(s.basis, r)) && !oracle::is_identity(y, m, row(s.basis, r))) separated = true;
    }
  EXPECT_TRUE(separated);
}

class CorpusSlices : public ::testing::TestWithParam<std::string> {};

TEST_P(CorpusSlices, AgreeWithFullEvaluation) {
  const auto p = corpus(GetParam());
  for (const std::string spec : {"C1", "C2", "C3"}) {
    const auto g = group(spec);
    Rng rng(p->size() * 31 + g->order());
    std::vector<GroupElement> all(g->order());
    for (GroupElement e = 0; e < g->order(); ++e) all[e] = e;
    for (int t = 0; t < 3; ++t) {
      const auto theta = random_grading(p, g, rng);
      for (const auto& m : multidegrees_over(all, 3)) {
        const auto s = identity_slice(theta, m);
        ASSERT_EQ(s.dimension(), oracle::slice_dimension(theta, m));
        for (std::size_t r = 0; r < s.dimension(); ++r) EXPECT_TRUE(oracle::is_identity(theta, m, row(s.basis, r)));
        // A vector outside the slice is caught by some substitution.
        if (s.dimension() < s.basis.cols()) {
          std::vector<Rational> v(s.basis.cols());
          do
            for (auto& q : v) q = random_int(rng, -2, 2);
          while (span_contains(s.basis, v));
          EXPECT_FALSE(oracle::is_identity(theta, m, v));
        }
        EXPECT_EQ(monomial_vanishes(theta, m), oracle::monomial_vanishes(theta, m));
        const auto red = verify_chain_reduction(theta, m);
        EXPECT_TRUE(red.holds);
        EXPECT_TRUE(red.contained_in_chains);
      }
      const auto mu = random_grading(p, g, rng);
      if (equivalent(theta, mu)) EXPECT_TRUE(slices_equal_upto(theta, mu, 3).equal);
      const auto moved = act(theta, random_automorphism(*p, rng));
      EXPECT_TRUE(slices_equal_upto(theta, moved, 3).equal);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Corpus, CorpusSlices, ::testing::ValuesIn(corpus_names()),
                         [](const auto& info) { return info.param; });

TEST(Polynomial, CoefficientsRoundTrip) {
  const auto g = group("C2");
  const auto c = oracle::commutator_product();
  const auto p = MultilinearPolynomial::from_coefficients(g, {0, 0, 0, 0}, c);
  EXPECT_EQ(p.terms().size(), 4u);
  EXPECT_EQ(p.coefficient_vector(), c);
  EXPECT_THROW(MultilinearPolynomial(g, {0, 0}).add_term({0, 0}, 1), InputError);
  EXPECT_EQ(lex_permutations(3).size(), 6u);
  EXPECT_EQ(lex_permutations(3)[1], (Permutation{0, 2, 1}));
}
