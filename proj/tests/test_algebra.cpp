#include <gtest/gtest.h>

#include "incgrade/algebra.hpp"
#include "incgrade/corpus.hpp"
#include "incgrade/errors.hpp"
#include "incgrade/random.hpp"
#include "oracles.hpp"

using namespace incgrade;

namespace {

PosetRef corpus(const char* name) { return make_poset_ref(corpus_poset(name)); }

IncidenceFunction fn(const PosetRef& p, std::vector<std::tuple<Index, Index, long>> entries) {
  IncidenceFunction f(p);
  for (auto [x, y, v] : entries) f.set(x, y, v);
  return f;
}

}  // namespace

TEST(Basis, Products) {
  const auto c2 = corpus("c2");
  EXPECT_EQ(e_basis(c2, 0, 1) * e_basis(c2, 1, 1), e_basis(c2, 0, 1));
  // e_xx f e_yy = f(x,y) e_xy
  Rng rng(2);
  const auto f = random_function(c2, rng);
  EXPECT_EQ(e_basis(c2, 0, 0) * f * e_basis(c2, 1, 1), f(0, 1) * e_basis(c2, 0, 1));
  EXPECT_TRUE((e_basis(c2, 0, 1) * e_basis(c2, 0, 1)).is_zero());
  EXPECT_THROW(e_basis(c2, 1, 0), NotComparableError);
}

TEST(Convolution, Values) {
  const auto c2 = corpus("c2");
  EXPECT_EQ((zeta(c2) * zeta(c2))(0, 1), 2);
  const auto a = corpus("antichain3");
  const auto f = fn(a, {{0, 0, 2}, {1, 1, 3}}), g = fn(a, {{0, 0, 5}, {2, 2, 7}});
  EXPECT_EQ(f * g, fn(a, {{0, 0, 10}}));
  EXPECT_THROW(zeta(c2) * zeta(corpus("c3")), PosetMismatchError);
}

TEST(Hadamard, Values) {
  const auto c3 = corpus("c3");
  Rng rng(5);
  const auto f = random_function(c3, rng), g = random_function(c3, rng);
  EXPECT_EQ(hadamard(zeta(c3), f), f);
  EXPECT_EQ(hadamard(f, g), hadamard(g, f));
  EXPECT_TRUE(hadamard(e_basis(c3, 0, 1), e_basis(c3, 1, 2)).is_zero());
}

TEST(Invert, Values) {
  const auto c2 = corpus("c2"), c3 = corpus("c3");
  EXPECT_EQ(invert(delta(c3)), delta(c3));
  EXPECT_EQ(invert(zeta(c2)), fn(c2, {{0, 0, 1}, {1, 1, 1}, {0, 1, -1}}));
  const auto mu = invert(zeta(c3));
  EXPECT_EQ(mu(0, 2), 0);
  EXPECT_EQ(mu(0, 1), -1);
  EXPECT_EQ(mu(1, 2), -1);
  EXPECT_THROW(invert(e_basis(c2, 0, 1)), NotInvertibleError);
}

TEST(Mobius, DiamondAndBooleanLattice) {
  // Möbius function of the diamond: μ(bot,top) = 1.
  const auto d = corpus("diamond");
  EXPECT_EQ(invert(zeta(d))(0, 3), 1);
}

TEST(Multiplicative, Values) {
  const auto c3 = corpus("c3");
  EXPECT_TRUE(is_multiplicative(zeta(c3)));
  auto s = fn(c3, {{0, 0, 1}, {1, 1, 1}, {2, 2, 1}, {0, 1, 2}, {1, 2, 3}, {0, 2, 6}});
  EXPECT_TRUE(is_multiplicative(s));
  s.set(0, 2, 5);
  EXPECT_FALSE(is_multiplicative(s));
  EXPECT_THROW(mult_auto(s), NotMultiplicativeError);
}

TEST(Morphisms, Values) {
  const auto c2 = corpus("c2");
  EXPECT_EQ(inner_auto(delta(c2)), AlgebraMorphism::identity(c2));
  EXPECT_EQ(mult_auto(zeta(c2)), AlgebraMorphism::identity(c2));
  const auto r = delta(c2) + e_basis(c2, 0, 1);
  EXPECT_EQ(inner_auto(r).image(1, 1), e_basis(c2, 1, 1) + e_basis(c2, 0, 1));
  const auto a2 = corpus("antichain2");
  EXPECT_EQ(induced_auto(a2, PosetAutomorphism({1, 0})).image(0, 0), e_basis(a2, 1, 1));
  EXPECT_EQ(induced_auto(c2, PosetAutomorphism::identity(2)), AlgebraMorphism::identity(c2));
}

TEST(Decompose, PureInducedAndInner) {
  const auto a2 = corpus("antichain2");
  const PosetAutomorphism swap({1, 0});
  const auto d = decompose_automorphism(induced_auto(a2, swap));
  EXPECT_EQ(d.sigma, swap);
  EXPECT_EQ(d.r, delta(a2));
  EXPECT_EQ(d.s, zeta(a2));

  const auto c2 = corpus("c2");
  const auto phi = inner_auto(delta(c2) + e_basis(c2, 0, 1));
  const auto e = decompose_automorphism(phi);
  EXPECT_TRUE(e.sigma.is_identity());
  EXPECT_EQ(recompose(e), phi);
}

TEST(Decompose, RejectsNonAutomorphisms) {
  const auto c2 = corpus("c2");
  AlgebraMorphism zero(c2);
  EXPECT_THROW(decompose_automorphism(zero), NotAutomorphismError);
  EXPECT_FALSE(is_algebra_automorphism(zero));
}

class CorpusProperties : public ::testing::TestWithParam<std::string> {};

TEST_P(CorpusProperties, KernelInvariants) {
  const auto p = make_poset_ref(corpus_poset(GetParam()));
  Rng rng(42);
  for (int t = 0; t < 30; ++t) {
    const auto f = random_function(p, rng), g = random_function(p, rng), h = random_function(p, rng);
    EXPECT_EQ(oracle::to_dense(f * g), oracle::multiply(oracle::to_dense(f), oracle::to_dense(g)));
    EXPECT_EQ((f * g) * h, f * (g * h));
    EXPECT_EQ(f * (g + Rational(3) * h), f * g + Rational(3) * (f * h));
    EXPECT_EQ(delta(p) * f, f);
    EXPECT_EQ(f * delta(p), f);
    IncidenceFunction sum(p);
    for (const auto& [key, v] : f.entries()) sum += v * e_basis(p, key.first, key.second);
    EXPECT_EQ(sum, f);
    for (const auto& [x, y] : p->comparable_pairs())
      for (const auto& [u, v] : p->comparable_pairs()) {
        const auto lhs = e_basis(p, x, y) * f * e_basis(p, u, v);
        IncidenceFunction rhs(p);
        if (p->leq(x, v)) rhs = f(y, u) * e_basis(p, x, v);
        EXPECT_EQ(lhs, rhs);
      }
    const auto r = random_invertible(p, rng);
    EXPECT_EQ(r * invert(r), delta(p));
    EXPECT_EQ(invert(r) * r, delta(p));
  }
  for (int t = 0; t < 10; ++t) {
    const auto r1 = random_invertible(p, rng), r2 = random_invertible(p, rng);
    EXPECT_EQ(compose(inner_auto(r1), inner_auto(r2)), inner_auto(r1 * r2));
    const auto s1 = random_multiplicative(p, rng), s2 = random_multiplicative(p, rng);
    EXPECT_TRUE(is_multiplicative(s1));
    EXPECT_EQ(compose(mult_auto(s1), mult_auto(s2)), mult_auto(hadamard(s1, s2)));
    const auto a = random_automorphism(*p, rng), b = random_automorphism(*p, rng);
    EXPECT_EQ(compose(induced_auto(p, a), induced_auto(p, b)), induced_auto(p, a * b));
    for (const auto& phi : {inner_auto(r1), mult_auto(s1), induced_auto(p, a),
                            compose(inner_auto(r2), induced_auto(p, b))})
      EXPECT_TRUE(is_algebra_automorphism(phi));

    // Same composite from different gauges recovers the same σ.
    const auto phi = compose(inner_auto(r1), compose(mult_auto(s1), induced_auto(p, a)));
    const auto d = decompose_automorphism(phi);
    EXPECT_EQ(d.sigma, a);
    EXPECT_EQ(recompose(d), phi);
    const auto c = Rational(5) * delta(p);  // central, so ψ_{c r1} = ψ_{r1}
    const auto phi2 = compose(inner_auto(c * r1), compose(mult_auto(s1), induced_auto(p, a)));
    EXPECT_EQ(decompose_automorphism(phi2).sigma, a);
  }
}

INSTANTIATE_TEST_SUITE_P(Corpus, CorpusProperties, ::testing::ValuesIn(incgrade::corpus_names()),
                         [](const auto& info) { return info.param; });
