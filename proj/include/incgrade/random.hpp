#pragma once

// Seeded generators for randomized checks. Values are small integers or
// simple fractions so exact arithmetic stays cheap.

#include <random>

#include "incgrade/algebra.hpp"
#include "incgrade/grading.hpp"

namespace incgrade {

using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi].
long random_int(Rng& rng, long lo, long hi);

/// A random element of I(P, Q) with entries in -3..3 on comparable pairs.
IncidenceFunction random_function(const PosetRef& p, Rng& rng);

/// A random invertible element: nonzero diagonal, arbitrary off-diagonal.
IncidenceFunction random_invertible(const PosetRef& p, Rng& rng);

/// A random multiplicative function s(x,y) = t(y)/t(x) · w(x,y), where w is a
/// product of random cover weights whenever that is path-independent.
IncidenceFunction random_multiplicative(const PosetRef& p, Rng& rng);

/// Uniform choice from Aut(P).
PosetAutomorphism random_automorphism(const Poset& p, Rng& rng);

GradingMap random_grading(const PosetRef& p, const GroupRef& g, Rng& rng);

}  // namespace incgrade
