#pragma once

// The incidence algebra I(P, Q) of a finite poset over the rationals.
//
// An element is a function on the comparable pairs of P, stored sparsely
// (absent pairs are zero, stored values are nonzero). The product is
// convolution over segments; δ is the unit and ζ the all-ones function.

#include <map>
#include <memory>

#include "incgrade/poset.hpp"
#include "incgrade/rational.hpp"

namespace incgrade {

using PosetRef = std::shared_ptr<const Poset>;

inline PosetRef make_poset_ref(Poset p) { return std::make_shared<const Poset>(std::move(p)); }

/// Same poset, by identity or by value.
bool same_poset(const PosetRef& a, const PosetRef& b);

class IncidenceFunction {
 public:
  explicit IncidenceFunction(PosetRef poset);

  const Poset& poset() const { return *poset_; }
  const PosetRef& poset_ref() const { return poset_; }

  Rational operator()(Index x, Index y) const;

  /// Sets f(x,y). Nonzero values require x ⪯ y (NotComparableError otherwise).
  void set(Index x, Index y, const Rational& value);
  void add(Index x, Index y, const Rational& value);

  const std::map<Pair, Rational>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  IncidenceFunction& operator+=(const IncidenceFunction& other);
  IncidenceFunction& operator-=(const IncidenceFunction& other);
  IncidenceFunction& operator*=(const Rational& k);

  friend IncidenceFunction operator+(IncidenceFunction a, const IncidenceFunction& b) { return a += b; }
  friend IncidenceFunction operator-(IncidenceFunction a, const IncidenceFunction& b) { return a -= b; }
  friend IncidenceFunction operator*(const Rational& k, IncidenceFunction f) { return f *= k; }

  /// Equal posets and equal entries.
  friend bool operator==(const IncidenceFunction& a, const IncidenceFunction& b);

 private:
  PosetRef poset_;
  std::map<Pair, Rational> entries_;
};

/// e_xy: the indicator of the single pair (x, y). Requires x ⪯ y.
IncidenceFunction e_basis(const PosetRef& p, Index x, Index y);
IncidenceFunction delta(const PosetRef& p);
IncidenceFunction zeta(const PosetRef& p);

/// (f g)(x,y) = Σ_{x⪯z⪯y} f(x,z) g(z,y). Throws PosetMismatchError.
IncidenceFunction convolve(const IncidenceFunction& f, const IncidenceFunction& g);
inline IncidenceFunction operator*(const IncidenceFunction& f, const IncidenceFunction& g) { return convolve(f, g); }

/// Entrywise product.
IncidenceFunction hadamard(const IncidenceFunction& f, const IncidenceFunction& g);

/// Two-sided convolution inverse by back-substitution along a linear
/// extension. Throws NotInvertibleError naming the first zero diagonal entry.
IncidenceFunction invert(const IncidenceFunction& f);

/// Nonzero on every comparable pair and s(x,y) = s(x,z) s(z,y) for x ⪯ z ⪯ y.
bool is_multiplicative(const IncidenceFunction& s);

/// A linear endomorphism of I(P, Q) given by the image of every basis
/// element e_xy.
class AlgebraMorphism {
 public:
  explicit AlgebraMorphism(PosetRef poset);

  static AlgebraMorphism identity(const PosetRef& p);

  const Poset& poset() const { return *poset_; }
  const PosetRef& poset_ref() const { return poset_; }

  const IncidenceFunction& image(Index x, Index y) const;
  void set_image(Index x, Index y, IncidenceFunction f);
  const std::map<Pair, IncidenceFunction>& images() const { return images_; }

  IncidenceFunction apply(const IncidenceFunction& f) const;

  friend bool operator==(const AlgebraMorphism& a, const AlgebraMorphism& b);

 private:
  PosetRef poset_;
  std::map<Pair, IncidenceFunction> images_;
};

/// (a ∘ b)(f) = a(b(f)).
AlgebraMorphism compose(const AlgebraMorphism& a, const AlgebraMorphism& b);

/// Checks that φ is multiplicative on all basis pairs, sends δ to δ and is
/// linearly invertible. Throws NotAutomorphismError with the first violation.
void validate_automorphism(const AlgebraMorphism& phi);
bool is_algebra_automorphism(const AlgebraMorphism& phi);

/// ψ_r: f ↦ r f r⁻¹. Throws NotInvertibleError.
AlgebraMorphism inner_auto(const IncidenceFunction& r);

/// M_s: f ↦ s ∗ f. Throws NotMultiplicativeError.
AlgebraMorphism mult_auto(const IncidenceFunction& s);

/// σ̂: e_xy ↦ e_σ(x)σ(y), i.e. σ̂(f)(x,y) = f(σ⁻¹x, σ⁻¹y).
AlgebraMorphism induced_auto(const PosetRef& p, const PosetAutomorphism& sigma);

struct Decomposition {
  IncidenceFunction r;
  IncidenceFunction s;
  PosetAutomorphism sigma;
};

/// Factors an automorphism as φ = ψ_r ∘ M_s ∘ σ̂ and verifies the
/// factorization on every basis element. σ is unique; (r, s) are one gauge
/// choice with r unit-diagonal.
Decomposition decompose_automorphism(const AlgebraMorphism& phi);

/// ψ_r ∘ M_s ∘ σ̂.
AlgebraMorphism recompose(const Decomposition& d);

}  // namespace incgrade
