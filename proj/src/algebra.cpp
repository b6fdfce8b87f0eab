#include "incgrade/algebra.hpp"

#include <string>

#include "incgrade/errors.hpp"
#include "incgrade/linalg.hpp"

namespace incgrade {

bool same_poset(const PosetRef& a, const PosetRef& b) { return a == b || (a && b && *a == *b); }

namespace {

void require_same(const IncidenceFunction& f, const IncidenceFunction& g, const char* op) {
  if (!same_poset(f.poset_ref(), g.poset_ref()))
    throw PosetMismatchError(std::string(op) + ": operands live on different posets");
}

std::string pair_name(const Poset& p, Index x, Index y) { return "(" + p.label(x) + "," + p.label(y) + ")"; }

}  // namespace

IncidenceFunction::IncidenceFunction(PosetRef poset) : poset_(std::move(poset)) {}

Rational IncidenceFunction::operator()(Index x, Index y) const {
  auto it = entries_.find({x, y});
  return it == entries_.end() ? Rational(0) : it->second;
}

void IncidenceFunction::set(Index x, Index y, const Rational& value) {
  if (x >= poset_->size() || y >= poset_->size()) throw InputError("incidence function: index out of range");
  if (sgn(value) == 0) {
    entries_.erase({x, y});
    return;
  }
  if (!poset_->leq(x, y))
    throw NotComparableError("incidence functions vanish off comparable pairs; " + pair_name(*poset_, x, y) +
                             " is not comparable");
  Rational& slot = entries_[{x, y}];
  slot = value;
  slot.canonicalize();
}

void IncidenceFunction::add(Index x, Index y, const Rational& value) { set(x, y, (*this)(x, y) + value); }

IncidenceFunction& IncidenceFunction::operator+=(const IncidenceFunction& other) {
  require_same(*this, other, "add");
  for (const auto& [key, v] : other.entries_) add(key.first, key.second, v);
  return *this;
}

IncidenceFunction& IncidenceFunction::operator-=(const IncidenceFunction& other) {
  require_same(*this, other, "subtract");
  for (const auto& [key, v] : other.entries_) add(key.first, key.second, -v);
  return *this;
}

IncidenceFunction& IncidenceFunction::operator*=(const Rational& k) {
  if (sgn(k) == 0) {
    entries_.clear();
    return *this;
  }
  for (auto& [key, v] : entries_) v *= k;
  return *this;
}

bool operator==(const IncidenceFunction& a, const IncidenceFunction& b) {
  return same_poset(a.poset_, b.poset_) && a.entries_ == b.entries_;
}

IncidenceFunction e_basis(const PosetRef& p, Index x, Index y) {
  if (x >= p->size() || y >= p->size()) throw InputError("e_basis: index out of range");
  if (!p->leq(x, y)) throw NotComparableError("e" + pair_name(*p, x, y) + " is not a basis element: pair not comparable");
  IncidenceFunction f(p);
  f.set(x, y, 1);
  return f;
}

IncidenceFunction delta(const PosetRef& p) {
  IncidenceFunction f(p);
  for (Index x = 0; x < p->size(); ++x) f.set(x, x, 1);
  return f;
}

IncidenceFunction zeta(const PosetRef& p) {
  IncidenceFunction f(p);
  for (const auto& [x, y] : p->comparable_pairs()) f.set(x, y, 1);
  return f;
}

IncidenceFunction convolve(const IncidenceFunction& f, const IncidenceFunction& g) {
  require_same(f, g, "convolve");
  std::map<Pair, Rational> acc;
  const auto& ge = g.entries();
  for (const auto& [xz, fv] : f.entries()) {
    const Index z = xz.second;
    for (auto it = ge.lower_bound({z, 0}); it != ge.end() && it->first.first == z; ++it)
      acc[{xz.first, it->first.second}] += fv * it->second;
  }
  IncidenceFunction out(f.poset_ref());
  for (const auto& [key, v] : acc) out.set(key.first, key.second, v);
  return out;
}

IncidenceFunction hadamard(const IncidenceFunction& f, const IncidenceFunction& g) {
  require_same(f, g, "hadamard");
  IncidenceFunction out(f.poset_ref());
  for (const auto& [key, v] : f.entries()) out.set(key.first, key.second, v * g(key.first, key.second));
  return out;
}

IncidenceFunction invert(const IncidenceFunction& f) {
  const Poset& p = f.poset();
  for (Index x = 0; x < p.size(); ++x)
    if (sgn(f(x, x)) == 0)
      throw NotInvertibleError("not invertible: diagonal entry at " + pair_name(p, x, x) + " is zero");
  IncidenceFunction g(f.poset_ref());
  const auto& order = p.linear_extension();
  for (Index y = 0; y < p.size(); ++y) {
    // g(x,y) needs g(z,y) for every z strictly above x, so walk x downwards.
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const Index x = *it;
      if (!p.leq(x, y)) continue;
      Rational rhs = x == y ? Rational(1) : Rational(0);
      for (Index z = 0; z < p.size(); ++z)
        if (p.lt(x, z) && p.leq(z, y)) rhs -= f(x, z) * g(z, y);
      g.set(x, y, rhs / f(x, x));
    }
  }
  return g;
}

bool is_multiplicative(const IncidenceFunction& s) {
  const Poset& p = s.poset();
  for (const auto& [x, y] : p.comparable_pairs()) {
    const Rational v = s(x, y);
    if (sgn(v) == 0) return false;
    for (Index z = 0; z < p.size(); ++z)
      if (p.leq(x, z) && p.leq(z, y) && s(x, z) * s(z, y) != v) return false;
  }
  return true;
}

AlgebraMorphism::AlgebraMorphism(PosetRef poset) : poset_(std::move(poset)) {
  for (const auto& pr : poset_->comparable_pairs()) images_.emplace(pr, IncidenceFunction(poset_));
}

AlgebraMorphism AlgebraMorphism::identity(const PosetRef& p) {
  AlgebraMorphism m(p);
  for (const auto& [x, y] : p->comparable_pairs()) m.set_image(x, y, e_basis(p, x, y));
  return m;
}

const IncidenceFunction& AlgebraMorphism::image(Index x, Index y) const {
  auto it = images_.find({x, y});
  if (it == images_.end())
    throw NotComparableError("morphism has no basis element e" + pair_name(*poset_, x, y));
  return it->second;
}

void AlgebraMorphism::set_image(Index x, Index y, IncidenceFunction f) {
  auto it = images_.find({x, y});
  if (it == images_.end()) throw NotComparableError("morphism has no basis element e" + pair_name(*poset_, x, y));
  if (!same_poset(f.poset_ref(), poset_)) throw PosetMismatchError("morphism image lives on a different poset");
  it->second = std::move(f);
}

IncidenceFunction AlgebraMorphism::apply(const IncidenceFunction& f) const {
  if (!same_poset(f.poset_ref(), poset_)) throw PosetMismatchError("apply: function lives on a different poset");
  IncidenceFunction out(poset_);
  for (const auto& [key, v] : f.entries()) {
    IncidenceFunction term = image(key.first, key.second);
    term *= v;
    out += term;
  }
  return out;
}

bool operator==(const AlgebraMorphism& a, const AlgebraMorphism& b) {
  return same_poset(a.poset_, b.poset_) && a.images_ == b.images_;
}

AlgebraMorphism compose(const AlgebraMorphism& a, const AlgebraMorphism& b) {
  if (!same_poset(a.poset_ref(), b.poset_ref())) throw PosetMismatchError("compose: morphisms on different posets");
  AlgebraMorphism out(a.poset_ref());
  for (const auto& [key, img] : b.images()) out.set_image(key.first, key.second, a.apply(img));
  return out;
}

void validate_automorphism(const AlgebraMorphism& phi) {
  const PosetRef& p = phi.poset_ref();
  const auto& pairs = p->comparable_pairs();
  for (const auto& [x, y] : pairs)
    for (const auto& [u, v] : pairs) {
      const IncidenceFunction lhs = convolve(phi.image(x, y), phi.image(u, v));
      const IncidenceFunction rhs = y == u ? phi.image(x, v) : IncidenceFunction(p);
      if (lhs != rhs)
        throw NotAutomorphismError("not multiplicative: φ(e" + pair_name(*p, x, y) + ")φ(e" + pair_name(*p, u, v) +
                                   ") differs from φ of their product");
    }
  if (phi.apply(delta(p)) != delta(p)) throw NotAutomorphismError("φ(δ) is not δ");
  RationalMatrix m(pairs.size(), pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (const auto& [key, v] : phi.image(pairs[i].first, pairs[i].second).entries())
      m(i, *p->pair_position(key.first, key.second)) = v;
  if (rank(m) != pairs.size()) throw NotAutomorphismError("φ is not invertible: basis images are linearly dependent");
}

bool is_algebra_automorphism(const AlgebraMorphism& phi) {
  try {
    validate_automorphism(phi);
    return true;
  } catch (const NotAutomorphismError&) {
    return false;
  }
}

AlgebraMorphism inner_auto(const IncidenceFunction& r) {
  const IncidenceFunction r_inv = invert(r);
  const PosetRef& p = r.poset_ref();
  AlgebraMorphism m(p);
  for (const auto& [x, y] : p->comparable_pairs()) m.set_image(x, y, r * e_basis(p, x, y) * r_inv);
  return m;
}

AlgebraMorphism mult_auto(const IncidenceFunction& s) {
  if (!is_multiplicative(s)) throw NotMultiplicativeError("M_s needs a multiplicative s");
  const PosetRef& p = s.poset_ref();
  AlgebraMorphism m(p);
  for (const auto& [x, y] : p->comparable_pairs()) m.set_image(x, y, s(x, y) * e_basis(p, x, y));
  return m;
}

AlgebraMorphism induced_auto(const PosetRef& p, const PosetAutomorphism& sigma) {
  if (!is_automorphism(*p, sigma.images())) throw NotAutomorphismError("σ is not an automorphism of the poset");
  AlgebraMorphism m(p);
  for (const auto& [x, y] : p->comparable_pairs()) m.set_image(x, y, e_basis(p, sigma(x), sigma(y)));
  return m;
}

AlgebraMorphism recompose(const Decomposition& d) {
  const PosetRef& p = d.r.poset_ref();
  return compose(inner_auto(d.r), compose(mult_auto(d.s), induced_auto(p, d.sigma)));
}

Decomposition decompose_automorphism(const AlgebraMorphism& phi) {
  validate_automorphism(phi);
  const PosetRef& p = phi.poset_ref();
  const std::size_t n = p->size();

  // (i) φ(e_xx) has exactly one nonzero diagonal entry, equal to 1, at σ(x).
  std::vector<Index> image(n);
  for (Index x = 0; x < n; ++x) {
    const IncidenceFunction& f = phi.image(x, x);
    std::optional<Index> hit;
    for (Index y = 0; y < n; ++y) {
      const Rational v = f(y, y);
      if (sgn(v) == 0) continue;
      if (v != 1 || hit)
        throw DecompositionError("diagonal of φ(e" + pair_name(*p, x, x) + ") is not a single unit entry");
      hit = y;
    }
    if (!hit) throw DecompositionError("diagonal of φ(e" + pair_name(*p, x, x) + ") vanishes");
    image[x] = *hit;
  }
  if (!is_automorphism(*p, image)) throw DecompositionError("recovered σ is not a poset automorphism");
  PosetAutomorphism sigma(std::move(image));

  // (ii) φ' = φ ∘ σ̂⁻¹ and r = Σ_x φ'(e_xx) e_xx.
  const AlgebraMorphism phi_prime = compose(phi, induced_auto(p, sigma.inverse()));
  IncidenceFunction r(p);
  for (Index x = 0; x < n; ++x) r += convolve(phi_prime.image(x, x), e_basis(p, x, x));
  for (Index x = 0; x < n; ++x)
    if (r(x, x) != 1) throw DecompositionError("r does not have unit diagonal");

  // (iii) ψ_r⁻¹ ∘ φ' fixes every e_xx, so it scales each e_xy by c(x,y).
  const AlgebraMorphism chi = compose(inner_auto(invert(r)), phi_prime);
  IncidenceFunction s(p);
  for (const auto& [x, y] : p->comparable_pairs()) {
    const IncidenceFunction& img = chi.image(x, y);
    const Rational c = img(x, y);
    if (img.entries().size() != 1 || sgn(c) == 0)
      throw DecompositionError("ψ_r⁻¹∘φ' does not act diagonally on e" + pair_name(*p, x, y));
    s.set(x, y, c);
  }
  if (!is_multiplicative(s)) throw DecompositionError("recovered scaling function is not multiplicative");

  Decomposition d{std::move(r), std::move(s), std::move(sigma)};
  if (recompose(d) != phi) throw DecompositionError("ψ_r∘M_s∘σ̂ does not reproduce φ");
  return d;
}

}  // namespace incgrade
