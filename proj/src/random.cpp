#include "incgrade/random.hpp"

namespace incgrade {

long random_int(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

namespace {

Rational nonzero_small(Rng& rng) {
  long num = 0;
  while (num == 0) num = random_int(rng, -3, 3);
  Rational q(num, random_int(rng, 1, 2));
  q.canonicalize();
  return q;
}

}  // namespace

IncidenceFunction random_function(const PosetRef& p, Rng& rng) {
  IncidenceFunction f(p);
  for (const auto& [x, y] : p->comparable_pairs()) f.set(x, y, random_int(rng, -3, 3));
  return f;
}

IncidenceFunction random_invertible(const PosetRef& p, Rng& rng) {
  IncidenceFunction f = random_function(p, rng);
  for (Index x = 0; x < p->size(); ++x) f.set(x, x, nonzero_small(rng));
  return f;
}

IncidenceFunction random_multiplicative(const PosetRef& p, Rng& rng) {
  const std::size_t n = p->size();
  std::vector<Rational> t(n);
  for (auto& v : t) v = nonzero_small(rng);
  // Propagate random cover weights along a linear extension: w(x,y) is the
  // product along one saturated chain. Keep it only if every chain agrees.
  IncidenceFunction w(p);
  for (Index x = 0; x < n; ++x) w.set(x, x, 1);
  std::map<Pair, Rational> cover_weight;
  for (const auto& c : p->covers()) cover_weight[c] = nonzero_small(rng);
  for (Index y : p->linear_extension())
    for (Index x = 0; x < n; ++x) {
      if (!p->lt(x, y)) continue;
      for (const auto& [c, weight] : cover_weight)
        if (c.second == y && p->leq(x, c.first)) {
          w.set(x, y, w(x, c.first) * weight);
          break;
        }
    }
  if (!is_multiplicative(w)) w = zeta(p);
  IncidenceFunction s(p);
  for (const auto& [x, y] : p->comparable_pairs()) s.set(x, y, t[y] / t[x] * w(x, y));
  return s;
}

PosetAutomorphism random_automorphism(const Poset& p, Rng& rng) {
  const auto auts = automorphisms(p);
  return auts[static_cast<std::size_t>(random_int(rng, 0, static_cast<long>(auts.size()) - 1))];
}

GradingMap random_grading(const PosetRef& p, const GroupRef& g, Rng& rng) {
  std::vector<GroupElement> theta(p->size());
  for (auto& v : theta) v = static_cast<GroupElement>(random_int(rng, 0, static_cast<long>(g->order()) - 1));
  return GradingMap(p, g, std::move(theta));
}

}  // namespace incgrade
