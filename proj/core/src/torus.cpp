#include <algorithm>
#include <set>

#include "orbiseif/errors.hpp"
#include "orbiseif/oracle.hpp"

namespace orbiseif {

TorusQuotientMap torus_quotient_map(std::int64_t d, std::int64_t e, std::int64_t g) {
  if (e < 1) throw PreconditionError("torus_quotient_map needs e >= 1");
  if (gcd(d, e, g) != 1) throw PreconditionError("torus_quotient_map needs gcd(d,e,g)=1");
  const std::int64_t G = gcd(d, e);
  const std::int64_t dp = d / G, ep = e / G;
  const std::int64_t dbar = ep == 1 ? 0 : *inverse_mod(dp, ep);
  TorusQuotientMap m;
  m.matrix = {{{G, -g * dbar}, {0, ep}}};
  m.coreFixSubgroupOrder = G;
  return m;
}

LocalInvariant slope_invariant(const TorusQuotientMap& map, std::int64_t p, std::int64_t q, std::int64_t abar_shift) {
  std::int64_t x = map.matrix[0][0] * p + map.matrix[0][1] * q;
  std::int64_t y = map.matrix[1][0] * p + map.matrix[1][1] * q;
  std::int64_t c = gcd(x, y);
  if (c == 0) throw PreconditionError("fiber class maps to zero");
  x /= c;
  y /= c;
  if (y < 0) {
    x = -x;
    y = -y;
  }
  if (y == 0) throw InternalInconsistency("fiber image is a meridian");
  const std::int64_t abar = (y == 1 ? 0 : *inverse_mod(x, y)) + abar_shift * y;
  const std::int64_t k = map.coreFixSubgroupOrder;
  return {abar * k, y * k, Location::ConePoint};
}

namespace {

std::int64_t element_order(const TorusAction& t) { return lcm(t.core.den(), t.disc.den()); }

}  // namespace

LocalInvariant torus_local_invariant(const std::vector<TorusAction>& stabilizer) {
  // Close up, so that a generating set is enough. Only elements not yet
  // reached are used as generators, which keeps a full group input linear.
  std::set<TorusAction> elems{{Rational(0), Rational(0)}};
  std::vector<TorusAction> gens;
  for (const auto& t0 : stabilizer) {
    const TorusAction t{t0.core.frac(), t0.disc.frac()};
    if (elems.count(t)) continue;
    gens.push_back(t);
    std::vector<TorusAction> frontier(elems.begin(), elems.end());
    while (!frontier.empty()) {
      const TorusAction x = frontier.back();
      frontier.pop_back();
      for (const auto& g : gens) {
        TorusAction y{(x.core + g.core).frac(), (x.disc + g.disc).frac()};
        if (elems.insert(y).second) frontier.push_back(y);
      }
    }
  }
  const std::int64_t order = static_cast<std::int64_t>(elems.size());

  for (const auto& t : elems) {
    if (element_order(t) == order) {
      const std::int64_t d = (t.core * Rational(order)).num();
      const std::int64_t g = (t.disc * Rational(order)).num();
      return slope_invariant(torus_quotient_map(d, order, g), 1, 1);
    }
  }

  std::int64_t k = 0;
  for (const auto& t : elems) k += t.core.is_zero() ? 1 : 0;
  const std::int64_t e2 = order / k;
  for (const auto& t : elems) {
    if (t.core == Rational(1, e2)) {
      const Rational g = (t.disc * Rational(k)).frac() * Rational(e2);
      if (!g.is_integer()) throw InternalInconsistency("disc angle is not a multiple of 1/(k e)");
      LocalInvariant li = slope_invariant(torus_quotient_map(1, e2, g.num()), k, 1);
      return {li.num * k, li.den * k, li.location};
    }
  }
  throw InternalInconsistency("stabilizer has no element with core angle 1/e");
}

}  // namespace orbiseif
