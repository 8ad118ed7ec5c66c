#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "orbiseif/groups.hpp"
#include "orbiseif/seifert.hpp"
#include "orbiseif/sphere.hpp"

namespace orbiseif {

// Quotient of a solid torus by z1 -> e^{2 pi i g/e} z1, z2 -> e^{2 pi i d/e} z2
// (z2 along the core). Columns are the images of meridian and longitude.
struct TorusQuotientMap {
  std::array<std::array<std::int64_t, 2>, 2> matrix{};
  std::int64_t coreFixSubgroupOrder = 1;

  std::int64_t determinant() const { return matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0]; }
};

// Requires gcd(d, e, g) = 1. With e' = 1 the inverse of d' is taken to be 0.
TorusQuotientMap torus_quotient_map(std::int64_t d, std::int64_t e, std::int64_t g);

// Invariant (abar k)/(b k) of the image of fiber class p*mu + q*lambda, where
// the image reduces to a/b and k is the core-fixing order. abar_shift adds
// multiples of b to the inverse, which must not change the normalized result.
LocalInvariant slope_invariant(const TorusQuotientMap& map, std::int64_t p, std::int64_t q,
                               std::int64_t abar_shift = 0);

// An element of the maximal torus fixing the fiber over infinity:
// z1 -> e^{2 pi i core} z1, z2 -> e^{2 pi i disc} z2.
struct TorusAction {
  Rational core;
  Rational disc;

  friend bool operator==(const TorusAction&, const TorusAction&) = default;
  friend auto operator<=>(const TorusAction&, const TorusAction&) = default;
};

// Local invariant of the fiber z2 = 0 under a finite subgroup of the torus.
// A cyclic group goes straight through the torus lemma. Otherwise the subgroup
// fixing the core pointwise (order k) is divided out first, the fiber becomes
// the class (k, 1), and the cyclic remainder goes through the lemma.
LocalInvariant torus_local_invariant(const std::vector<TorusAction>& stabilizer);

struct SingularPoint {
  SpherePoint point;
  std::int64_t stabilizer_order = 1;  // orientation-preserving part
  bool on_mirror = false;
};

struct BaseActionGroup {
  std::vector<BaseIsometry> isometries;  // deduplicated
  std::int64_t order = 1;
  BaseSignature signature;
  std::vector<SingularPoint> points;  // one per orbit of cone or corner points
};

BaseActionGroup base_group(const PairGroup& g);
Rational euler_oracle(const PairGroup& g, const BaseActionGroup& base);
Rational euler_oracle(const PairGroup& g);
std::vector<LocalInvariant> exceptional_fibers_oracle(const PairGroup& g, const BaseActionGroup& base);
std::vector<LocalInvariant> exceptional_fibers_oracle(const PairGroup& g);

// Families 1 and 1p: divide out the subgroups fixing each core circle, then
// glue the two solid-torus quotients and read off the lens space.
Underlying lens_oracle(const PairGroup& g);

// |G/N| with N generated by elements that have fixed points; this is the
// order of the fundamental group of the underlying space.
struct FixedPointQuotient {
  std::int64_t order = 1;
  bool cyclic = true;
};
FixedPointQuotient fixed_point_quotient(const PairGroup& g);

struct OracleReport {
  SeifertData seifert;
  TopologyReport topology;
  BaseActionGroup base;
  FixedPointQuotient pi1;
};

OracleReport oracle_report(const PairGroup& g);

}  // namespace orbiseif
