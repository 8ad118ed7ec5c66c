#include <set>

#include <gtest/gtest.h>

#include "orbiseif/errors.hpp"
#include "orbiseif/oracle.hpp"
#include "support/checks.hpp"

using namespace orbiseif;
using Matrix = std::array<std::array<std::int64_t, 2>, 2>;

TEST(TorusQuotientMap, Examples) {
  EXPECT_EQ(torus_quotient_map(1, 5, 0).matrix, (Matrix{{{1, 0}, {0, 5}}}));
  EXPECT_EQ(torus_quotient_map(2, 4, 1).matrix, (Matrix{{{2, -1}, {0, 2}}}));
  // e' = 1: the inverse of d' is taken as 0, so the off-diagonal entry vanishes.
  TorusQuotientMap m = torus_quotient_map(3, 3, 1);
  EXPECT_EQ(m.matrix, (Matrix{{{3, 0}, {0, 1}}}));
  EXPECT_EQ(m.coreFixSubgroupOrder, 3);
  EXPECT_THROW(torus_quotient_map(2, 4, 2), PreconditionError);
}

TEST(TorusQuotientMap, SlopeInvariants) {
  LocalInvariant a = slope_invariant(torus_quotient_map(1, 5, 0), 1, 1);
  EXPECT_EQ(a.num, 1);
  EXPECT_EQ(a.den, 5);
  LocalInvariant b = slope_invariant(torus_quotient_map(2, 4, 1), 1, 1);
  EXPECT_EQ(b.num, 2);
  EXPECT_EQ(b.den, 4);
  EXPECT_EQ(b.index(), 2);
  LocalInvariant c = slope_invariant(torus_quotient_map(0, 1, 0), 1, 1);
  EXPECT_EQ(c.normalized_num(), 0);
  EXPECT_EQ(c.den, 1);
}

TEST(TorusLocalInvariant, HandChecks) {
  const int e = 7;
  // Pure disc rotation fixes the core pointwise: index e.
  LocalInvariant a = torus_local_invariant({{Rational(0), Rational(1, e)}});
  EXPECT_EQ(a.normalized_num(), 0);
  EXPECT_EQ(a.den, e);
  // Turning the core while fixing the disc coordinate.
  LocalInvariant b = torus_local_invariant({{Rational(1, e), Rational(0)}});
  EXPECT_EQ(b.normalized_num(), 1);
  EXPECT_EQ(b.den, e);
  // Rotation along the fibers acts freely: regular fiber.
  LocalInvariant c = torus_local_invariant({{Rational(1, e), Rational(1, e)}});
  EXPECT_EQ(c.normalized_num(), 0);
  EXPECT_EQ(c.den, 1);
}

TEST(TorusLocalInvariant, NonCyclicStabilizer) {
  // Z2 x Z2 generated by the two half turns.
  std::vector<TorusAction> h{{Rational(1, 2), Rational(0)}, {Rational(0), Rational(1, 2)}};
  LocalInvariant li = torus_local_invariant(h);
  EXPECT_EQ(li.den, 2);
  EXPECT_EQ(li.index(), 2);
}

TEST(TorusLocalInvariant, AgreesWithDirectFormula) {
  checks::CheckResult r = checks::check_torus_cross(12);
  EXPECT_GT(r.cases, 150u);
  for (const auto& f : r.failures) ADD_FAILURE() << f;
}

TEST(TorusLocalInvariant, DenominatorIsBaseStabilizerOrder) {
  for (const auto& h : checks::small_torus_subgroups(10)) {
    std::set<Rational> xs;
    for (const auto& t : h) xs.insert((t.disc - t.core).frac());
    EXPECT_EQ(torus_local_invariant(h).den, static_cast<std::int64_t>(xs.size()));
  }
}

TEST(TorusLocalInvariant, IndexIsCoreFixingOrder) {
  for (const auto& h : checks::small_torus_subgroups(10)) {
    std::int64_t k = 0;
    for (const auto& t : h) k += t.core.is_zero() ? 1 : 0;
    EXPECT_EQ(torus_local_invariant(h).index(), k);
  }
}
