#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "orbiseif/engine.hpp"
#include "orbiseif/errors.hpp"
#include "orbiseif/oracle.hpp"

using namespace orbiseif;

namespace {

std::multiset<std::pair<std::int64_t, std::int64_t>> normalized_set(const std::vector<LocalInvariant>& v) {
  std::multiset<std::pair<std::int64_t, std::int64_t>> out;
  for (const auto& li : v)
    if (li.den > 1) out.insert({li.normalized_num(), li.den});
  return out;
}

using Set = std::multiset<std::pair<std::int64_t, std::int64_t>>;

}  // namespace

TEST(BaseGroup, Examples) {
  BaseActionGroup b = base_group(goursat_group({FamilyId::F9, 1, 1, 1, 1}));
  EXPECT_EQ(b.order, 60);
  EXPECT_EQ(b.signature.str(), "S2(2,3,5)");
  b = base_group(goursat_group({FamilyId::F2, 2, 3, 1, 1}));
  EXPECT_EQ(b.order, 6);
  EXPECT_EQ(b.signature.str(), "S2(2,2,3)");
  b = base_group(goursat_group({FamilyId::F1p, 1, 1, 10, 1}));
  EXPECT_EQ(b.order, 5);
  EXPECT_EQ(b.signature.str(), "S2(5,5)");
  b = base_group(goursat_group({FamilyId::F11p, 1, 1, 10, 1}));
  EXPECT_EQ(b.signature.str(), "D2(;5,5)");
  b = base_group(goursat_group({FamilyId::F10, 1, 3, 1, 1}));
  EXPECT_EQ(b.signature.str(), "D2(2;3)");
}

TEST(BaseGroup, ProjectivePlaneBase) {
  // An orientation-reversing base map with no mirror gives a projective plane.
  bool found = false;
  for (const auto& s : enumerate_specs(48, all_families())) {
    if (!is_fibered(s.family)) continue;
    BaseActionGroup b = base_group(goursat_group(s));
    if (b.signature.kind == BaseKind::ProjectivePlane) {
      found = true;
      EXPECT_EQ(seifert_data(s).base.kind, BaseKind::ProjectivePlane) << s.str();
    }
  }
  EXPECT_TRUE(found);
}

TEST(EulerOracle, Examples) {
  EXPECT_EQ(euler_oracle(goursat_group({FamilyId::F9, 1, 1, 1, 1})), Rational(-1, 30));
  EXPECT_EQ(euler_oracle(goursat_group({FamilyId::F2, 2, 3, 1, 1})), Rational(-2, 3));
  EXPECT_EQ(euler_oracle(goursat_group({FamilyId::F1p, 1, 1, 10, 1})), Rational(-1, 5));
}

TEST(ExceptionalFibers, Examples) {
  EXPECT_EQ(normalized_set(exceptional_fibers_oracle(goursat_group({FamilyId::F9, 1, 1, 1, 1}))),
            (Set{{1, 2}, {1, 3}, {1, 5}}));
  EXPECT_EQ(normalized_set(exceptional_fibers_oracle(goursat_group({FamilyId::F2, 2, 3, 1, 1}))),
            (Set{{2, 3}, {0, 2}, {0, 2}}));
  auto v = exceptional_fibers_oracle(goursat_group({FamilyId::F1p, 1, 1, 10, 1}));
  EXPECT_EQ(normalized_set(v), (Set{{1, 5}, {0, 5}}));
  std::vector<std::int64_t> idx;
  for (const auto& li : v) idx.push_back(li.index());
  std::sort(idx.begin(), idx.end());
  EXPECT_EQ(idx, (std::vector<std::int64_t>{1, 5}));
}

TEST(LensOracle, Examples) {
  EXPECT_EQ(lens_oracle(goursat_group({FamilyId::F1, 1, 1, 1, 1})), Underlying::lens(2, 1));
  EXPECT_TRUE(underlying_compatible(lens_oracle(goursat_group({FamilyId::F1p, 3, 1, 2, 1})), Underlying::lens(3, 1)));
  EXPECT_EQ(lens_oracle(goursat_group({FamilyId::F1p, 1, 1, 10, 1})), Underlying::sphere());
  EXPECT_THROW(lens_oracle(goursat_group({FamilyId::F9, 1, 1, 1, 1})), PreconditionError);
}

TEST(LensOracle, MatchesFundamentalGroup) {
  for (const auto& s : enumerate_specs(96, {FamilyId::F1, FamilyId::F1p})) {
    PairGroup g = goursat_group(s);
    Underlying u = lens_oracle(g);
    FixedPointQuotient q = fixed_point_quotient(g);
    EXPECT_TRUE(q.cyclic) << s.str();
    EXPECT_EQ(fundamental_group_order(u), q.order) << s.str();
  }
}

TEST(FixedPointQuotient, PoincareSphere) {
  // (C2/C2, I*/I*) with m = 1 acts freely: the quotient is the Poincare homology sphere.
  FixedPointQuotient q = fixed_point_quotient(goursat_group({FamilyId::F9, 1, 1, 1, 1}));
  EXPECT_EQ(q.order, 120);
  EXPECT_FALSE(q.cyclic);
}

TEST(OracleReport, MatchesEngineOnSmallSweep) {
  for (const auto& s : enumerate_specs(72, all_families())) {
    if (!is_fibered(s.family)) continue;
    OracleReport o = oracle_report(goursat_group(s));
    EngineReport e = engine_report(s);
    EXPECT_EQ(o.seifert.base, e.seifert.base) << s.str();
    EXPECT_EQ(o.seifert.euler, e.seifert.euler) << s.str();
    EXPECT_EQ(normalized_set(o.seifert.invariants), normalized_set(e.seifert.invariants)) << s.str();
    EXPECT_EQ(o.seifert.xi, e.seifert.xi) << s.str();
    EXPECT_TRUE(underlying_compatible(o.topology.underlying, e.topology.underlying)) << s.str();
  }
}

TEST(OracleReport, NonFiberedThrows) {
  EXPECT_THROW(oracle_report(goursat_group({FamilyId::F31, 1, 1, 1, 1})), NotHopfPreserving);
}
