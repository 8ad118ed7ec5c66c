#include <set>

#include <gtest/gtest.h>

#include "orbiseif/errors.hpp"
#include "orbiseif/groups.hpp"
#include "orbiseif/sphere.hpp"

using namespace orbiseif;

TEST(StandardGroups, Orders) {
  EXPECT_EQ(standard_group(StandardGroupId::tetrahedral()).size(), 24u);
  EXPECT_EQ(standard_group(StandardGroupId::octahedral()).size(), 48u);
  EXPECT_EQ(standard_group(StandardGroupId::icosahedral()).size(), 120u);
  for (std::int64_t n = 1; n <= 12; ++n) {
    EXPECT_EQ(standard_group(StandardGroupId::cyclic(n)).size(), static_cast<std::size_t>(n));
  }
  for (std::int64_t n = 1; n <= 12; ++n) {
    EXPECT_EQ(standard_group(StandardGroupId::binary_dihedral(4 * n)).size(), static_cast<std::size_t>(4 * n));
  }
  EXPECT_THROW(StandardGroupId::binary_dihedral(6), PreconditionError);
}

TEST(StandardGroups, CyclicFour) {
  std::vector<GroupElement> c4 = standard_group(StandardGroupId::cyclic(4));
  std::set<GroupElement> expected;
  for (int k = 0; k < 4; ++k) expected.insert(CircleJElement(Rational(k, 4)));
  EXPECT_EQ(std::set<GroupElement>(c4.begin(), c4.end()), expected);
}

TEST(StandardGroups, ElementsAreUnitAndClosed) {
  for (auto id : {StandardGroupId::tetrahedral(), StandardGroupId::octahedral(), StandardGroupId::icosahedral()}) {
    auto g = standard_group(id);
    std::set<GroupElement> s(g.begin(), g.end());
    for (const auto& x : g) {
      EXPECT_EQ(std::get<AlgebraicQuaternion>(x).norm2(), QuadFieldElement(1));
      EXPECT_TRUE(s.count(inverse(x)));
    }
    for (std::size_t a = 0; a < g.size(); a += 7) {
      for (const auto& y : g) EXPECT_TRUE(s.count(multiply(g[a], y)));
    }
  }
}

TEST(StandardGroups, SubgroupChain) {
  auto t = standard_group(StandardGroupId::tetrahedral());
  auto o = standard_group(StandardGroupId::octahedral());
  auto i = standard_group(StandardGroupId::icosahedral());
  std::set<GroupElement> os(o.begin(), o.end()), is(i.begin(), i.end());
  for (const auto& x : t) {
    EXPECT_TRUE(os.count(x));
    EXPECT_TRUE(is.count(x));
  }
}

TEST(StandardGroups, IcosahedralOuterIsAutomorphism) {
  auto g = standard_group(StandardGroupId::icosahedral());
  std::set<GroupElement> s(g.begin(), g.end());
  std::set<GroupElement> image;
  for (const auto& x : g) {
    auto y = icosahedral_outer(std::get<AlgebraicQuaternion>(x));
    EXPECT_TRUE(s.count(y));
    image.insert(y);
  }
  EXPECT_EQ(image.size(), g.size());
  const auto& a = std::get<AlgebraicQuaternion>(g[5]);
  const auto& b = std::get<AlgebraicQuaternion>(g[77]);
  EXPECT_EQ(icosahedral_outer(multiply(a, b)), multiply(icosahedral_outer(a), icosahedral_outer(b)));
  // Not inner: an element of order 5 lands in the other class of order-5 elements.
  const auto q = quat::icosa();
  AlgebraicQuaternion p = q;
  int order = 1;
  while (!(p == quat::one())) {
    p = multiply(p, q);
    ++order;
  }
  ASSERT_EQ(order, 5);
  EXPECT_NE(icosahedral_outer(q).w, q.w);
}

TEST(Families, ParseAndPrint) {
  for (FamilyId f : all_families()) EXPECT_EQ(parse_family(to_string(f)), f);
  EXPECT_EQ(parse_family("1p"), FamilyId::F1p);
  EXPECT_EQ(parse_family("26pp"), FamilyId::F26pp);
  EXPECT_EQ(parse_family("13bis"), FamilyId::F13bis);
  EXPECT_FALSE(parse_family("35").has_value());
}

TEST(Families, Validation) {
  EXPECT_TRUE(validate({FamilyId::F1p, 3, 1, 2, 1}).ok());
  Validation v = validate({FamilyId::F1p, 2, 1, 2, 1});
  ASSERT_FALSE(v.ok());
  EXPECT_EQ(v.violations.front(), "m must be odd");
  v = validate({FamilyId::F1, 1, 1, 4, 2});
  ASSERT_FALSE(v.ok());
  EXPECT_EQ(v.violations.front(), "gcd(s,r)=1 fails");
  v = validate({FamilyId::F1, 1, 1, 5, 2});
  ASSERT_TRUE(v.ok());
  EXPECT_EQ(v.canonical.s, 3);
  EXPECT_FALSE(v.notes.empty());
}

TEST(Families, TableOrders) {
  EXPECT_EQ(table_phi_order({FamilyId::F9, 1, 1, 1, 1}), 120);
  EXPECT_EQ(table_phi_order({FamilyId::F2, 2, 3, 1, 1}), 24);
  EXPECT_EQ(table_phi_order({FamilyId::F33, 3, 3, 1, 1}), 72);
  EXPECT_EQ(table_phi_order({FamilyId::F1, 1, 1, 2, 1}), 4);
  for (std::int64_t h = 2; h <= 7; ++h) EXPECT_EQ(table_phi_order({FamilyId::F1p, 1, 1, 2 * h, 1}), h);
}

TEST(Families, GoursatGroupSizes) {
  PairGroup g = goursat_group({FamilyId::F9, 1, 1, 1, 1});
  EXPECT_EQ(g.elements.size(), 240u);
  EXPECT_EQ(phi_order(g), 120);
  g = goursat_group({FamilyId::F1, 1, 1, 2, 1});
  EXPECT_EQ(g.elements.size(), 8u);
  EXPECT_EQ(phi_order(g), 4);
}

TEST(Families, EveryEnumeratedGroupHasTableOrder) {
  for (const FamilySpec& s : enumerate_specs(150, all_families())) {
    PairGroup g = goursat_group(s);
    EXPECT_EQ(static_cast<std::int64_t>(g.elements.size()), 2 * table_phi_order(s)) << s.str();
  }
}

TEST(Families, ContainsMinusOnePair) {
  // (-1, -1) acts trivially, so it lies in every group.
  auto minus_like = [](const GroupElement& x) -> GroupElement {
    if (is_circle(x)) return CircleJElement(Rational(1, 2));
    return quat::minus_one();
  };
  for (const FamilySpec& s : enumerate_specs(60, all_families())) {
    PairGroup g = goursat_group(s);
    const PairElement& e = g.elements.front();
    EXPECT_TRUE(g.contains({minus_like(e.left), minus_like(e.right)})) << s.str();
  }
}

TEST(Families, NonFiberedFamiliesHaveNoBaseAction) {
  PairGroup g = goursat_group({FamilyId::F31, 1, 1, 1, 1});
  EXPECT_EQ(phi_order(g), 120);
  EXPECT_THROW(induced_base_isometry(g.elements.back()), NotHopfPreserving);
}

TEST(Families, Enumeration) {
  EXPECT_TRUE(enumerate_specs(24, {FamilyId::F9}).empty());
  auto f1 = enumerate_specs(8, {FamilyId::F1});
  ASSERT_FALSE(f1.empty());
  for (const auto& s : f1) {
    EXPECT_LE(2 * s.m * s.n * s.r, 8);
    EXPECT_EQ(gcd(s.s, s.r), 1);
  }
  auto at120 = enumerate_specs(120, all_families());
  bool has31 = false, has30 = false;
  for (const auto& s : at120) {
    has31 |= s.family == FamilyId::F31;
    has30 |= s.family == FamilyId::F30;
  }
  EXPECT_TRUE(has31);
  EXPECT_FALSE(has30);
  EXPECT_FALSE(is_fibered(FamilyId::F31));
}
