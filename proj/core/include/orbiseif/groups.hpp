#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orbiseif/quaternion.hpp"

namespace orbiseif {

enum class StandardKind { Cyclic, BinaryDihedral, BinaryTetrahedral, BinaryOctahedral, BinaryIcosahedral };

// Cyclic(n) has order n; BinaryDihedral(2n) = C_n u C_n j has order 2n (n even).
struct StandardGroupId {
  StandardKind kind = StandardKind::Cyclic;
  std::int64_t order = 1;

  static StandardGroupId cyclic(std::int64_t n);
  static StandardGroupId binary_dihedral(std::int64_t order);
  static StandardGroupId tetrahedral() { return {StandardKind::BinaryTetrahedral, 24}; }
  static StandardGroupId octahedral() { return {StandardKind::BinaryOctahedral, 48}; }
  static StandardGroupId icosahedral() { return {StandardKind::BinaryIcosahedral, 120}; }

  bool polyhedral() const;
  std::string name() const;
  friend bool operator==(const StandardGroupId&, const StandardGroupId&) = default;
};

// Cyclic and binary dihedral groups come back circle-type; the polyhedral
// groups come back as algebraic quaternions.
std::vector<GroupElement> standard_group(const StandardGroupId& id);
std::vector<GroupElement> generators(const StandardGroupId& id);
// Small subgroups of the polyhedral groups (C1, C2, C4, D*8 and the
// polyhedral groups themselves) written as algebraic quaternions.
std::vector<GroupElement> algebraic_generators(const StandardGroupId& id);

// Closure of a generating set under multiplication, sorted. Throws
// InternalInconsistency when the set grows past cap.
std::vector<GroupElement> close_group(const std::vector<GroupElement>& gens, const GroupElement& identity,
                                      std::size_t cap);

namespace quat {
AlgebraicQuaternion one();
AlgebraicQuaternion minus_one();
AlgebraicQuaternion i();
AlgebraicQuaternion j();
AlgebraicQuaternion k();
// (1+i+j+k)/2, order 6.
AlgebraicQuaternion omega();
// (1+j)/sqrt2, an element of O* outside T*.
AlgebraicQuaternion octa();
// (tau^{-1} + tau j + k)/2 with tau the golden ratio; together with T* it generates I*.
AlgebraicQuaternion icosa();
}  // namespace quat

// Exterior automorphism of I*: Galois conjugation sqrt5 -> -sqrt5 followed by a
// signed permutation of i, j, k that carries the conjugated group back onto I*.
AlgebraicQuaternion icosahedral_outer(const AlgebraicQuaternion& q);

enum class FamilyId {
  F1, F1p, F2, F3, F4, F5, F6, F7, F8, F9, F10, F11, F11p, F12, F13, F14, F15, F16, F17, F18, F19,
  F33, F33p, F34, F2bis, F3bis, F4bis, F13bis, F34bis,
  F20, F21, F21p, F22, F23, F24, F25, F26, F26p, F26pp, F27, F28, F29, F30, F31, F31p, F32, F32p,
};

const std::vector<FamilyId>& all_families();
std::string to_string(FamilyId f);
std::optional<FamilyId> parse_family(const std::string& s);

bool uses_m(FamilyId f);
bool uses_n(FamilyId f);
bool uses_rs(FamilyId f);
// Families whose left factor is circle-type, so the Hopf fibration descends.
bool is_fibered(FamilyId f);
bool is_abelian(FamilyId f);   // 1, 1p
bool is_dihedral(FamilyId f);  // 11, 11p
bool is_polyhedral_row(FamilyId f);  // everything else that is fibered
// The family this one is the factor-swapped version of, when it is a bis family.
std::optional<FamilyId> bis_base(FamilyId f);

struct FamilySpec {
  FamilyId family = FamilyId::F1;
  std::int64_t m = 1, n = 1, r = 1, s = 1;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
  std::string str() const;
};

struct Validation {
  std::vector<std::string> violations;
  std::vector<std::string> notes;
  FamilySpec canonical;
  bool ok() const { return violations.empty(); }
};

// Side conditions of the classification. s is reduced into [1, r]; for
// families 1 and 11 an even s is replaced by r - s, which gives a conjugate group.
Validation validate(const FamilySpec& spec);

// Order of the image in SO(4); the pair group has twice as many elements.
std::int64_t table_phi_order(const FamilySpec& spec);

struct PairGroup {
  FamilySpec spec;
  StandardGroupId left, left_kernel, right, right_kernel;
  std::vector<PairElement> elements;  // sorted

  bool contains(const PairElement& e) const;
};

PairGroup goursat_group(const FamilySpec& spec);
std::int64_t phi_order(const PairGroup& g);

// All valid specs with image order at most max_order, in a fixed order.
std::vector<FamilySpec> enumerate_specs(std::int64_t max_order, const std::vector<FamilyId>& families);

}  // namespace orbiseif
