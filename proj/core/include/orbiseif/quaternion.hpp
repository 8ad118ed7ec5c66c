#pragma once

#include <array>
#include <compare>
#include <string>
#include <variant>

#include "orbiseif/quad_field.hpp"
#include "orbiseif/rational.hpp"

namespace orbiseif {

// Floating quaternion w + xi + yj + zk, used only for geometry.
struct Quaternion {
  double w = 1, x = 0, y = 0, z = 0;

  Quaternion conj() const { return {w, -x, -y, -z}; }
  double norm2() const { return w * w + x * x + y * y + z * z; }
  friend Quaternion operator*(const Quaternion& a, const Quaternion& b);
};

// e^{2 pi i angle}, times j when jflag is set. The angle is kept in [0, 1).
struct CircleJElement {
  Rational angle;
  bool jflag = false;

  CircleJElement() = default;
  CircleJElement(Rational t, bool j = false) : angle(t.frac()), jflag(j) {}  // NOLINT

  friend bool operator==(const CircleJElement&, const CircleJElement&) = default;
  friend auto operator<=>(const CircleJElement&, const CircleJElement&) = default;
};

struct AlgebraicQuaternion {
  QuadFieldElement w{1}, x, y, z;

  friend bool operator==(const AlgebraicQuaternion&, const AlgebraicQuaternion&) = default;
  friend auto operator<=>(const AlgebraicQuaternion&, const AlgebraicQuaternion&) = default;

  QuadFieldElement norm2() const { return w * w + x * x + y * y + z * z; }
  AlgebraicQuaternion operator-() const { return {-w, -x, -y, -z}; }
};

using GroupElement = std::variant<CircleJElement, AlgebraicQuaternion>;

struct PairElement {
  GroupElement left;
  GroupElement right;

  friend bool operator==(const PairElement&, const PairElement&) = default;
  friend auto operator<=>(const PairElement&, const PairElement&) = default;
};

CircleJElement multiply(const CircleJElement& a, const CircleJElement& b);
AlgebraicQuaternion multiply(const AlgebraicQuaternion& a, const AlgebraicQuaternion& b);
GroupElement multiply(const GroupElement& a, const GroupElement& b);
PairElement multiply(const PairElement& a, const PairElement& b);

CircleJElement inverse(const CircleJElement& a);
AlgebraicQuaternion inverse(const AlgebraicQuaternion& a);
GroupElement inverse(const GroupElement& a);
PairElement inverse(const PairElement& a);

// Identity in the same representation as the argument.
GroupElement identity_like(const GroupElement& a);
bool is_identity(const GroupElement& a);
bool is_circle(const GroupElement& a);

Quaternion to_numeric(const CircleJElement& a);
Quaternion to_numeric(const AlgebraicQuaternion& a);
Quaternion to_numeric(const GroupElement& a);

std::string to_string(const GroupElement& a);
std::string to_string(const PairElement& a);

}  // namespace orbiseif
