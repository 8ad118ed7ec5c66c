#include "orbiseif/quaternion.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "orbiseif/errors.hpp"

namespace orbiseif {

Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z, a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x, a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

CircleJElement multiply(const CircleJElement& a, const CircleJElement& b) {
  if (!a.jflag) return {a.angle + b.angle, b.jflag};
  if (!b.jflag) return {a.angle - b.angle, true};
  return {a.angle - b.angle + Rational(1, 2), false};
}

AlgebraicQuaternion multiply(const AlgebraicQuaternion& a, const AlgebraicQuaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z, a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x, a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

GroupElement multiply(const GroupElement& a, const GroupElement& b) {
  if (a.index() != b.index()) throw RepresentationMismatch("product of elements in different representations");
  if (const auto* ca = std::get_if<CircleJElement>(&a)) return multiply(*ca, std::get<CircleJElement>(b));
  return multiply(std::get<AlgebraicQuaternion>(a), std::get<AlgebraicQuaternion>(b));
}

PairElement multiply(const PairElement& a, const PairElement& b) {
  return {multiply(a.left, b.left), multiply(a.right, b.right)};
}

CircleJElement inverse(const CircleJElement& a) {
  if (a.jflag) return {a.angle + Rational(1, 2), true};
  return {-a.angle, false};
}

AlgebraicQuaternion inverse(const AlgebraicQuaternion& a) { return {a.w, -a.x, -a.y, -a.z}; }

GroupElement inverse(const GroupElement& a) {
  return std::visit([](const auto& v) -> GroupElement { return inverse(v); }, a);
}

PairElement inverse(const PairElement& a) { return {inverse(a.left), inverse(a.right)}; }

GroupElement identity_like(const GroupElement& a) {
  if (std::holds_alternative<CircleJElement>(a)) return CircleJElement{};
  return AlgebraicQuaternion{};
}

bool is_identity(const GroupElement& a) { return a == identity_like(a); }

bool is_circle(const GroupElement& a) { return std::holds_alternative<CircleJElement>(a); }

Quaternion to_numeric(const CircleJElement& a) {
  double t = 2 * std::numbers::pi * a.angle.to_double();
  if (a.jflag) return {0, 0, std::cos(t), std::sin(t)};
  return {std::cos(t), std::sin(t), 0, 0};
}

Quaternion to_numeric(const AlgebraicQuaternion& a) {
  return {a.w.to_double(), a.x.to_double(), a.y.to_double(), a.z.to_double()};
}

Quaternion to_numeric(const GroupElement& a) {
  return std::visit([](const auto& v) { return to_numeric(v); }, a);
}

std::string to_string(const GroupElement& a) {
  std::ostringstream os;
  if (const auto* c = std::get_if<CircleJElement>(&a)) {
    os << "e(" << c->angle << ")" << (c->jflag ? "j" : "");
  } else {
    const auto& q = std::get<AlgebraicQuaternion>(a);
    os << "[" << q.w.str() << ", " << q.x.str() << ", " << q.y.str() << ", " << q.z.str() << "]";
  }
  return os.str();
}

std::string to_string(const PairElement& a) { return "(" + to_string(a.left) + ", " + to_string(a.right) + ")"; }

}  // namespace orbiseif
