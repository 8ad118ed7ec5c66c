#include "orbiseif/sphere.hpp"

#include <cmath>
#include <sstream>

#include "orbiseif/errors.hpp"

namespace orbiseif {

namespace {

constexpr double kHuge = 1e15;

}  // namespace

SpherePoint SpherePoint::finite(Complex z) {
  if (!(std::abs(z) < kHuge)) return infinity();
  SpherePoint p;
  p.value_ = z;
  return p;
}

SpherePoint SpherePoint::infinity() {
  SpherePoint p;
  p.infinite_ = true;
  return p;
}

SpherePoint SpherePoint::from_unit(const Vec3& v) {
  double den = 1.0 - v[2];
  if (den < 1e-14) return infinity();
  return finite(Complex(v[0] / den, v[1] / den));
}

Vec3 SpherePoint::to_unit() const {
  if (infinite_) return {0, 0, 1};
  double r2 = std::norm(value_);
  return {2 * value_.real() / (r2 + 1), 2 * value_.imag() / (r2 + 1), (r2 - 1) / (r2 + 1)};
}

std::string SpherePoint::str() const {
  if (infinite_) return "inf";
  std::ostringstream os;
  os << value_.real() << (value_.imag() < 0 ? "-" : "+") << std::abs(value_.imag()) << "i";
  return os.str();
}

double chordal_distance(const SpherePoint& a, const SpherePoint& b) {
  Vec3 u = a.to_unit(), v = b.to_unit();
  return std::sqrt((u[0] - v[0]) * (u[0] - v[0]) + (u[1] - v[1]) * (u[1] - v[1]) + (u[2] - v[2]) * (u[2] - v[2]));
}

SpherePoint antipode(const SpherePoint& p) {
  if (p.is_infinite()) return SpherePoint::finite(0);
  if (p.value() == Complex(0, 0)) return SpherePoint::infinity();
  return SpherePoint::finite(-1.0 / std::conj(p.value()));
}

SpherePoint apply_mobius(const std::array<Complex, 4>& m, const SpherePoint& p) {
  const auto& [a, b, c, d] = m;
  double scale = std::abs(a) + std::abs(b) + std::abs(c) + std::abs(d);
  if (p.is_infinite()) {
    if (std::abs(c) <= 1e-15 * scale) return SpherePoint::infinity();
    return SpherePoint::finite(a / c);
  }
  Complex num = a * p.value() + b;
  Complex den = c * p.value() + d;
  if (std::abs(den) <= 1e-15 * std::abs(num)) return SpherePoint::infinity();
  return SpherePoint::finite(num / den);
}

SpherePoint BaseIsometry::apply(const SpherePoint& p) const {
  return apply_mobius(matrix, orientation_reversing ? antipode(p) : p);
}

Mat3 BaseIsometry::to_orthogonal() const {
  Vec3 cols[3] = {apply(SpherePoint::finite(1)).to_unit(), apply(SpherePoint::finite(Complex(0, 1))).to_unit(),
                  apply(SpherePoint::infinity()).to_unit()};
  Mat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = cols[j][i];
  return r;
}

BaseIsometry compose(const BaseIsometry& f, const BaseIsometry& g) {
  const auto& [a, b, c, d] = f.matrix;
  const auto& [e, h, k, l] = g.matrix;
  BaseIsometry r;
  r.matrix = {a * e + b * k, a * h + b * l, c * e + d * k, c * h + d * l};
  r.orientation_reversing = f.orientation_reversing != g.orientation_reversing;
  return r;
}

bool approx_equal(const BaseIsometry& f, const BaseIsometry& g, double tol) {
  if (f.orientation_reversing != g.orientation_reversing) return false;
  for (const SpherePoint& p : {SpherePoint::finite(0), SpherePoint::finite(1), SpherePoint::infinity()}) {
    if (chordal_distance(f.apply(p), g.apply(p)) > tol) return false;
  }
  return true;
}

SpherePoint hopf_project(const GroupElement& h) {
  if (const auto* c = std::get_if<CircleJElement>(&h)) {
    return c->jflag ? SpherePoint::finite(0) : SpherePoint::infinity();
  }
  const auto& q = std::get<AlgebraicQuaternion>(h);
  if (q.y.is_zero() && q.z.is_zero()) return SpherePoint::infinity();
  return hopf_project(to_numeric(h));
}

SpherePoint hopf_project(const Quaternion& h) {
  Complex z1(h.w, h.x), z2(h.y, h.z);
  if (std::abs(z2) == 0.0) return SpherePoint::infinity();
  return SpherePoint::finite(z1 / z2);
}

BaseIsometry induced_base_isometry(const PairElement& e) {
  const auto* left = std::get_if<CircleJElement>(&e.left);
  if (left == nullptr) throw NotHopfPreserving("left factor is not circle-type");
  Quaternion q = to_numeric(e.right);
  Complex w1(q.w, q.x), w2(q.y, q.z);
  BaseIsometry r;
  r.matrix = {std::conj(w1), std::conj(w2), -w2, w1};
  r.orientation_reversing = left->jflag;
  return r;
}

Quaternion apply_pair(const PairElement& e, const Quaternion& h) {
  return to_numeric(e.left) * h * to_numeric(e.right).conj();
}

Rational snap_angle(double x, std::int64_t max_denominator) {
  if (max_denominator < 1) throw PreconditionError("snap_angle needs a positive denominator bound");
  double k = std::round(x * static_cast<double>(max_denominator));
  if (std::abs(x - k / static_cast<double>(max_denominator)) > kSnapTol) {
    std::ostringstream os;
    os << "cannot snap " << x << " to a multiple of 1/" << max_denominator;
    throw SnapFailure(os.str());
  }
  return Rational(static_cast<std::int64_t>(k), max_denominator);
}

}  // namespace orbiseif
