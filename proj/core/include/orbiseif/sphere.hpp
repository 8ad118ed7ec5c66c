#pragma once

#include <array>
#include <complex>
#include <string>

#include "orbiseif/quaternion.hpp"
#include "orbiseif/rational.hpp"

namespace orbiseif {

using Complex = std::complex<double>;
using Vec3 = std::array<double, 3>;
using Mat3 = std::array<std::array<double, 3>, 3>;

inline constexpr double kGeomTol = 1e-9;
inline constexpr double kSnapTol = 1e-6;

// A point of C u {infinity}; infinity is an explicit tag.
class SpherePoint {
 public:
  static SpherePoint finite(Complex z);
  static SpherePoint infinity();
  // Inverse stereographic chart: the north pole (0,0,1) is infinity.
  static SpherePoint from_unit(const Vec3& v);

  bool is_infinite() const { return infinite_; }
  Complex value() const { return value_; }
  Vec3 to_unit() const;
  std::string str() const;

 private:
  Complex value_{0, 0};
  bool infinite_ = false;
};

double chordal_distance(const SpherePoint& a, const SpherePoint& b);

// lambda -> (a lambda + b)/(c lambda + d), precomposed with the antipodal
// map lambda -> -1/conj(lambda) when orientation_reversing is set.
struct BaseIsometry {
  std::array<Complex, 4> matrix{Complex(1), Complex(0), Complex(0), Complex(1)};
  bool orientation_reversing = false;

  SpherePoint apply(const SpherePoint& p) const;
  // The same map as an orthogonal 3x3 matrix acting on unit vectors.
  Mat3 to_orthogonal() const;
};

SpherePoint antipode(const SpherePoint& p);
SpherePoint apply_mobius(const std::array<Complex, 4>& m, const SpherePoint& p);
// f after g. Assumes unitary-type matrices, which commute with the antipodal map.
BaseIsometry compose(const BaseIsometry& f, const BaseIsometry& g);
bool approx_equal(const BaseIsometry& f, const BaseIsometry& g, double tol = kGeomTol);

SpherePoint hopf_project(const GroupElement& h);
SpherePoint hopf_project(const Quaternion& h);
BaseIsometry induced_base_isometry(const PairElement& e);
// p h q^{-1} in floating point.
Quaternion apply_pair(const PairElement& e, const Quaternion& h);

Rational snap_angle(double x, std::int64_t max_denominator);

}  // namespace orbiseif
