#include "orbiseif/quad_field.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace orbiseif {

QuadFieldElement operator+(const QuadFieldElement& x, const QuadFieldElement& y) {
  return {x.a_ + y.a_, x.b_ + y.b_, x.c_ + y.c_, x.d_ + y.d_};
}

QuadFieldElement operator-(const QuadFieldElement& x, const QuadFieldElement& y) { return x + (-y); }

QuadFieldElement operator*(const QuadFieldElement& x, const QuadFieldElement& y) {
  const Rational two(2), five(5), ten(10);
  Rational a = x.a_ * y.a_ + two * x.b_ * y.b_ + five * x.c_ * y.c_ + ten * x.d_ * y.d_;
  Rational b = x.a_ * y.b_ + x.b_ * y.a_ + five * (x.c_ * y.d_ + x.d_ * y.c_);
  Rational c = x.a_ * y.c_ + x.c_ * y.a_ + two * (x.b_ * y.d_ + x.d_ * y.b_);
  Rational d = x.a_ * y.d_ + x.d_ * y.a_ + x.b_ * y.c_ + x.c_ * y.b_;
  return {a, b, c, d};
}

QuadFieldElement operator/(const QuadFieldElement& x, const QuadFieldElement& y) { return x * y.inverse(); }

Rational QuadFieldElement::norm() const {
  QuadFieldElement p = (*this) * conj2() * conj5() * conj2().conj5();
  return p.a_;
}

QuadFieldElement QuadFieldElement::inverse() const {
  QuadFieldElement others = conj2() * conj5() * conj2().conj5();
  Rational n = ((*this) * others).a_;
  if (n.is_zero()) throw std::domain_error("inverse of zero field element");
  Rational inv = Rational(1) / n;
  return others * QuadFieldElement(inv);
}

double QuadFieldElement::to_double() const {
  return a_.to_double() + b_.to_double() * std::sqrt(2.0) + c_.to_double() * std::sqrt(5.0) +
         d_.to_double() * std::sqrt(10.0);
}

std::string QuadFieldElement::str() const {
  std::ostringstream os;
  os << "(" << a_ << " + " << b_ << "r2 + " << c_ << "r5 + " << d_ << "r10)";
  return os.str();
}

}  // namespace orbiseif
