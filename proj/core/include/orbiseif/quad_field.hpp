#pragma once

#include <compare>
#include <string>

#include "orbiseif/rational.hpp"

namespace orbiseif {

// a + b*sqrt2 + c*sqrt5 + d*sqrt10 with rational coefficients.
class QuadFieldElement {
 public:
  QuadFieldElement() = default;
  QuadFieldElement(Rational a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  QuadFieldElement(Rational a, Rational b, Rational c, Rational d) : a_(a), b_(b), c_(c), d_(d) {}

  static QuadFieldElement sqrt2() { return {0, 1, 0, 0}; }
  static QuadFieldElement sqrt5() { return {0, 0, 1, 0}; }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }
  const Rational& d() const { return d_; }

  QuadFieldElement operator-() const { return {-a_, -b_, -c_, -d_}; }
  friend QuadFieldElement operator+(const QuadFieldElement& x, const QuadFieldElement& y);
  friend QuadFieldElement operator-(const QuadFieldElement& x, const QuadFieldElement& y);
  friend QuadFieldElement operator*(const QuadFieldElement& x, const QuadFieldElement& y);
  friend QuadFieldElement operator/(const QuadFieldElement& x, const QuadFieldElement& y);

  friend bool operator==(const QuadFieldElement&, const QuadFieldElement&) = default;
  friend auto operator<=>(const QuadFieldElement&, const QuadFieldElement&) = default;

  bool is_zero() const { return a_.is_zero() && b_.is_zero() && c_.is_zero() && d_.is_zero(); }
  // Galois automorphisms: negate sqrt2 (and sqrt10), or negate sqrt5 (and sqrt10).
  QuadFieldElement conj2() const { return {a_, -b_, c_, -d_}; }
  QuadFieldElement conj5() const { return {a_, b_, -c_, -d_}; }
  // Product over all four conjugates; zero exactly when the element is zero.
  Rational norm() const;
  QuadFieldElement inverse() const;
  double to_double() const;
  std::string str() const;

 private:
  Rational a_, b_, c_, d_;
};

}  // namespace orbiseif
