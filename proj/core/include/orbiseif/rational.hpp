#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace orbiseif {

// Exact fraction, always reduced with a positive denominator. Intermediate
// products use 128-bit integers; results that do not fit 64 bits throw.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t num) : num_(num) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  std::int64_t floor() const;
  // Representative in [0, 1).
  Rational frac() const;
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string str() const;

 private:
  static Rational from_wide(__int128 num, __int128 den);
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Non-negative remainder of a modulo m (m > 0).
std::int64_t mod(std::int64_t a, std::int64_t m);
std::int64_t gcd(std::int64_t a, std::int64_t b);
std::int64_t gcd(std::int64_t a, std::int64_t b, std::int64_t c);
std::int64_t lcm(std::int64_t a, std::int64_t b);
// Least positive x with a*x = 1 mod m. Modulus 1 yields 1.
std::optional<std::int64_t> inverse_mod(std::int64_t a, std::int64_t m);

}  // namespace orbiseif
