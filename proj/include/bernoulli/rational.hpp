#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "bernoulli/integer.hpp"

namespace bernoulli {

/// Exact fraction kept in canonical form: gcd(|num|, den) = 1 and den > 0.
/// Two rationals are equal iff their stored numerators and denominators are.
class Rational {
 public:
  Rational() : den_(1) {}
  Rational(std::int64_t v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(Integer v) : num_(std::move(v)), den_(1) {}  // NOLINT(google-explicit-constructor)
  /// Throws std::domain_error when den is zero.
  Rational(Integer num, Integer den);

  /// Accepts "p", "-p" or "p/q". Throws std::invalid_argument or std::domain_error.
  static Rational parse(std::string_view text);
  /// "p" when the denominator is 1, otherwise "p/q".
  std::string to_string() const;

  const Integer& numerator() const { return num_; }
  const Integer& denominator() const { return den_; }
  int sign() const { return num_.sign(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_.is_one(); }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  struct Canonical {};
  Rational(Integer num, Integer den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  Integer num_;
  Integer den_;
};

/// Multiplicative inverse. Throws std::domain_error for zero.
Rational inverse(const Rational& a);
Rational abs(const Rational& a);
Rational pow(const Rational& base, unsigned exponent);

/// (-1)^k as a small integer.
constexpr int sign_power(std::int64_t k) { return (k % 2 == 0) ? 1 : -1; }

std::ostream& operator<<(std::ostream& os, const Rational& v);

}  // namespace bernoulli
