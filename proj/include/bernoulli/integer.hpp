#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace bernoulli {

/// Arbitrary-precision signed integer. Thin value wrapper over GMP's mpz.
class Integer {
 public:
  Integer() = default;
  Integer(std::int64_t v);  // NOLINT(google-explicit-constructor)
  explicit Integer(mpz_class v) : value_(std::move(v)) {}

  /// Parses an optionally signed decimal string. Throws std::invalid_argument.
  static Integer parse(std::string_view text);
  std::string to_string() const;

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_one() const { return value_ == 1; }
  bool fits_int64() const;
  std::int64_t to_int64() const;

  Integer& operator+=(const Integer& rhs);
  Integer& operator-=(const Integer& rhs);
  Integer& operator*=(const Integer& rhs);
  /// Truncating division. Throws std::domain_error on a zero divisor.
  Integer& operator/=(const Integer& rhs);
  Integer& operator%=(const Integer& rhs);

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }
  friend Integer operator/(Integer a, const Integer& b) { return a /= b; }
  friend Integer operator%(Integer a, const Integer& b) { return a %= b; }
  Integer operator-() const;

  friend bool operator==(const Integer& a, const Integer& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

  const mpz_class& raw() const { return value_; }

 private:
  mpz_class value_;
};

Integer abs(const Integer& a);
Integer gcd(const Integer& a, const Integer& b);
/// a / b where b is known to divide a; undefined result otherwise.
Integer divide_exact(const Integer& a, const Integer& b);
Integer pow(const Integer& base, unsigned exponent);

std::ostream& operator<<(std::ostream& os, const Integer& v);

}  // namespace bernoulli
