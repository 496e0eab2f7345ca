#include "bernoulli/integer.hpp"

#include <limits>
#include <stdexcept>

namespace bernoulli {

Integer::Integer(std::int64_t v) {
  // mpz_class has no portable int64 constructor on every platform.
  if (v >= std::numeric_limits<long>::min() && v <= std::numeric_limits<long>::max()) {
    value_ = static_cast<long>(v);
  } else {
    value_ = mpz_class(std::to_string(v), 10);
  }
}

Integer Integer::parse(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty()) throw std::invalid_argument("empty integer literal");
  for (char c : digits) {
    if (c < '0' || c > '9') throw std::invalid_argument("malformed integer literal: " + std::string(text));
  }
  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  return Integer(mpz_class(s, 10));
}

std::string Integer::to_string() const { return value_.get_str(10); }

bool Integer::fits_int64() const {
  static const mpz_class lo(std::to_string(std::numeric_limits<std::int64_t>::min()), 10);
  static const mpz_class hi(std::to_string(std::numeric_limits<std::int64_t>::max()), 10);
  return value_ >= lo && value_ <= hi;
}

std::int64_t Integer::to_int64() const {
  if (!fits_int64()) throw std::out_of_range("integer does not fit in 64 bits");
  return std::stoll(to_string());
}

Integer& Integer::operator+=(const Integer& rhs) {
  value_ += rhs.value_;
  return *this;
}

Integer& Integer::operator-=(const Integer& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Integer& Integer::operator*=(const Integer& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Integer& Integer::operator/=(const Integer& rhs) {
  if (rhs.is_zero()) throw std::domain_error("integer division by zero");
  mpz_tdiv_q(value_.get_mpz_t(), value_.get_mpz_t(), rhs.value_.get_mpz_t());
  return *this;
}

Integer& Integer::operator%=(const Integer& rhs) {
  if (rhs.is_zero()) throw std::domain_error("integer division by zero");
  mpz_tdiv_r(value_.get_mpz_t(), value_.get_mpz_t(), rhs.value_.get_mpz_t());
  return *this;
}

Integer Integer::operator-() const { return Integer(mpz_class(-value_)); }

Integer abs(const Integer& a) { return Integer(mpz_class(::abs(a.raw()))); }

Integer gcd(const Integer& a, const Integer& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
  return Integer(std::move(g));
}

Integer divide_exact(const Integer& a, const Integer& b) {
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
  return Integer(std::move(q));
}

Integer pow(const Integer& base, unsigned exponent) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.raw().get_mpz_t(), exponent);
  return Integer(std::move(r));
}

std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.to_string(); }

}  // namespace bernoulli
