#include "bernoulli/rational.hpp"

#include <stdexcept>

namespace bernoulli {

Rational::Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = Integer(1);
    return;
  }
  Integer g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ = divide_exact(num_, g);
    den_ = divide_exact(den_, g);
  }
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(Integer::parse(text));
  auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw std::invalid_argument("malformed rational literal: " + std::string(text));
  }
  return Rational(Integer::parse(text.substr(0, slash)), Integer::parse(den_text));
}

std::string Rational::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) { return *this *= inverse(rhs); }

Rational Rational::operator-() const { return Rational(-num_, den_, Canonical{}); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return (a.num_ * b.den_) <=> (b.num_ * a.den_);
}

Rational inverse(const Rational& a) {
  if (a.is_zero()) throw std::domain_error("inverse of zero");
  return Rational(a.denominator(), a.numerator());
}

Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }

Rational pow(const Rational& base, unsigned exponent) {
  return Rational(pow(base.numerator(), exponent), pow(base.denominator(), exponent));
}

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

}  // namespace bernoulli
