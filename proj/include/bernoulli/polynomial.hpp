#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bernoulli/rational.hpp"

namespace bernoulli {

/// Dense univariate polynomial over the rationals. coefficients()[i] is the
/// coefficient of x^i; the last stored coefficient is never zero, so the zero
/// polynomial has no coefficients at all.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<Rational> coefficients);

  static Polynomial constant(Rational c);
  /// c * x^k
  static Polynomial monomial(std::size_t k, Rational c = Rational(1));
  static Polynomial x() { return monomial(1); }

  /// Empty for the zero polynomial.
  std::optional<std::size_t> degree() const;
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const Rational> coefficients() const { return coeffs_; }
  /// Coefficient of x^i; zero past the degree.
  const Rational& operator[](std::size_t i) const;
  const Rational& leading_coefficient() const;

  /// Horner evaluation.
  Rational operator()(const Rational& at) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial p, const Rational& c) { return p *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial p) { return p *= c; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

Polynomial pow(const Polynomial& base, unsigned exponent);

/// q-fold formal derivative; q = 0 is the identity.
Polynomial derivative(const Polynomial& p, unsigned q = 1);

/// The antiderivative with zero constant term.
Polynomial antiderivative(const Polynomial& p);

/// x -> p(a + b*x), expanded.
Polynomial compose_affine(const Polynomial& p, const Rational& a, const Rational& b);

/// f(p)(x) = integral of p(t) over [x, x+1]. Linear, degree preserving, and
/// maps x^n to a monic polynomial of degree n.
Polynomial interval_average(const Polynomial& p);

/// The unique q with interval_average(q) == p.
Polynomial interval_average_inverse(const Polynomial& p);

inline Rational extract_coefficient(const Polynomial& p, std::size_t i) { return p[i]; }

/// Human-readable form, highest power first: "x^3 - 1/2*x + 1/6". Zero is "0".
std::string to_string(const Polynomial& p);
/// Inverse of to_string; also accepts extra whitespace and explicit "*x^1".
/// Throws std::invalid_argument on malformed input.
Polynomial parse_polynomial(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace bernoulli
