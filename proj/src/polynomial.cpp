#include "bernoulli/polynomial.hpp"

#include <cctype>
#include <stdexcept>

#include "bernoulli/combinatorics.hpp"

namespace bernoulli {

namespace {
const Rational kZero{};
}

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) { trim(); }

Polynomial Polynomial::constant(Rational c) { return Polynomial(std::vector<Rational>{std::move(c)}); }

Polynomial Polynomial::monomial(std::size_t k, Rational c) {
  std::vector<Rational> coeffs(k + 1);
  coeffs[k] = std::move(c);
  return Polynomial(std::move(coeffs));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::optional<std::size_t> Polynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

const Rational& Polynomial::operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : kZero; }

const Rational& Polynomial::leading_coefficient() const { return coeffs_.empty() ? kZero : coeffs_.back(); }

Rational Polynomial::operator()(const Rational& at) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& v : coeffs_) v *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& v : r.coeffs_) v = -v;
  return r;
}

Polynomial pow(const Polynomial& base, unsigned exponent) {
  Polynomial result = Polynomial::constant(1);
  Polynomial square = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= square;
    exponent >>= 1U;
    if (exponent != 0) square *= square;
  }
  return result;
}

Polynomial derivative(const Polynomial& p, unsigned q) {
  auto coeffs = p.coefficients();
  if (q == 0) return p;
  if (coeffs.size() <= q) return {};
  std::vector<Rational> out(coeffs.size() - q);
  for (std::size_t i = 0; i < out.size(); ++i) {
    // d^q/dx^q x^(i+q) = (i+1)(i+2)...(i+q) x^i
    out[i] = coeffs[i + q] * Rational(falling_product(i, 0, q));
  }
  return Polynomial(std::move(out));
}

Polynomial antiderivative(const Polynomial& p) {
  auto coeffs = p.coefficients();
  std::vector<Rational> out(coeffs.size() + 1);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    out[i + 1] = coeffs[i] / Rational(static_cast<std::int64_t>(i + 1));
  }
  return Polynomial(std::move(out));
}

Polynomial compose_affine(const Polynomial& p, const Rational& a, const Rational& b) {
  // Horner in the ring: p(a + b x) = (...(c_d (a+bx) + c_{d-1})(a+bx) + ...)
  const Polynomial inner{a, b};
  Polynomial acc;
  auto coeffs = p.coefficients();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc *= inner;
    acc += Polynomial::constant(*it);
  }
  return acc;
}

Polynomial interval_average(const Polynomial& p) {
  Polynomial prim = antiderivative(p);
  return compose_affine(prim, Rational(1), Rational(1)) - prim;
}

Polynomial interval_average_inverse(const Polynomial& p) {
  auto deg = p.degree();
  if (!deg) return {};
  std::vector<Rational> out(*deg + 1);
  Polynomial residual = p;
  for (std::size_t k = *deg + 1; k-- > 0;) {
    const Rational c = residual[k];
    if (c.is_zero()) continue;
    out[k] = c;
    // f(x^k) is monic of degree k, so this clears the x^k coefficient.
    residual -= interval_average(Polynomial::monomial(k)) * c;
  }
  return Polynomial(std::move(out));
}

std::string to_string(const Polynomial& p) {
  auto coeffs = p.coefficients();
  if (coeffs.empty()) return "0";
  std::string out;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    const Rational& c = coeffs[k];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational magnitude = abs(c);
    if (k == 0) {
      out += magnitude.to_string();
      continue;
    }
    if (magnitude != Rational(1)) out += magnitude.to_string() + "*";
    out += "x";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

namespace {

class PolynomialParser {
 public:
  explicit PolynomialParser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    skip_space();
    if (pos_ == text_.size()) fail();
    Polynomial result;
    bool first = true;
    while (pos_ < text_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = (peek() == '-') ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        fail();
      }
      result += parse_term() * Rational(sign);
      first = false;
      skip_space();
    }
    return result;
  }

 private:
  Polynomial parse_term() {
    Rational coefficient(1);
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coefficient = parse_number();
      skip_space();
      if (peek() != '*') return Polynomial::constant(coefficient);
      ++pos_;
      skip_space();
    }
    if (peek() != 'x') fail();
    ++pos_;
    std::size_t power = 1;
    skip_space();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      power = static_cast<std::size_t>(Integer::parse(take_digits()).to_int64());
    }
    return Polynomial::monomial(power, coefficient);
  }

  Rational parse_number() {
    std::string literal(take_digits());
    if (peek() == '/') {
      ++pos_;
      literal += "/";
      literal += take_digits();
    }
    return Rational::parse(literal);
  }

  std::string_view take_digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail();
    return text_.substr(start, pos_ - start);
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail() const {
    throw std::invalid_argument("malformed polynomial at offset " + std::to_string(pos_) + ": " +
                                std::string(text_));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text) { return PolynomialParser(text).parse(); }

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << to_string(p); }

}  // namespace bernoulli
