#include <doctest.h>

#include <random>

#include "bernoulli/bernoulli.hpp"
#include "bernoulli/polynomial.hpp"
#include "bernoulli/umbral.hpp"

using namespace bernoulli;

namespace {

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> num(-50, 50);
  std::uniform_int_distribution<std::int64_t> den(1, 12);
  return Rational(Integer(num(rng)), Integer(den(rng)));
}

Polynomial random_polynomial(std::mt19937_64& rng, std::size_t max_degree) {
  std::uniform_int_distribution<std::size_t> deg(0, max_degree);
  std::vector<Rational> coeffs(deg(rng) + 1);
  for (auto& c : coeffs) c = random_rational(rng);
  return Polynomial(std::move(coeffs));
}

const BernoulliTable& table() {
  static const BernoulliTable t = bernoulli_by_recurrence(120);
  return t;
}

}  // namespace

TEST_CASE("canonical form and degree") {
  CHECK(Polynomial{0, 0, 0}.is_zero());
  CHECK_FALSE(Polynomial{}.degree().has_value());
  CHECK(Polynomial{1, 2, 0}.degree() == 1);
  CHECK(Polynomial{1, 2, 0}.coefficients().size() == 2);
  CHECK(Polynomial::constant(0).is_zero());
  CHECK((Polynomial{1, 1} - Polynomial{1, 1}).is_zero());
}

TEST_CASE("ring operations") {
  const Polynomial x = Polynomial::x();
  CHECK((x + Polynomial::constant(1)) * (x - Polynomial::constant(1)) == Polynomial{-1, 0, 1});
  const Polynomial p{3, Rational(1, 2), -7};
  CHECK(p + Polynomial{} == p);
  CHECK(Rational(2) * (x * Rational(1, 2)) == x);
  CHECK(p * Rational(0) == Polynomial{});
  CHECK(pow(Polynomial{1, 1}, 3) == Polynomial{1, 3, 3, 1});
  CHECK(pow(p, 0) == Polynomial::constant(1));
}

TEST_CASE("evaluation") {
  const Polynomial p{1, -3, 2};  // 2x^2 - 3x + 1
  CHECK(p(Rational(1, 2)) == Rational(0));
  CHECK(p(Rational(0)) == Rational(1));
  CHECK(Polynomial{}(Rational(5)) == Rational(0));
}

TEST_CASE("derivative") {
  CHECK(derivative(Polynomial::monomial(3)) == Polynomial::monomial(2, 3));
  const Polynomial p{4, 5, 6, 7};
  CHECK(derivative(p, 0) == p);
  CHECK(derivative(p, 4).is_zero());
  CHECK(derivative(p, 2) == derivative(derivative(p)));
  CHECK(derivative(Polynomial::monomial(5), 3) == Polynomial::monomial(2, 60));
}

TEST_CASE("derivative of Bernoulli polynomials") {
  for (std::size_t n = 1; n <= 40; ++n) {
    CHECK(derivative(bernoulli_polynomial(n, table()).polynomial) ==
          bernoulli_polynomial(n - 1, table()).polynomial * Rational(static_cast<std::int64_t>(n)));
  }
}

TEST_CASE("compose_affine") {
  const Polynomial sq = Polynomial::monomial(2);
  CHECK(compose_affine(sq, 0, 1) == sq);
  CHECK(compose_affine(sq, Rational(-1, 2), -1) == Polynomial{Rational(1, 4), 1, 1});
  CHECK(compose_affine(Polynomial{1, 1}, 1, 1) == Polynomial{2, 1});
  CHECK(compose_affine(Polynomial{}, 3, 4).is_zero());
}

TEST_CASE("chain rule for affine substitution") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    const Polynomial p = random_polynomial(rng, 12);
    const Rational a = random_rational(rng), b = random_rational(rng);
    CHECK(derivative(compose_affine(p, a, b)) == b * compose_affine(derivative(p), a, b));
  }
}

TEST_CASE("interval_average basics") {
  CHECK(interval_average(Polynomial::constant(1)) == Polynomial::constant(1));
  CHECK(interval_average(Polynomial::x()) == Polynomial{Rational(1, 2), 1});
  CHECK(interval_average(Polynomial{}).is_zero());
  CHECK(interval_average_inverse(Polynomial::constant(1)) == Polynomial::constant(1));
  for (std::size_t n = 0; n <= 40; ++n) {
    const Polynomial image = interval_average(Polynomial::monomial(n));
    CHECK(image.degree() == n);
    CHECK(image.leading_coefficient() == Rational(1));
  }
}

TEST_CASE("interval_average maps B_n(x) to x^n and back") {
  for (std::size_t n = 0; n <= 40; ++n) {
    const Polynomial b = bernoulli_polynomial(n, table()).polynomial;
    CHECK(interval_average(b) == Polynomial::monomial(n));
    CHECK(interval_average_inverse(Polynomial::monomial(n)) == b);
  }
}

TEST_CASE("interval_average is linear and invertible on random input") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 40; ++i) {
    const Polynomial p = random_polynomial(rng, 30);
    const Polynomial q = random_polynomial(rng, 30);
    const Rational a = random_rational(rng), b = random_rational(rng);
    CHECK(interval_average(a * p + b * q) == a * interval_average(p) + b * interval_average(q));
    CHECK(interval_average(p).degree() == p.degree());
    CHECK(interval_average_inverse(interval_average(p)) == p);
    CHECK(interval_average(interval_average_inverse(p)) == p);
  }
}

TEST_CASE("difference equation of Bernoulli polynomials") {
  for (std::size_t n = 1; n <= 40; ++n) {
    const Polynomial b = bernoulli_polynomial(n, table()).polynomial;
    CHECK(compose_affine(b, 1, 1) - b == Polynomial::monomial(n - 1, Rational(static_cast<std::int64_t>(n))));
  }
}

TEST_CASE("umbral_L") {
  CHECK(umbral_L(Polynomial::monomial(2), table()) == Rational(1, 6));
  CHECK(umbral_L(Polynomial::constant(1), table()) == Rational(1));
  CHECK(umbral_L(Polynomial{}, table()) == Rational(0));
  const Polynomial shifted{Rational(1, 2), 1};
  for (unsigned m = 0; m <= 20; ++m) CHECK(umbral_L(pow(shifted, 2 * m + 1), table()).is_zero());
  const BernoulliTable small = bernoulli_by_recurrence(3);
  CHECK_THROWS_AS(umbral_L(Polynomial::monomial(4), small), TableTooShort);
}

TEST_CASE("umbral_L is linear and evaluates shifted powers") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 30; ++i) {
    const Polynomial p = random_polynomial(rng, 25), q = random_polynomial(rng, 25);
    const Rational a = random_rational(rng), b = random_rational(rng);
    CHECK(umbral_L(a * p + b * q, table()) == a * umbral_L(p, table()) + b * umbral_L(q, table()));
  }
  for (int i = 0; i < 10; ++i) {
    const Rational y = random_rational(rng);
    for (unsigned n = 0; n <= 30; ++n) {
      CHECK(umbral_L(pow(Polynomial{y, 1}, n), table()) == bernoulli_polynomial(n, table()).polynomial(y));
    }
  }
}

TEST_CASE("extract_coefficient") {
  const Polynomial p{-1, 0, 1};
  CHECK(extract_coefficient(p, 0) == Rational(-1));
  CHECK(extract_coefficient(p, 1) == Rational(0));
  CHECK(extract_coefficient(p, 2 + 5) == Rational(0));
}

TEST_CASE("text form") {
  CHECK(to_string(Polynomial{Rational(1, 6), Rational(-1, 2), 0, 1}) == "x^3 - 1/2*x + 1/6");
  CHECK(to_string(Polynomial{}) == "0");
  CHECK(to_string(Polynomial{Rational(-1, 2), 1}) == "x - 1/2");
  CHECK(to_string(Polynomial{0, -1}) == "-x");
  CHECK(to_string(Polynomial{0, 0, Rational(-3, 2)}) == "-3/2*x^2");
  CHECK(parse_polynomial("x^3 - 1/2*x + 1/6") == Polynomial{Rational(1, 6), Rational(-1, 2), 0, 1});
  CHECK(parse_polynomial(" -x + 2 * x ^ 1 ") == Polynomial::x());
  CHECK(parse_polynomial("0").is_zero());
  CHECK_THROWS_AS(parse_polynomial(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_polynomial("x^"), std::invalid_argument);
  CHECK_THROWS_AS(parse_polynomial("2 x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_polynomial("y"), std::invalid_argument);
}

TEST_CASE("text form round trips") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const Polynomial p = random_polynomial(rng, 15);
    CHECK(parse_polynomial(to_string(p)) == p);
  }
}
