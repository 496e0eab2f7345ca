#include "bernoulli/bernoulli.hpp"

#include "bernoulli/combinatorics.hpp"

namespace bernoulli {

std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::recurrence:
      return "recurrence";
    case Algorithm::series:
      return "series";
  }
  return "unknown";
}

TableTooShort::TableTooShort(std::size_t needed, std::size_t available)
    : std::out_of_range("Bernoulli table too short: need B_" + std::to_string(needed) + ", have " +
                        std::to_string(available) + " entries"),
      needed_(needed) {}

BernoulliTable::BernoulliTable(Algorithm algorithm, std::vector<Rational> values)
    : algorithm_(algorithm), values_(std::move(values)) {}

void BernoulliTable::require(std::size_t index) const {
  if (!covers(index)) throw TableTooShort(index, values_.size());
}

const Rational& BernoulliTable::at(std::size_t index) const {
  require(index);
  return values_[index];
}

namespace {

// B_n from the n+1 instance of the recurrence:
//   (n+1) B_n = -sum_{k=0}^{n-1} C(n+1,k) B_k.
void extend_by_recurrence(std::vector<Rational>& values, std::size_t max_index) {
  if (values.empty()) values.emplace_back(1);
  values.reserve(max_index + 1);
  for (std::size_t n = values.size(); n <= max_index; ++n) {
    Rational sum;
    for (std::size_t k = 0; k < n; ++k) {
      if (values[k].is_zero()) continue;
      sum += Rational(binomial(n + 1, k)) * values[k];
    }
    values.push_back(-sum / Rational(static_cast<std::int64_t>(n + 1)));
  }
}

// With g(t) = sum_j t^j/(j+1)! and c = 1/g, g*c = 1 gives
//   c_n = -sum_{j=1}^{n} c_{n-j}/(j+1)!,  and B_n = n! c_n.
void extend_by_series(std::vector<Rational>& values, std::size_t max_index) {
  if (values.empty()) values.emplace_back(1);
  values.reserve(max_index + 1);
  std::vector<Rational> reciprocal_factorials;  // 1/(j+1)! for j = 0..N
  reciprocal_factorials.reserve(max_index + 1);
  for (std::size_t j = 0; j <= max_index; ++j) {
    reciprocal_factorials.emplace_back(Integer(1), factorial(j + 1));
  }
  std::vector<Rational> series;
  series.reserve(max_index + 1);
  for (std::size_t n = 0; n < values.size(); ++n) {
    series.push_back(values[n] / Rational(factorial(n)));
  }
  for (std::size_t n = values.size(); n <= max_index; ++n) {
    Rational sum;
    for (std::size_t j = 1; j <= n; ++j) {
      if (series[n - j].is_zero()) continue;
      sum += series[n - j] * reciprocal_factorials[j];
    }
    series.push_back(-sum);
    values.push_back(series.back() * Rational(factorial(n)));
  }
}

}  // namespace

void BernoulliTable::extend_to(std::size_t index) {
  if (covers(index)) return;
  switch (algorithm_) {
    case Algorithm::recurrence:
      extend_by_recurrence(values_, index);
      break;
    case Algorithm::series:
      extend_by_series(values_, index);
      break;
  }
}

BernoulliTable bernoulli_by_recurrence(std::size_t max_index) {
  BernoulliTable table(Algorithm::recurrence, {});
  table.extend_to(max_index);
  return table;
}

BernoulliTable bernoulli_by_series(std::size_t max_index) {
  BernoulliTable table(Algorithm::series, {});
  table.extend_to(max_index);
  return table;
}

BernoulliPolynomial bernoulli_polynomial(std::size_t n, const BernoulliTable& table) {
  table.require(n);
  std::vector<Rational> coeffs(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    coeffs[n - k] = Rational(binomial(n, k)) * table[k];
  }
  return {n, Polynomial(std::move(coeffs))};
}

}  // namespace bernoulli
