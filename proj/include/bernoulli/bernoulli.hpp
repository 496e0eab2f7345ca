#pragma once

#include <cstddef>

#include "bernoulli/bernoulli_table.hpp"
#include "bernoulli/polynomial.hpp"

namespace bernoulli {

/// B_0..B_N from B_0 = 1 and sum_{k=0}^{n-1} C(n,k) B_k = 0 for n >= 2.
BernoulliTable bernoulli_by_recurrence(std::size_t max_index);

/// B_0..B_N as n! times the coefficients of the reciprocal of
/// (e^t - 1)/t = sum_j t^j/(j+1)!, inverted term by term.
BernoulliTable bernoulli_by_series(std::size_t max_index);

/// B_n(x) with its degree. Monic, constant term B_n.
struct BernoulliPolynomial {
  std::size_t degree = 0;
  Polynomial polynomial;
};

/// B_n(x) = sum_k C(n,k) B_k x^(n-k). Throws TableTooShort if B_n is missing.
BernoulliPolynomial bernoulli_polynomial(std::size_t n, const BernoulliTable& table);

}  // namespace bernoulli
