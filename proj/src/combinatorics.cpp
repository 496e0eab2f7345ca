#include "bernoulli/combinatorics.hpp"

namespace bernoulli {

Integer binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return Integer(0);
  if (k > n - k) k = n - k;
  // After step i the accumulator equals C(n-k+i, i), so each division is exact.
  mpz_class acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc *= static_cast<unsigned long>(n - k + i);
    mpz_divexact_ui(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(i));
  }
  return Integer(std::move(acc));
}

Integer falling_product(std::uint64_t n, std::uint64_t k, std::uint64_t q) {
  mpz_class acc = 1;
  for (std::uint64_t j = 1; j <= q; ++j) acc *= static_cast<unsigned long>(n + k + j);
  return Integer(std::move(acc));
}

Integer factorial(std::uint64_t n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return Integer(std::move(r));
}

}  // namespace bernoulli
