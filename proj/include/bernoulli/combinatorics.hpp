#pragma once

#include <cstdint>

#include "bernoulli/integer.hpp"

namespace bernoulli {

/// C(n, k), exact. Zero when k > n.
Integer binomial(std::uint64_t n, std::uint64_t k);

/// (n+k+1)(n+k+2)...(n+k+q); the empty product (q = 0) is 1.
Integer falling_product(std::uint64_t n, std::uint64_t k, std::uint64_t q);

Integer factorial(std::uint64_t n);

}  // namespace bernoulli
