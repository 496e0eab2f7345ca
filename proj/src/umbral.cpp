#include "bernoulli/umbral.hpp"

namespace bernoulli {

Rational umbral_L(const Polynomial& p, const BernoulliTable& table) {
  auto coeffs = p.coefficients();
  if (coeffs.empty()) return {};
  table.require(coeffs.size() - 1);
  Rational sum;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (!coeffs[i].is_zero()) sum += coeffs[i] * table[i];
  }
  return sum;
}

}  // namespace bernoulli
