#pragma once

#include "bernoulli/bernoulli_table.hpp"
#include "bernoulli/polynomial.hpp"

namespace bernoulli {

/// The umbral functional: L(x^i) = B_i, extended linearly, so that
/// L((x + y)^n) = B_n(y). Throws TableTooShort if deg p is past the table.
Rational umbral_L(const Polynomial& p, const BernoulliTable& table);

}  // namespace bernoulli
