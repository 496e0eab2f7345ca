#pragma once

#include <json.hpp>

#include "bernoulli/grid.hpp"
#include "bernoulli/identity.hpp"
#include "bernoulli/polynomial.hpp"
#include "bernoulli/rational.hpp"

// JSON forms. Rationals are "p/q" strings; polynomials are coefficient
// arrays indexed by power; report lhs/rhs use the textual forms.
//
//   IdentityReport:  {"identity", "params": {name: int}, "lhs", "rhs", "holds"[, "variant"]}
//   VerificationRun: {"grid", "reports", "counterexamples", "elapsed_ms"[, "error"]}

namespace bernoulli {

void to_json(nlohmann::json& j, const Rational& r);
void from_json(const nlohmann::json& j, Rational& r);

void to_json(nlohmann::json& j, const Polynomial& p);
void from_json(const nlohmann::json& j, Polynomial& p);

void to_json(nlohmann::json& j, const IdentityReport& r);
void from_json(const nlohmann::json& j, IdentityReport& r);

void to_json(nlohmann::json& j, const Grid& g);
void from_json(const nlohmann::json& j, Grid& g);

void to_json(nlohmann::json& j, const VerificationRun& run);
void from_json(const nlohmann::json& j, VerificationRun& run);

}  // namespace bernoulli
