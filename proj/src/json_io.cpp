#include "bernoulli/json_io.hpp"

#include <stdexcept>

namespace bernoulli {

void to_json(nlohmann::json& j, const Rational& r) { j = r.to_string(); }

void from_json(const nlohmann::json& j, Rational& r) { r = Rational::parse(j.get<std::string>()); }

void to_json(nlohmann::json& j, const Polynomial& p) {
  j = nlohmann::json::array();
  for (const auto& c : p.coefficients()) j.push_back(c.to_string());
}

void from_json(const nlohmann::json& j, Polynomial& p) { p = Polynomial(j.get<std::vector<Rational>>()); }

namespace {

Value parse_value(IdentityId id, const std::string& text) {
  if (is_polynomial_valued(id)) return parse_polynomial(text);
  return Rational::parse(text);
}

IdentityId identity_from_json(const nlohmann::json& j) {
  const auto name = j.get<std::string>();
  auto id = parse_identity(name);
  if (!id) throw std::invalid_argument("unknown identity: " + name);
  return *id;
}

}  // namespace

void to_json(nlohmann::json& j, const IdentityReport& r) {
  j = nlohmann::json{{"identity", std::string(to_string(r.identity))},
                     {"params", r.params},
                     {"lhs", to_string(r.lhs)},
                     {"rhs", to_string(r.rhs)},
                     {"holds", r.holds}};
  if (!r.variant.empty()) j["variant"] = r.variant;
}

void from_json(const nlohmann::json& j, IdentityReport& r) {
  r.identity = identity_from_json(j.at("identity"));
  r.params = j.at("params").get<Params>();
  r.lhs = parse_value(r.identity, j.at("lhs").get<std::string>());
  r.rhs = parse_value(r.identity, j.at("rhs").get<std::string>());
  r.holds = j.at("holds").get<bool>();
  r.variant = j.value("variant", std::string{});
}

void to_json(nlohmann::json& j, const Grid& g) {
  j = nlohmann::json{{"identity", std::string(to_string(g.identity))}};
  for (const auto& axis : g.axes) j[axis.name] = axis.values;
}

void from_json(const nlohmann::json& j, Grid& g) {
  g.identity = identity_from_json(j.at("identity"));
  g.axes.clear();
  for (const auto& name : parameter_names(g.identity)) {
    if (j.contains(name)) g.axes.push_back({name, j.at(name).get<std::vector<std::int64_t>>()});
  }
}

void to_json(nlohmann::json& j, const VerificationRun& run) {
  j = nlohmann::json{{"grid", run.grid},
                     {"reports", run.reports},
                     {"counterexamples", run.counterexamples},
                     {"elapsed_ms", run.elapsed_ms}};
  if (run.error) j["error"] = *run.error;
}

void from_json(const nlohmann::json& j, VerificationRun& run) {
  run.grid = j.at("grid").get<Grid>();
  run.reports = j.at("reports").get<std::vector<IdentityReport>>();
  run.counterexamples = j.at("counterexamples").get<std::vector<IdentityReport>>();
  run.elapsed_ms = j.at("elapsed_ms").get<std::map<std::string, double>>();
  if (j.contains("error")) {
    run.error = j.at("error").get<std::string>();
  } else {
    run.error.reset();
  }
}

}  // namespace bernoulli
