#include "bernoulli/identity.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "bernoulli/bernoulli.hpp"
#include "bernoulli/combinatorics.hpp"
#include "bernoulli/umbral.hpp"

namespace bernoulli {

namespace {

struct IdentityInfo {
  IdentityId id;
  std::string_view name;
  bool polynomial_valued;
  std::vector<std::string> parameters;
};

const std::vector<IdentityInfo>& registry() {
  static const std::vector<IdentityInfo> identities = {
      {IdentityId::carlitz, "carlitz", false, {"m", "n"}},
      {IdentityId::bencherif_garici, "bencherif_garici", false, {"m", "n", "q"}},
      {IdentityId::apostol42, "apostol42", false, {"n"}},
      {IdentityId::pearl3, "pearl3", false, {"n", "q"}},
      {IdentityId::theorem_KH, "theorem_KH", true, {"n"}},
      {IdentityId::theorem_KH_route, "theorem_KH_route", true, {"n"}},
      {IdentityId::u_sequence, "u_sequence", false, {"n"}},
      {IdentityId::binomial_split, "binomial_split", false, {"n", "k"}},
      {IdentityId::parity_P, "parity_P", true, {"m", "n", "q"}},
      {IdentityId::evenness_Pq, "evenness_Pq", true, {"m", "n", "q"}},
      {IdentityId::umbral_Pq, "umbral_Pq", false, {"m", "n", "q"}},
      {IdentityId::expansion_Pq, "expansion_Pq", true, {"m", "n", "q"}},
      {IdentityId::b1_filter, "b1_filter", false, {"m"}},
      {IdentityId::coefficient_H, "coefficient_H", false, {"n", "q"}},
  };
  return identities;
}

const IdentityInfo& info(IdentityId id) {
  for (const auto& entry : registry()) {
    if (entry.id == id) return entry;
  }
  throw std::logic_error("unregistered identity");
}

std::size_t to_index(std::int64_t v) { return static_cast<std::size_t>(v); }

void require_at_least(std::string_view name, std::int64_t value, std::int64_t minimum) {
  if (value < minimum) {
    throw ParameterError(std::string(name) + " must be >= " + std::to_string(minimum) + ", got " +
                         std::to_string(value));
  }
}

void require_odd_q(std::int64_t q) {
  if (q % 2 == 0) throw ParameterError("q must be odd");
}

Rational binom(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0) return {};
  return Rational(binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k)));
}

Rational frac(std::int64_t p, std::int64_t q) { return Rational(Integer(p), Integer(q)); }

Polynomial one_plus_x_pow(std::int64_t e) { return pow(Polynomial{1, 1}, static_cast<unsigned>(e)); }
Polynomial x_minus_one_pow(std::int64_t e) { return pow(Polynomial{-1, 1}, static_cast<unsigned>(e)); }

std::int64_t param(const Params& params, const std::string& name) {
  auto it = params.find(name);
  if (it == params.end()) throw ParameterError("missing parameter " + name);
  return it->second;
}

// Steps of the Carlitz proof replay.

IdentityReport parity_step(std::int64_t m, std::int64_t n, std::int64_t q, const Polynomial& p) {
  const Rational half = frac(-1, 2);
  const Polynomial right = compose_affine(p, half, 1);
  const Polynomial left = compose_affine(p, half, -1) * Rational(sign_power(q));
  Params params{{"m", m}, {"n", n}, {"q", q}};
  if ((right + left).is_zero()) return make_report(IdentityId::parity_P, params, right + left, Polynomial{}, "printed");
  if ((right - left).is_zero()) return make_report(IdentityId::parity_P, params, right - left, Polynomial{}, "opposite");
  return make_report(IdentityId::parity_P, params, right + left, Polynomial{});
}

IdentityReport evenness_step(std::int64_t m, std::int64_t n, std::int64_t q, const Polynomial& dq) {
  const Rational half = frac(-1, 2);
  const Polynomial right = compose_affine(dq, half, 1);
  const Polynomial left = compose_affine(dq, half, -1);
  Params params{{"m", m}, {"n", n}, {"q", q}};
  if ((right + left).is_zero()) return make_report(IdentityId::evenness_Pq, params, right + left, Polynomial{}, "sum");
  if ((right - left).is_zero()) {
    return make_report(IdentityId::evenness_Pq, params, right - left, Polynomial{}, "difference");
  }
  return make_report(IdentityId::evenness_Pq, params, right + left, Polynomial{});
}

IdentityReport umbral_step(std::int64_t m, std::int64_t n, std::int64_t q, const Polynomial& dq,
                           const BernoulliTable& table) {
  return make_report(IdentityId::umbral_Pq, {{"m", m}, {"n", n}, {"q", q}}, umbral_L(dq, table), Rational{});
}

Polynomial printed_expansion(std::int64_t m, std::int64_t n, std::int64_t q) {
  Polynomial first;
  for (std::int64_t k = 0; k <= m + q; ++k) {
    first += Polynomial::monomial(to_index(n + k), binom(m + q, k) * binom(n + q + k, q));
  }
  Polynomial second;
  for (std::int64_t k = 0; k <= n + q; ++k) {
    second += Polynomial::monomial(to_index(m + k), binom(n + q, k) * binom(m + q + k, q));
  }
  return first * Rational(sign_power(m)) - second * Rational(sign_power(n + q));
}

IdentityReport expansion_step(std::int64_t m, std::int64_t n, std::int64_t q, const Polynomial& dq) {
  const Polynomial scaled = dq * Rational(Integer(1), factorial(static_cast<std::uint64_t>(q)));
  const Polynomial printed = printed_expansion(m, n, q);
  Params params{{"m", m}, {"n", n}, {"q", q}};
  if (scaled == printed) return make_report(IdentityId::expansion_Pq, params, scaled, printed, "printed");
  const Polynomial signed_form = printed * Rational(sign_power(q));
  if (scaled == signed_form) return make_report(IdentityId::expansion_Pq, params, scaled, signed_form, "(-1)^q");
  return make_report(IdentityId::expansion_Pq, params, scaled, printed);
}

void check_proof_params(std::int64_t m, std::int64_t n, std::int64_t q) {
  require_at_least("m", m, 0);
  require_at_least("n", n, 0);
  require_at_least("q", q, 0);
}

}  // namespace

std::string_view to_string(IdentityId id) { return info(id).name; }

std::optional<IdentityId> parse_identity(std::string_view name) {
  for (const auto& entry : registry()) {
    if (entry.name == name) return entry.id;
  }
  return std::nullopt;
}

std::vector<IdentityId> all_identities() {
  std::vector<IdentityId> ids;
  for (const auto& entry : registry()) ids.push_back(entry.id);
  return ids;
}

bool is_polynomial_valued(IdentityId id) { return info(id).polynomial_valued; }

std::vector<std::string> parameter_names(IdentityId id) { return info(id).parameters; }

std::string to_string(const Value& v) {
  if (const auto* r = std::get_if<Rational>(&v)) return r->to_string();
  return to_string(std::get<Polynomial>(v));
}

IdentityReport make_report(IdentityId id, Params params, Value lhs, Value rhs, std::string variant) {
  IdentityReport report;
  report.identity = id;
  report.params = std::move(params);
  report.holds = lhs == rhs;
  report.lhs = std::move(lhs);
  report.rhs = std::move(rhs);
  report.variant = std::move(variant);
  return report;
}

IdentityReport check_carlitz(std::int64_t m, std::int64_t n, const BernoulliTable& table) {
  require_at_least("m", m, 1);
  require_at_least("n", n, 1);
  table.require(to_index(m + n));
  Rational lhs;
  for (std::int64_t k = 0; k <= m; ++k) lhs += binom(m, k) * table[to_index(n + k)];
  Rational rhs;
  for (std::int64_t k = 0; k <= n; ++k) rhs += binom(n, k) * table[to_index(m + k)];
  return make_report(IdentityId::carlitz, {{"m", m}, {"n", n}}, lhs * Rational(sign_power(m)),
                     rhs * Rational(sign_power(n)));
}

IdentityReport check_bencherif_garici(std::int64_t m, std::int64_t n, std::int64_t q,
                                      const BernoulliTable& table) {
  check_proof_params(m, n, q);
  table.require(to_index(m + n + q));
  Rational first;
  for (std::int64_t k = 0; k <= m + q; ++k) first += binom(m + q, k) * binom(n + q + k, q) * table[to_index(n + k)];
  Rational second;
  for (std::int64_t k = 0; k <= n + q; ++k) second += binom(n + q, k) * binom(m + q + k, q) * table[to_index(m + k)];
  Rational difference = first * Rational(sign_power(m)) - second * Rational(sign_power(n + q));
  return make_report(IdentityId::bencherif_garici, {{"m", m}, {"n", n}, {"q", q}}, std::move(difference), Rational{});
}

Polynomial carlitz_auxiliary(std::int64_t m, std::int64_t n, std::int64_t q) {
  check_proof_params(m, n, q);
  Polynomial first = Polynomial::monomial(to_index(n + q)) * one_plus_x_pow(m + q);
  Polynomial second = Polynomial::monomial(to_index(m + q)) * one_plus_x_pow(n + q);
  return first * Rational(sign_power(m + q)) - second * Rational(sign_power(n));
}

std::vector<IdentityReport> symbolic_carlitz_proof(std::int64_t m, std::int64_t n, std::int64_t q,
                                                   const BernoulliTable& table) {
  const Polynomial p = carlitz_auxiliary(m, n, q);
  const Polynomial dq = derivative(p, static_cast<unsigned>(q));
  return {parity_step(m, n, q, p), evenness_step(m, n, q, dq), umbral_step(m, n, q, dq, table),
          expansion_step(m, n, q, dq)};
}

IdentityReport check_apostol42(std::int64_t n, const BernoulliTable& table) {
  require_at_least("n", n, 1);
  table.require(to_index(n + 1));
  Rational lhs;
  for (std::int64_t k = 0; k <= n; ++k) lhs += binom(n, k) * table[to_index(k)] / Rational(n + 2 - k);
  return make_report(IdentityId::apostol42, {{"n", n}}, lhs, table[to_index(n + 1)] / Rational(n + 1));
}

IdentityReport check_u_sequence(std::int64_t n, const BernoulliTable& table) {
  require_at_least("n", n, 0);
  table.require(to_index(n));
  Rational u;
  for (std::int64_t k = 0; k <= n; ++k) u += binom(n + 1, k) * table[to_index(k)];
  return make_report(IdentityId::u_sequence, {{"n", n}}, u, Rational(n == 0 ? 1 : 0));
}

IdentityReport check_binomial_split(std::int64_t n, std::int64_t k) {
  require_at_least("k", k, 0);
  if (k > n) throw ParameterError("binomial_split needs k <= n");
  Rational lhs = binom(n, k) / Rational(n + 2 - k);
  Rational rhs = binom(n + 1, k) / Rational(n + 1) - binom(n + 2, k) / Rational((n + 1) * (n + 2));
  return make_report(IdentityId::binomial_split, {{"n", n}, {"k", k}}, lhs, rhs);
}

Polynomial pearl3_P(std::int64_t n) {
  require_at_least("n", n, 0);
  return Polynomial::monomial(to_index(n + 1), frac(1, 2)) * x_minus_one_pow(n + 1);
}

Polynomial pearl3_K(std::int64_t n, const BernoulliTable& table) {
  require_at_least("n", n, 0);
  Polynomial k_poly;
  for (std::int64_t k = 0; k <= n + 1; ++k) {
    // (1 - (-1)^{n+1-k}) / 2 is 1 for odd n+1-k and 0 otherwise.
    if ((n + 1 - k) % 2 == 0) continue;
    k_poly += bernoulli_polynomial(to_index(n + 1 + k), table).polynomial * binom(n + 1, k);
  }
  return k_poly;
}

Polynomial pearl3_H(std::int64_t n) {
  require_at_least("n", n, 0);
  return Polynomial::monomial(to_index(n), frac(n + 1, 2)) * x_minus_one_pow(n) * Polynomial{-1, 2};
}

IdentityReport check_theorem_KH(std::int64_t n, const BernoulliTable& table) {
  return make_report(IdentityId::theorem_KH, {{"n", n}}, pearl3_K(n, table), pearl3_H(n));
}

IdentityReport check_theorem_KH_route(std::int64_t n, const BernoulliTable& table) {
  const Params params{{"n", n}};
  const Polynomial p = pearl3_P(n);
  const Polynomial dp = derivative(p);
  const Polynomial k_poly = pearl3_K(n, table);

  Polynomial weighted;
  for (std::int64_t k = 0; k <= n + 1; ++k) {
    if ((n + 1 - k) % 2 == 0) continue;
    weighted += Polynomial::monomial(to_index(n + 1 + k), binom(n + 1, k));
  }
  const Polynomial preimage = interval_average_inverse(weighted);

  const std::array<std::pair<std::pair<Polynomial, Polynomial>, const char*>, 6> links = {{
      {{interval_average(dp), compose_affine(p, 1, 1) - p}, "f(P') = P(x+1) - P(x)"},
      {{compose_affine(p, 1, 1) - p, weighted}, "P(x+1) - P(x) = weighted sum of x^(n+1+k)"},
      {{interval_average(k_poly), weighted}, "f(K) = weighted sum of x^(n+1+k)"},
      {{preimage, k_poly}, "f^-1(f(K)) = K"},
      {{preimage, dp}, "f^-1(f(P')) = P'"},
      {{dp, pearl3_H(n)}, "P' = H"},
  }};
  for (const auto& [sides, label] : links) {
    if (sides.first != sides.second) {
      return make_report(IdentityId::theorem_KH_route, params, sides.first, sides.second, label);
    }
  }
  return make_report(IdentityId::theorem_KH_route, params, preimage, pearl3_H(n));
}

IdentityReport check_pearl3(std::int64_t n, std::int64_t q, const BernoulliTable& table) {
  require_at_least("n", n, 0);
  require_at_least("q", q, 1);
  require_odd_q(q);
  table.require(to_index(2 * n + q));
  Rational sum;
  for (std::int64_t k = 0; k <= n + q; ++k) {
    const Rational& b = table[to_index(n + k)];
    if (b.is_zero()) continue;
    sum += binom(n + q, k) * Rational(falling_product(to_index(n), to_index(k), to_index(q))) * b;
  }
  return make_report(IdentityId::pearl3, {{"n", n}, {"q", q}}, sum, Rational{});
}

IdentityReport check_b1_filter(std::int64_t m, const BernoulliTable& table) {
  require_at_least("m", m, 0);
  const Rational& b = table.at(to_index(m));
  Rational filtered = b * frac(1 + sign_power(m), 2);
  return make_report(IdentityId::b1_filter, {{"m", m}}, filtered, m == 1 ? Rational{} : b);
}

IdentityReport check_coefficient_H(std::int64_t n, std::int64_t q) {
  require_at_least("n", n, 0);
  require_at_least("q", q, 1);
  Rational coefficient = extract_coefficient(pearl3_H(n + q - 1), to_index(q));
  Rational printed = n >= 1 ? Rational{} : Rational(sign_power(q + 1) * q);
  return make_report(IdentityId::coefficient_H, {{"n", n}, {"q", q}}, coefficient, printed);
}

std::size_t required_index(IdentityId id, const Params& params) {
  auto get = [&](const char* name) { return std::max<std::int64_t>(0, param(params, name)); };
  switch (id) {
    case IdentityId::carlitz:
      return to_index(get("m") + get("n"));
    case IdentityId::bencherif_garici:
    case IdentityId::parity_P:
    case IdentityId::evenness_Pq:
    case IdentityId::umbral_Pq:
    case IdentityId::expansion_Pq:
      return to_index(get("m") + get("n") + get("q"));
    case IdentityId::apostol42:
      return to_index(get("n") + 1);
    case IdentityId::pearl3:
      return to_index(2 * get("n") + get("q"));
    case IdentityId::theorem_KH:
    case IdentityId::theorem_KH_route:
      return to_index(2 * get("n") + 2);
    case IdentityId::u_sequence:
      return to_index(get("n"));
    case IdentityId::b1_filter:
      return to_index(get("m"));
    case IdentityId::binomial_split:
    case IdentityId::coefficient_H:
      return 0;
  }
  return 0;
}

IdentityReport check(IdentityId id, const Params& params, const BernoulliTable& table) {
  auto get = [&](const char* name) { return param(params, name); };
  switch (id) {
    case IdentityId::carlitz:
      return check_carlitz(get("m"), get("n"), table);
    case IdentityId::bencherif_garici:
      return check_bencherif_garici(get("m"), get("n"), get("q"), table);
    case IdentityId::apostol42:
      return check_apostol42(get("n"), table);
    case IdentityId::pearl3:
      return check_pearl3(get("n"), get("q"), table);
    case IdentityId::theorem_KH:
      return check_theorem_KH(get("n"), table);
    case IdentityId::theorem_KH_route:
      return check_theorem_KH_route(get("n"), table);
    case IdentityId::u_sequence:
      return check_u_sequence(get("n"), table);
    case IdentityId::binomial_split:
      return check_binomial_split(get("n"), get("k"));
    case IdentityId::b1_filter:
      return check_b1_filter(get("m"), table);
    case IdentityId::coefficient_H:
      return check_coefficient_H(get("n"), get("q"));
    case IdentityId::parity_P:
    case IdentityId::evenness_Pq:
    case IdentityId::umbral_Pq:
    case IdentityId::expansion_Pq: {
      const std::int64_t m = get("m"), n = get("n"), q = get("q");
      const Polynomial p = carlitz_auxiliary(m, n, q);
      if (id == IdentityId::parity_P) return parity_step(m, n, q, p);
      const Polynomial dq = derivative(p, static_cast<unsigned>(q));
      if (id == IdentityId::evenness_Pq) return evenness_step(m, n, q, dq);
      if (id == IdentityId::umbral_Pq) return umbral_step(m, n, q, dq, table);
      return expansion_step(m, n, q, dq);
    }
  }
  throw std::logic_error("unhandled identity");
}

}  // namespace bernoulli
