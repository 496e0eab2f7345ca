#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bernoulli/bernoulli_table.hpp"
#include "bernoulli/polynomial.hpp"

namespace bernoulli {

enum class IdentityId {
  carlitz,
  bencherif_garici,
  apostol42,
  pearl3,
  theorem_KH,
  theorem_KH_route,
  u_sequence,
  binomial_split,
  parity_P,
  evenness_Pq,
  umbral_Pq,
  expansion_Pq,
  b1_filter,
  coefficient_H,
};

std::string_view to_string(IdentityId id);
std::optional<IdentityId> parse_identity(std::string_view name);
std::vector<IdentityId> all_identities();
/// True when lhs/rhs of the identity's reports are polynomials.
bool is_polynomial_valued(IdentityId id);
/// Parameter names in grid (row-major) order, e.g. {"m", "n", "q"}.
std::vector<std::string> parameter_names(IdentityId id);

/// A parameter tuple outside the identity's stated range (e.g. even q for pearl3).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Value = std::variant<Rational, Polynomial>;
std::string to_string(const Value& v);

using Params = std::map<std::string, std::int64_t>;

/// One checked instance. holds is true exactly when lhs == rhs.
struct IdentityReport {
  IdentityId identity{};
  Params params;
  Value lhs;
  Value rhs;
  bool holds = false;
  /// Which sign reading verified, for the steps where the printed and the
  /// derived sign disagree; empty otherwise.
  std::string variant;

  friend bool operator==(const IdentityReport&, const IdentityReport&) = default;
};

IdentityReport make_report(IdentityId id, Params params, Value lhs, Value rhs, std::string variant = {});

// Pearl #1 -------------------------------------------------------------------

/// (-1)^m sum_k C(m,k) B_{n+k}  vs  (-1)^n sum_k C(n,k) B_{m+k};  m, n >= 1.
IdentityReport check_carlitz(std::int64_t m, std::int64_t n, const BernoulliTable& table);

/// lhs is the q-weighted difference, rhs is 0. Reduces to carlitz lhs - rhs at q = 0.
IdentityReport check_bencherif_garici(std::int64_t m, std::int64_t n, std::int64_t q,
                                      const BernoulliTable& table);

/// P(x) = (-1)^{m+q} x^{n+q} (1+x)^{m+q} - (-1)^n x^{m+q} (1+x)^{n+q}.
Polynomial carlitz_auxiliary(std::int64_t m, std::int64_t n, std::int64_t q);

/// Replays the proof for (m, n, q): parity of P about -1/2, evenness of
/// P^(q) about -1/2, L(P^(q)) = 0, and the binomial expansion of P^(q)/q!.
std::vector<IdentityReport> symbolic_carlitz_proof(std::int64_t m, std::int64_t n, std::int64_t q,
                                                   const BernoulliTable& table);

// Pearl #2 -------------------------------------------------------------------

/// sum_k C(n,k) B_k/(n+2-k) = B_{n+1}/(n+1);  n >= 1.
IdentityReport check_apostol42(std::int64_t n, const BernoulliTable& table);
/// u_n = sum_{k<=n} C(n+1,k) B_k; expected 1 at n = 0 and 0 afterwards.
IdentityReport check_u_sequence(std::int64_t n, const BernoulliTable& table);
/// C(n,k)/(n+2-k) = C(n+1,k)/(n+1) - C(n+2,k)/((n+1)(n+2));  0 <= k <= n.
IdentityReport check_binomial_split(std::int64_t n, std::int64_t k);

// Pearl #3 -------------------------------------------------------------------

/// P_n(x) = x^{n+1} (x-1)^{n+1} / 2.
Polynomial pearl3_P(std::int64_t n);
/// K_n(x) = sum_k C(n+1,k) (1 - (-1)^{n+1-k})/2 B_{n+1+k}(x).
Polynomial pearl3_K(std::int64_t n, const BernoulliTable& table);
/// H_n(x) = (n+1) x^n (x-1)^n (2x-1) / 2.
Polynomial pearl3_H(std::int64_t n);

/// K_n == H_n coefficientwise.
IdentityReport check_theorem_KH(std::int64_t n, const BernoulliTable& table);
/// K_n == H_n through f and f^{-1}: f(P_n') = P_n(x+1) - P_n(x) = sum of
/// weighted x^{n+1+k} = f(K_n), then f^{-1} of that image equals P_n' = H_n.
/// On failure lhs/rhs hold the first mismatching link and variant names it.
IdentityReport check_theorem_KH_route(std::int64_t n, const BernoulliTable& table);

/// sum_k C(n+q,k) prod_{j=1}^q (n+k+j) B_{n+k} = 0. Throws ParameterError for even q.
IdentityReport check_pearl3(std::int64_t n, std::int64_t q, const BernoulliTable& table);

/// (1 + (-1)^m)/2 B_m  vs  (m == 1 ? 0 : B_m).
IdentityReport check_b1_filter(std::int64_t m, const BernoulliTable& table);

/// [x^q] H_{n+q-1} against the printed case split (0 for n >= 1,
/// (-1)^{q+1} q for n = 0). A findings check: it does not hold everywhere.
IdentityReport check_coefficient_H(std::int64_t n, std::int64_t q);

// ---------------------------------------------------------------------------

/// Largest Bernoulli index the checker touches at these parameters.
std::size_t required_index(IdentityId id, const Params& params);

/// Runs one checker; for the four proof steps, returns only that step.
IdentityReport check(IdentityId id, const Params& params, const BernoulliTable& table);

}  // namespace bernoulli
