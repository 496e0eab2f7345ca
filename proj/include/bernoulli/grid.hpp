#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bernoulli/identity.hpp"

namespace bernoulli {

struct GridAxis {
  std::string name;
  std::vector<std::int64_t> values;

  friend bool operator==(const GridAxis&, const GridAxis&) = default;
};

/// Cartesian parameter grid for one identity. Axes appear in the identity's
/// parameter order; binomial_split skips points with k > n.
struct Grid {
  IdentityId identity{};
  std::vector<GridAxis> axes;

  friend bool operator==(const Grid&, const Grid&) = default;
};

/// "a..b", "a", or a comma list of those, e.g. "1,3..5". Inclusive.
/// Throws std::invalid_argument on malformed text or a > b.
std::vector<std::int64_t> parse_range(std::string_view text);

Grid default_grid(IdentityId id);

/// Replaces or adds the named axis. Throws ParameterError if the identity
/// does not take that parameter.
void set_axis(Grid& grid, std::string name, std::vector<std::int64_t> values);

/// Grid points in row-major order.
std::vector<Params> enumerate(const Grid& grid);

/// Largest Bernoulli index any point of the grid needs.
std::size_t required_index(const Grid& grid);

struct VerificationRun {
  Grid grid;
  std::vector<IdentityReport> reports;
  /// Exactly the reports with holds == false, in report order.
  std::vector<IdentityReport> counterexamples;
  std::map<std::string, double> elapsed_ms;
  /// Set when a precondition failed; reports are then empty.
  std::optional<std::string> error;
};

/// Evaluates the grid against a table that must already cover
/// required_index(grid). Points may run on `threads` workers; reports are
/// always collected in row-major order.
VerificationRun run_grid(const Grid& grid, const BernoulliTable& table, unsigned threads = 1);

}  // namespace bernoulli
