#pragma once

#include <cstddef>
#include <functional>
#include <ostream>
#include <span>
#include <string>

#include "bernoulli/bernoulli_table.hpp"

namespace bernoulli::cli {

enum class Format { text, json, csv };

/// Seams for tests: where `verify` and `num` get their table, and which
/// algorithm `bench` races against the recurrence.
struct Hooks {
  std::function<BernoulliTable(std::size_t)> table_provider;
  std::function<BernoulliTable(std::size_t)> series_algorithm;
};

/// Default ceiling on any requested Bernoulli index; override with BERNOULLI_MAX_N.
inline constexpr std::size_t kDefaultMaxIndex = 5000;

/// Runs one invocation. args excludes the program name. Returns 0 on success,
/// 1 when a check failed (counterexample, disagreement), 2 on usage errors.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err, const Hooks& hooks = {});

}  // namespace bernoulli::cli
