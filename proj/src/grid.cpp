#include "bernoulli/grid.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>

namespace bernoulli {

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument("malformed range: " + std::string(whole));
  }
  return value;
}

std::vector<std::int64_t> span_of(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  for (std::int64_t v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

std::vector<std::int64_t> odd_values(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  for (std::int64_t v = lo; v <= hi; ++v) {
    if (v % 2 != 0) out.push_back(v);
  }
  return out;
}

}  // namespace

std::vector<std::int64_t> parse_range(std::string_view text) {
  std::vector<std::int64_t> values;
  std::string_view rest = text;
  while (true) {
    auto comma = rest.find(',');
    std::string_view piece = rest.substr(0, comma);
    auto dots = piece.find("..");
    if (dots == std::string_view::npos) {
      values.push_back(parse_int(piece, text));
    } else {
      std::int64_t lo = parse_int(piece.substr(0, dots), text);
      std::int64_t hi = parse_int(piece.substr(dots + 2), text);
      if (lo > hi) throw std::invalid_argument("empty range: " + std::string(text));
      constexpr std::int64_t kMaxSpan = 1'000'000;
      if (hi - lo >= kMaxSpan) throw std::invalid_argument("range too large: " + std::string(text));
      auto more = span_of(lo, hi);
      values.insert(values.end(), more.begin(), more.end());
    }
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return values;
}

Grid default_grid(IdentityId id) {
  Grid grid{id, {}};
  auto add = [&](std::string name, std::vector<std::int64_t> values) {
    grid.axes.push_back({std::move(name), std::move(values)});
  };
  switch (id) {
    case IdentityId::carlitz:
      add("m", span_of(1, 10));
      add("n", span_of(1, 10));
      break;
    case IdentityId::bencherif_garici:
    case IdentityId::parity_P:
    case IdentityId::evenness_Pq:
    case IdentityId::umbral_Pq:
    case IdentityId::expansion_Pq:
      add("m", span_of(0, 8));
      add("n", span_of(0, 8));
      add("q", span_of(0, 4));
      break;
    case IdentityId::apostol42:
      add("n", span_of(1, 50));
      break;
    case IdentityId::pearl3:
      add("n", span_of(1, 20));
      add("q", odd_values(1, 7));
      break;
    case IdentityId::theorem_KH:
      add("n", span_of(0, 20));
      break;
    case IdentityId::theorem_KH_route:
      add("n", span_of(0, 10));
      break;
    case IdentityId::u_sequence:
      add("n", span_of(0, 50));
      break;
    case IdentityId::binomial_split:
      add("n", span_of(0, 20));
      add("k", span_of(0, 20));
      break;
    case IdentityId::b1_filter:
      add("m", span_of(0, 30));
      break;
    case IdentityId::coefficient_H:
      add("n", span_of(0, 5));
      add("q", odd_values(1, 7));
      break;
  }
  return grid;
}

void set_axis(Grid& grid, std::string name, std::vector<std::int64_t> values) {
  auto names = parameter_names(grid.identity);
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    throw ParameterError(std::string(to_string(grid.identity)) + " does not take parameter " + name);
  }
  for (auto& axis : grid.axes) {
    if (axis.name == name) {
      axis.values = std::move(values);
      return;
    }
  }
  grid.axes.push_back({std::move(name), std::move(values)});
  // keep the identity's parameter order
  std::stable_sort(grid.axes.begin(), grid.axes.end(), [&](const GridAxis& a, const GridAxis& b) {
    return std::find(names.begin(), names.end(), a.name) < std::find(names.begin(), names.end(), b.name);
  });
}

std::vector<Params> enumerate(const Grid& grid) {
  std::vector<Params> points;
  if (grid.axes.empty()) return points;
  for (const auto& axis : grid.axes) {
    if (axis.values.empty()) return points;
  }
  std::vector<std::size_t> cursor(grid.axes.size(), 0);
  while (true) {
    Params point;
    for (std::size_t a = 0; a < grid.axes.size(); ++a) point[grid.axes[a].name] = grid.axes[a].values[cursor[a]];
    const bool skip = grid.identity == IdentityId::binomial_split && point.at("k") > point.at("n");
    if (!skip) points.push_back(std::move(point));
    // odometer, last axis fastest
    std::size_t a = grid.axes.size();
    while (a-- > 0) {
      if (++cursor[a] < grid.axes[a].values.size()) break;
      cursor[a] = 0;
      if (a == 0) return points;
    }
  }
}

std::size_t required_index(const Grid& grid) {
  std::size_t needed = 0;
  for (const auto& point : enumerate(grid)) needed = std::max(needed, required_index(grid.identity, point));
  return needed;
}

VerificationRun run_grid(const Grid& grid, const BernoulliTable& table, unsigned threads) {
  VerificationRun run;
  run.grid = grid;
  const auto names = parameter_names(grid.identity);
  for (const auto& name : names) {
    auto found = std::find_if(grid.axes.begin(), grid.axes.end(), [&](const GridAxis& a) { return a.name == name; });
    if (found == grid.axes.end()) {
      run.error = "missing parameter " + name;
      return run;
    }
  }
  const std::vector<Params> points = enumerate(grid);
  table.require(required_index(grid));

  const auto start = std::chrono::steady_clock::now();
  std::vector<IdentityReport> reports(points.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) {
      try {
        reports[i] = check(grid.identity, points[i], table);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = points.size();
      }
    }
  };
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, points.size()))));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  const auto stop = std::chrono::steady_clock::now();

  if (failure) {
    try {
      std::rethrow_exception(failure);
    } catch (const ParameterError& e) {
      run.error = e.what();
      return run;
    }
  }
  run.reports = std::move(reports);
  for (const auto& report : run.reports) {
    if (!report.holds) run.counterexamples.push_back(report);
  }
  run.elapsed_ms[std::string(to_string(grid.identity))] =
      std::chrono::duration<double, std::milli>(stop - start).count();
  return run;
}

}  // namespace bernoulli
