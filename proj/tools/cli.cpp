#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bernoulli/bernoulli.hpp"
#include "bernoulli/grid.hpp"
#include "bernoulli/json_io.hpp"

namespace bernoulli::cli {

namespace {

/// Raised for anything that should exit with status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Format parse_format(const std::string& name) {
  if (name == "text") return Format::text;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  throw UsageError("unknown format: " + name);
}

std::size_t parse_natural(const std::string& text, const char* what) {
  try {
    Integer value = Integer::parse(text);
    if (value.sign() < 0 || !value.fits_int64()) throw std::invalid_argument("negative");
    return static_cast<std::size_t>(value.to_int64());
  } catch (const std::invalid_argument&) {
    throw UsageError(std::string(what) + " must be a non-negative integer, got '" + text + "'");
  }
}

std::size_t max_index() {
  const char* env = std::getenv("BERNOULLI_MAX_N");
  if (env == nullptr || *env == '\0') return kDefaultMaxIndex;
  return parse_natural(env, "BERNOULLI_MAX_N");
}

void check_ceiling(std::size_t index) {
  const std::size_t ceiling = max_index();
  if (index > ceiling) {
    throw UsageError("index " + std::to_string(index) + " exceeds BERNOULLI_MAX_N=" + std::to_string(ceiling));
  }
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

BernoulliTable make_table(const Hooks& hooks, std::size_t index) {
  if (hooks.table_provider) return hooks.table_provider(index);
  return bernoulli_by_recurrence(index);
}

BernoulliTable make_series(const Hooks& hooks, std::size_t index) {
  if (hooks.series_algorithm) return hooks.series_algorithm(index);
  return bernoulli_by_series(index);
}

bool same_values(const BernoulliTable& a, const BernoulliTable& b) {
  return std::ranges::equal(a.values(), b.values());
}

// num -------------------------------------------------------------------------

struct NumOptions {
  std::string index_text;
  bool check = false;
};

int cmd_num(const NumOptions& opts, Format format, std::ostream& out, std::ostream& err, const Hooks& hooks) {
  const std::size_t n = parse_natural(opts.index_text, "N");
  check_ceiling(n);
  const BernoulliTable table = make_table(hooks, n);
  table.require(n);
  std::optional<bool> agree;
  if (opts.check) agree = same_values(table, make_series(hooks, n));

  switch (format) {
    case Format::text:
      for (std::size_t i = 0; i <= n; ++i) out << i << ", " << table[i] << '\n';
      if (agree) out << "agree: " << (*agree ? "true" : "false") << '\n';
      break;
    case Format::json: {
      nlohmann::json j{{"algorithm", std::string(to_string(table.algorithm()))},
                       {"values", std::vector<Rational>(table.values().begin(), table.values().begin() + n + 1)}};
      if (agree) j["agree"] = *agree;
      out << j.dump(2) << '\n';
      break;
    }
    case Format::csv:
      out << "n,value\n";
      for (std::size_t i = 0; i <= n; ++i) out << i << ',' << quoted(table[i].to_string()) << '\n';
      break;
  }
  if (agree && !*agree) {
    err << "recurrence and series disagree\n";
    return 1;
  }
  return 0;
}

// poly ------------------------------------------------------------------------

struct PolyOptions {
  std::string degree_text;
  std::string at;
};

int cmd_poly(const PolyOptions& opts, Format format, std::ostream& out, std::ostream& err, const Hooks& hooks) {
  const std::size_t n = parse_natural(opts.degree_text, "n");
  check_ceiling(n);
  const BernoulliTable table = make_table(hooks, n);
  const Polynomial poly = bernoulli_polynomial(n, table).polynomial;
  if (poly[0] != table[n]) {
    err << "constant term of B_" << n << "(x) differs from B_" << n << '\n';
    return 1;
  }
  std::optional<Rational> point;
  if (!opts.at.empty()) {
    try {
      point = Rational::parse(opts.at);
    } catch (const std::exception& e) {
      throw UsageError(std::string("--at: ") + e.what());
    }
  }

  switch (format) {
    case Format::text:
      if (point) {
        out << poly(*point) << '\n';
      } else {
        out << poly << '\n';
      }
      break;
    case Format::json: {
      nlohmann::json j{{"n", n}, {"coefficients", poly}, {"text", to_string(poly)}};
      if (point) {
        j["at"] = *point;
        j["value"] = poly(*point);
      }
      out << j.dump(2) << '\n';
      break;
    }
    case Format::csv:
      if (point) {
        out << "at,value\n" << quoted(point->to_string()) << ',' << quoted(poly(*point).to_string()) << '\n';
      } else {
        out << "power,coefficient\n";
        for (std::size_t i = 0; i <= n; ++i) out << i << ',' << quoted(poly[i].to_string()) << '\n';
      }
      break;
  }
  return 0;
}

// verify ----------------------------------------------------------------------

struct VerifyOptions {
  std::string identity;
  std::string m, n, q, k;
  unsigned threads = 1;
};

void write_report_rows(const std::vector<IdentityReport>& reports, std::ostream& out) {
  if (reports.empty()) return;
  const auto names = parameter_names(reports.front().identity);
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header = names;
  header.insert(header.end(), {"lhs", "rhs", "holds"});
  rows.push_back(header);
  for (const auto& r : reports) {
    std::vector<std::string> row;
    for (const auto& name : names) row.push_back(std::to_string(r.params.at(name)));
    row.push_back(to_string(r.lhs));
    row.push_back(to_string(r.rhs));
    row.push_back(r.holds ? "true" : "false");
    rows.push_back(std::move(row));
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c != 0) line += "  ";
      std::string cell = row[c];
      if (c + 1 < row.size()) cell.resize(width[c], ' ');
      line += cell;
    }
    out << line << '\n';
  }
}

int cmd_verify(const VerifyOptions& opts, Format format, std::ostream& out, std::ostream& err, bool to_file,
               const Hooks& hooks) {
  auto id = parse_identity(opts.identity);
  if (!id) throw UsageError("unknown identity: " + opts.identity);
  Grid grid = default_grid(*id);
  auto apply = [&](const char* name, const std::string& text) {
    if (text.empty()) return;
    try {
      set_axis(grid, name, parse_range(text));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  };
  apply("m", opts.m);
  apply("n", opts.n);
  apply("q", opts.q);
  apply("k", opts.k);

  // Preconditions surface before any table is built.
  VerificationRun run;
  std::size_t needed = 0;
  try {
    needed = required_index(grid);
  } catch (const ParameterError& e) {
    throw UsageError(e.what());
  }
  check_ceiling(needed);
  BernoulliTable table = make_table(hooks, needed);
  run = run_grid(grid, table, opts.threads);
  if (run.error) {
    err << "error: " << *run.error << '\n';
    return 2;
  }

  switch (format) {
    case Format::text:
      out << "identity: " << to_string(*id) << '\n';
      out << "reports: " << run.reports.size() << '\n';
      out << "counterexamples: " << run.counterexamples.size() << '\n';
      write_report_rows(run.counterexamples, out);
      break;
    case Format::json:
      out << nlohmann::json(run).dump(2) << '\n';
      break;
    case Format::csv: {
      const auto names = parameter_names(*id);
      out << "identity";
      for (const auto& name : names) out << ',' << name;
      out << ",lhs,rhs,holds,variant\n";
      for (const auto& r : run.reports) {
        out << to_string(r.identity);
        for (const auto& name : names) out << ',' << r.params.at(name);
        out << ',' << quoted(to_string(r.lhs)) << ',' << quoted(to_string(r.rhs)) << ','
            << (r.holds ? "true" : "false") << ',' << quoted(r.variant) << '\n';
      }
      break;
    }
  }
  if (!run.counterexamples.empty()) {
    if (format != Format::text || to_file) {
      err << "counterexamples: " << run.counterexamples.size() << '\n';
      write_report_rows(run.counterexamples, err);
    }
    return 1;
  }
  return 0;
}

// bench -----------------------------------------------------------------------

struct BenchOptions {
  std::string index_text;
  unsigned reps = 3;
};

template <typename F>
double best_time_ms(unsigned reps, F&& body) {
  double best = std::numeric_limits<double>::infinity();
  for (unsigned r = 0; r < reps; ++r) {
    const auto start = std::chrono::steady_clock::now();
    body();
    const auto stop = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(stop - start).count());
  }
  return best;
}

int cmd_bench(const BenchOptions& opts, Format format, std::ostream& out, std::ostream& err, const Hooks& hooks) {
  const std::size_t n = parse_natural(opts.index_text, "N");
  if (n < 1) throw UsageError("N must be >= 1");
  if (opts.reps < 1) throw UsageError("--reps must be >= 1");
  check_ceiling(n);

  std::optional<BernoulliTable> recurrence;
  std::optional<BernoulliTable> series;
  const double recurrence_ms = best_time_ms(opts.reps, [&] { recurrence = bernoulli_by_recurrence(n); });
  const double series_ms = best_time_ms(opts.reps, [&] { series = make_series(hooks, n); });
  const bool agree = same_values(*recurrence, *series);

  switch (format) {
    case Format::text:
      out << "N: " << n << '\n'
          << "reps: " << opts.reps << '\n'
          << std::fixed << std::setprecision(3) << "recurrence_ms: " << recurrence_ms << '\n'
          << "series_ms: " << series_ms << '\n'
          << "agree: " << (agree ? "true" : "false") << '\n';
      break;
    case Format::json:
      out << nlohmann::json{{"N", n},
                            {"reps", opts.reps},
                            {"agree", agree},
                            {"elapsed_ms", {{"recurrence", recurrence_ms}, {"series", series_ms}}}}
                 .dump(2)
          << '\n';
      break;
    case Format::csv:
      out << "algorithm,N,reps,best_ms,agree\n"
          << "recurrence," << n << ',' << opts.reps << ',' << recurrence_ms << ',' << agree << '\n'
          << "series," << n << ',' << opts.reps << ',' << series_ms << ',' << agree << '\n';
      break;
  }
  if (!agree) {
    err << "recurrence and series disagree at N=" << n << '\n';
    return 1;
  }
  return 0;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err, const Hooks& hooks) {
  CLI::App app{"Exact Bernoulli numbers, Bernoulli polynomials and identity verification", "bernoulli"};
  app.require_subcommand(1);

  std::string format_name = "text";
  std::string output_path;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format_name, "text, json or csv");
    sub->add_option("-o,--output", output_path, "write to a file instead of standard output");
  };

  NumOptions num;
  auto* num_cmd = app.add_subcommand("num", "Bernoulli numbers B_0..B_N");
  num_cmd->add_option("N", num.index_text)->required();
  num_cmd->add_flag("--check", num.check, "recompute by series inversion and compare");
  add_common(num_cmd);

  PolyOptions poly;
  auto* poly_cmd = app.add_subcommand("poly", "Bernoulli polynomial B_n(x)");
  poly_cmd->add_option("n", poly.degree_text)->required();
  poly_cmd->add_option("--at", poly.at, "evaluate at a rational p/q");
  add_common(poly_cmd);

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "check an identity over a parameter grid");
  verify_cmd->add_option("identity", verify.identity)->required();
  verify_cmd->add_option("--m", verify.m, "range a..b, value, or comma list");
  verify_cmd->add_option("--n", verify.n);
  verify_cmd->add_option("--q", verify.q);
  verify_cmd->add_option("--k", verify.k);
  verify_cmd->add_option("--threads", verify.threads);
  add_common(verify_cmd);

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "time recurrence against series inversion");
  bench_cmd->add_option("N", bench.index_text)->required();
  bench_cmd->add_option("--reps", bench.reps);
  add_common(bench_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }

  try {
    const Format format = parse_format(format_name);
    std::ofstream file;
    std::ostream* sink = &out;
    if (!output_path.empty()) {
      file.open(output_path);
      if (!file) throw UsageError("cannot open " + output_path);
      sink = &file;
    }
    if (num_cmd->parsed()) return cmd_num(num, format, *sink, err, hooks);
    if (poly_cmd->parsed()) return cmd_poly(poly, format, *sink, err, hooks);
    if (verify_cmd->parsed()) return cmd_verify(verify, format, *sink, err, !output_path.empty(), hooks);
    if (bench_cmd->parsed()) return cmd_bench(bench, format, *sink, err, hooks);
    err << "no subcommand\n";
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace bernoulli::cli
