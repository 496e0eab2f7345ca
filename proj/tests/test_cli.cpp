#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "bernoulli/bernoulli.hpp"
#include "cli.hpp"

using namespace bernoulli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args, const cli::Hooks& hooks = {}) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err, hooks);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

cli::Hooks corrupted_table_hooks() {
  cli::Hooks hooks;
  hooks.table_provider = [](std::size_t n) {
    auto good = bernoulli_by_recurrence(n);
    std::vector<Rational> values(good.values().begin(), good.values().end());
    values.at(5) = Rational(1, 5);  // B_5 is really 0
    return BernoulliTable(Algorithm::recurrence, std::move(values));
  };
  return hooks;
}

}  // namespace

TEST_CASE("num") {
  auto r = invoke({"num", "4"});
  CHECK(r.code == 0);
  CHECK(lines(r.out).back() == "4, -1/30");
  CHECK(lines(r.out).size() == 5);

  r = invoke({"num", "0"});
  CHECK(r.out == "0, 1\n");

  r = invoke({"num", "5"});
  CHECK(lines(r.out).back() == "5, 0");

  r = invoke({"num", "12", "--check"});
  CHECK(r.code == 0);
  CHECK(lines(r.out).back() == "agree: true");

  r = invoke({"num", "3", "--format", "json"});
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["values"] == nlohmann::json({"1", "-1/2", "1/6", "0"}));
  CHECK(j["algorithm"] == "recurrence");

  r = invoke({"num", "2", "--format", "csv"});
  CHECK(r.out == "n,value\n0,\"1\"\n1,\"-1/2\"\n2,\"1/6\"\n");
}

TEST_CASE("num usage errors") {
  CHECK(invoke({"num", "abc"}).code == 2);
  CHECK(invoke({"num", "-1"}).code == 2);
  CHECK(invoke({"num"}).code == 2);
  CHECK(invoke({"num", "3", "--format", "xml"}).code == 2);
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("num --check reports disagreement") {
  cli::Hooks hooks;
  hooks.series_algorithm = [](std::size_t n) {
    auto t = bernoulli_by_series(n);
    std::vector<Rational> values(t.values().begin(), t.values().end());
    values.back() += Rational(1);
    return BernoulliTable(Algorithm::series, std::move(values));
  };
  auto r = invoke({"num", "6", "--check"}, hooks);
  CHECK(r.code == 1);
  CHECK(lines(r.out).back() == "agree: false");
}

TEST_CASE("ceiling from BERNOULLI_MAX_N") {
  ::setenv("BERNOULLI_MAX_N", "10", 1);
  CHECK(invoke({"num", "11"}).code == 2);
  CHECK(invoke({"num", "10"}).code == 0);
  CHECK(invoke({"verify", "carlitz", "--m", "1..10", "--n", "1..10"}).code == 2);
  ::setenv("BERNOULLI_MAX_N", "junk", 1);
  CHECK(invoke({"num", "1"}).code == 2);
  ::unsetenv("BERNOULLI_MAX_N");
  CHECK(invoke({"num", "11"}).code == 0);
}

TEST_CASE("poly") {
  CHECK(invoke({"poly", "1"}).out == "x - 1/2\n");
  CHECK(invoke({"poly", "0"}).out == "1\n");
  CHECK(invoke({"poly", "3", "--at", "1/2"}).out == "0\n");
  CHECK(invoke({"poly", "2", "--at", "1"}).out == "1/6\n");
  auto r = invoke({"poly", "2", "--format", "json"});
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["coefficients"] == nlohmann::json({"1/6", "-1", "1"}));
  CHECK(j["text"] == "x^2 - x + 1/6");
  CHECK(invoke({"poly", "x"}).code == 2);
  CHECK(invoke({"poly", "2", "--at", "1/0"}).code == 2);
}

TEST_CASE("verify exit codes") {
  auto r = invoke({"verify", "carlitz", "--m", "1..20", "--n", "1..20"});
  CHECK(r.code == 0);
  CHECK(r.out.find("reports: 400") != std::string::npos);
  CHECK(r.out.find("counterexamples: 0") != std::string::npos);

  r = invoke({"verify", "pearl3", "--q", "2"});
  CHECK(r.code == 2);
  CHECK(r.err.find("q must be odd") != std::string::npos);

  CHECK(invoke({"verify", "nonsense"}).code == 2);
  CHECK(invoke({"verify", "carlitz", "--q", "1"}).code == 2);
  CHECK(invoke({"verify", "carlitz", "--m", "3..1"}).code == 2);
  CHECK(invoke({"verify", "carlitz", "--m", "0..2"}).code == 2);
  CHECK(invoke({"verify", "pearl3", "--n", "1..3", "--q", "1,3,5,7"}).code == 0);
}

TEST_CASE("verify json and csv") {
  auto r = invoke({"verify", "apostol42", "--n", "1..100", "--format", "json"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["reports"].size() == 100);
  CHECK(j["counterexamples"].empty());
  CHECK(j["grid"]["identity"] == "apostol42");
  CHECK(j["elapsed_ms"].contains("apostol42"));
  for (const auto& report : j["reports"]) {
    CHECK(report["identity"].is_string());
    CHECK(report["params"].is_object());
    CHECK(report["lhs"].is_string());
    CHECK(report["rhs"].is_string());
    CHECK(report["holds"].is_boolean());
  }

  r = invoke({"verify", "bencherif_garici", "--m", "0..3", "--n", "0..3", "--q", "0..2", "--format", "csv"});
  CHECK(r.code == 0);
  auto rows = lines(r.out);
  CHECK(rows.front() == "identity,m,n,q,lhs,rhs,holds,variant");
  CHECK(rows.size() == 1 + 4 * 4 * 3);
  CHECK(rows[1] == "bencherif_garici,0,0,0,\"0\",\"0\",true,\"\"");
}

TEST_CASE("verify against a corrupted table") {
  auto r = invoke({"verify", "carlitz", "--m", "1..10", "--n", "1..10"}, corrupted_table_hooks());
  CHECK(r.code == 1);
  CHECK(r.out.find("counterexamples: 0") == std::string::npos);

  r = invoke({"verify", "carlitz", "--m", "1..10", "--n", "1..10", "--format", "json"}, corrupted_table_hooks());
  CHECK(r.code == 1);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE_FALSE(j["counterexamples"].empty());
  CHECK(j["counterexamples"][0]["holds"] == false);
  CHECK(r.err.find("counterexamples:") != std::string::npos);
}

TEST_CASE("rendering is deterministic apart from timing") {
  const std::vector<std::string> args = {"verify", "theorem_KH", "--n", "0..6", "--format", "json"};
  auto a = nlohmann::json::parse(invoke(args).out);
  auto b = nlohmann::json::parse(invoke(args).out);
  a.erase("elapsed_ms");
  b.erase("elapsed_ms");
  CHECK(a.dump() == b.dump());
  CHECK(invoke({"verify", "u_sequence"}).out == invoke({"verify", "u_sequence"}).out);
}

TEST_CASE("output file") {
  const auto path = std::filesystem::temp_directory_path() / "bernoulli_cli_test.txt";
  auto r = invoke({"num", "2", "-o", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream content;
  content << in.rdbuf();
  CHECK(content.str() == "0, 1\n1, -1/2\n2, 1/6\n");
  std::filesystem::remove(path);
  CHECK(invoke({"num", "2", "-o", "/nonexistent/dir/file"}).code == 2);
}

TEST_CASE("bench") {
  auto r = invoke({"bench", "200", "--reps", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("recurrence_ms:") != std::string::npos);
  CHECK(r.out.find("series_ms:") != std::string::npos);
  CHECK(lines(r.out).back() == "agree: true");

  r = invoke({"bench", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("recurrence_ms:") != std::string::npos);
  CHECK(r.out.find("series_ms:") != std::string::npos);

  CHECK(invoke({"bench", "0"}).code == 2);

  cli::Hooks hooks;
  hooks.series_algorithm = [](std::size_t n) {
    std::vector<Rational> values(n + 1, Rational(0));
    return BernoulliTable(Algorithm::series, std::move(values));
  };
  r = invoke({"bench", "10", "--reps", "1"}, hooks);
  CHECK(r.code == 1);
  CHECK(lines(r.out).back() == "agree: false");

  r = invoke({"bench", "20", "--reps", "1", "--format", "json"});
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["agree"] == true);
  CHECK(j["elapsed_ms"].contains("series"));
}
