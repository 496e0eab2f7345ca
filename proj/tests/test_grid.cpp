#include <doctest.h>

#include "bernoulli/bernoulli.hpp"
#include "bernoulli/grid.hpp"
#include "bernoulli/json_io.hpp"

using namespace bernoulli;

namespace {

Grid grid_of(IdentityId id, std::vector<GridAxis> axes) { return Grid{id, std::move(axes)}; }

BernoulliTable corrupted(std::size_t size, std::size_t index) {
  auto t = bernoulli_by_recurrence(size);
  std::vector<Rational> values(t.values().begin(), t.values().end());
  values[index] += Rational(1, 7);
  return BernoulliTable(Algorithm::recurrence, std::move(values));
}

}  // namespace

TEST_CASE("parse_range") {
  CHECK(parse_range("1..4") == std::vector<std::int64_t>{1, 2, 3, 4});
  CHECK(parse_range("7") == std::vector<std::int64_t>{7});
  CHECK(parse_range("1,3..5,9") == std::vector<std::int64_t>{1, 3, 4, 5, 9});
  CHECK(parse_range("-2..0") == std::vector<std::int64_t>{-2, -1, 0});
  CHECK_THROWS_AS(parse_range("5..1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_range(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_range("1..x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_range("1,,2"), std::invalid_argument);
}

TEST_CASE("enumeration is row-major") {
  const auto points = enumerate(grid_of(IdentityId::carlitz, {{"m", {1, 2}}, {"n", {5, 6, 7}}}));
  REQUIRE(points.size() == 6);
  CHECK(points[0] == Params{{"m", 1}, {"n", 5}});
  CHECK(points[1] == Params{{"m", 1}, {"n", 6}});
  CHECK(points[3] == Params{{"m", 2}, {"n", 5}});
  const auto split = enumerate(grid_of(IdentityId::binomial_split, {{"n", {0, 1, 2}}, {"k", {0, 1, 2}}}));
  CHECK(split.size() == 6);
}

TEST_CASE("set_axis") {
  Grid g = default_grid(IdentityId::carlitz);
  set_axis(g, "n", {3});
  CHECK(enumerate(g).size() == 10);
  CHECK_THROWS_AS(set_axis(g, "q", {1}), ParameterError);
  Grid h{IdentityId::bencherif_garici, {}};
  set_axis(h, "q", {0});
  set_axis(h, "m", {1});
  set_axis(h, "n", {2});
  CHECK(h.axes[0].name == "m");
  CHECK(h.axes[2].name == "q");
}

TEST_CASE("run_grid sweeps") {
  const auto table = bernoulli_by_recurrence(120);
  auto run = run_grid(grid_of(IdentityId::carlitz, {{"m", parse_range("1..10")}, {"n", parse_range("1..10")}}), table);
  CHECK_FALSE(run.error);
  CHECK(run.reports.size() == 100);
  CHECK(run.counterexamples.empty());
  CHECK(run.elapsed_ms.count("carlitz") == 1);

  run = run_grid(grid_of(IdentityId::apostol42, {{"n", parse_range("1..50")}}), table);
  CHECK(run.reports.size() == 50);
  CHECK(run.counterexamples.empty());

  run = run_grid(grid_of(IdentityId::pearl3, {{"n", {1}}, {"q", {2}}}), table);
  REQUIRE(run.error);
  CHECK(*run.error == "q must be odd");
  CHECK(run.reports.empty());

  run = run_grid(grid_of(IdentityId::carlitz, {{"m", {1}}}), table);
  CHECK(run.error);
}

TEST_CASE("run_grid fails fast on a short table") {
  const auto table = bernoulli_by_recurrence(5);
  const Grid g = grid_of(IdentityId::carlitz, {{"m", {3}}, {"n", {3}}});
  CHECK(required_index(g) == 6);
  CHECK_THROWS_AS(run_grid(g, table), TableTooShort);
}

TEST_CASE("every default grid holds, except the findings-only lemma") {
  for (auto id : all_identities()) {
    const Grid g = default_grid(id);
    const auto table = bernoulli_by_recurrence(required_index(g));
    const auto run = run_grid(g, table);
    CAPTURE(to_string(id));
    CHECK_FALSE(run.error);
    CHECK_FALSE(run.reports.empty());
    if (id != IdentityId::coefficient_H) CHECK(run.counterexamples.empty());
  }
}

TEST_CASE("parallel run matches sequential order") {
  const auto table = bernoulli_by_recurrence(80);
  const Grid g = grid_of(IdentityId::theorem_KH, {{"n", parse_range("0..25")}});
  const auto seq = run_grid(g, table, 1);
  const auto par = run_grid(g, table, 4);
  CHECK(seq.reports == par.reports);
}

TEST_CASE("counterexamples are exactly the failing reports") {
  const auto bad = corrupted(40, 7);
  const auto run = run_grid(grid_of(IdentityId::carlitz, {{"m", parse_range("1..6")}, {"n", parse_range("1..6")}}), bad);
  REQUIRE_FALSE(run.counterexamples.empty());
  std::size_t failing = 0;
  for (const auto& r : run.reports) failing += r.holds ? 0 : 1;
  CHECK(failing == run.counterexamples.size());
  for (const auto& c : run.counterexamples) CHECK_FALSE(c.holds);
}

TEST_CASE("json forms") {
  nlohmann::json p = Polynomial{Rational(-1, 2), 1};
  CHECK(p.dump() == R"(["-1/2","1"])");
  CHECK(p.get<Polynomial>() == Polynomial{Rational(-1, 2), 1});

  const auto table = bernoulli_by_recurrence(10);
  nlohmann::json r = check_carlitz(1, 2, table);
  CHECK(r.dump() == R"({"holds":true,"identity":"carlitz","lhs":"-1/6","params":{"m":1,"n":2},"rhs":"-1/6"})");
  CHECK(r.get<IdentityReport>() == check_carlitz(1, 2, table));
}

TEST_CASE("verification runs round trip through json") {
  const auto bad = corrupted(60, 9);
  for (auto id : {IdentityId::carlitz, IdentityId::theorem_KH, IdentityId::expansion_Pq, IdentityId::pearl3}) {
    const Grid g = default_grid(id);
    auto table = bad;
    table.extend_to(required_index(g));
    const auto run = run_grid(g, table);
    const nlohmann::json j = run;
    const auto back = j.get<VerificationRun>();
    CHECK(back.grid == run.grid);
    CHECK(back.reports == run.reports);
    CHECK(back.counterexamples == run.counterexamples);
    CHECK(nlohmann::json(back).dump() == j.dump());
    for (const auto& c : back.counterexamples) {
      CHECK(check(c.identity, c.params, table) == c);
    }
  }
}
