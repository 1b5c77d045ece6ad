#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "fitems/report.hpp"
#include "support.hpp"

using namespace fitems;
using A = AlgorithmId;

namespace {
std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}
}  // namespace

TEST_SUITE("report") {
  TEST_CASE("measure and mode names") {
    CHECK(parse_measure("worst-order") == Measure::worst_order);
    CHECK(parse_measure("worst_order") == Measure::worst_order);
    CHECK(parse_measure("interval") == Measure::interval);
    CHECK_FALSE(parse_measure("ratio").has_value());
    CHECK(parse_mode("family") == SweepMode::family);
  }

  TEST_CASE("competitive sweep rows") {
    auto rows = sweep(Measure::competitive, A::naive, std::nullopt, 4, 9, SweepMode::exact);
    REQUIRE(rows.size() == 6);
    for (const auto& r : rows) {
      CHECK(r.measure == "competitive");
      CHECK(r.alg_b == A::opt);
      CHECK(within_naive_competitive_bound(r.value, r.n));
      CHECK(competitive_point(A::naive, parse_sequence(r.witness)) == r.value);
      CHECK(r.provenance == "enumerated");
    }
    const auto csv = lines(to_csv(rows));
    REQUIRE(csv.size() == 7);
    CHECK(csv[0] == kCsvHeader);
    CHECK(csv[6].rfind("competitive,nai,opt,9,9/5,1.8,", 0) == 0);
  }

  TEST_CASE("interval sweep emits min and max per n") {
    auto rows = sweep(Measure::interval, A::naive, A::majority, 4, 8, SweepMode::exact);
    REQUIRE(rows.size() == 10);
    CHECK(rows[0].measure == "interval_min");
    CHECK(rows[1].measure == "interval_max");
    CHECK(rows[9].n == 8);
    CHECK(rows[9].value == test::q(3, 2));
  }

  TEST_CASE("worst-order sweep of opt against naive is flat") {
    auto rows = sweep(Measure::worst_order, A::opt, A::naive, 2, 8, SweepMode::exact);
    REQUIRE(rows.size() == 14);
    for (const auto& r : rows) CHECK(r.value == test::q(1));
  }

  TEST_CASE("family mode reaches past the enumeration limit") {
    auto rows = sweep(Measure::competitive, A::majority, std::nullopt, 20, 20, SweepMode::family);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].provenance.rfind("family:", 0) == 0);
    CHECK(competitive_point(A::majority, parse_sequence(rows[0].witness)) == rows[0].value);
    CHECK_THROWS_AS(sweep(Measure::competitive, A::majority, std::nullopt, 11, 11, SweepMode::exact), LimitExceeded);
  }

  TEST_CASE("bad sweep requests") {
    CHECK_THROWS_AS(sweep(Measure::interval, A::naive, std::nullopt, 2, 4, SweepMode::exact), InvalidInput);
    CHECK_THROWS_AS(sweep(Measure::competitive, A::naive, std::nullopt, 5, 4, SweepMode::exact), InvalidInput);
    CHECK_THROWS_AS(sweep(Measure::competitive, A::opt, std::nullopt, 2, 4, SweepMode::exact), InvalidInput);
  }

  TEST_CASE("json mirrors the csv columns") {
    auto rows = sweep(Measure::interval, A::majority, A::eager, 8, 8, SweepMode::exact);
    auto j = nlohmann::ordered_json::parse(to_json(rows));
    REQUIRE(j.size() == 2);
    std::vector<std::string> keys;
    for (auto it = j[0].begin(); it != j[0].end(); ++it) keys.push_back(it.key());
    std::string header;
    for (const auto& k : keys) header += (header.empty() ? "" : ",") + k;
    CHECK(header == kCsvHeader);
    CHECK(j[1]["value_exact"] == "5/2");
    CHECK(j[1]["measure"] == "interval_max");
  }
}
