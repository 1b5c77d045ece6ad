#include <doctest.h>

#include <json.hpp>

#include "fitems/verify.hpp"
#include "support.hpp"

using namespace fitems;

namespace {

// Majority without the decrement: a mismatch leaves the counter alone.
Profit majority_without_decrement(AlgorithmId alg, const Sequence& seq) {
  if (alg != AlgorithmId::majority) return run_algorithm(alg, seq).profit;
  OnlineStep broken = [](const OnlineState& s, Item item) {
    OnlineState next = s;
    if (s.t == 0 || s.counter == 0) {
      next.buffered = item;
      next.counter = 1;
    } else if (item == s.buffered) {
      ++next.counter;
    }
    ++next.t;
    return next;
  };
  return run_online(broken, seq).profit;
}

}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("closed forms pass with the real algorithms") {
    auto r = verify::check_closed_forms({});
    CHECK(r.status == verify::Status::pass);
    CHECK(r.failures.empty());
  }

  TEST_CASE("a tampered majority fails the closed-form check") {
    verify::Options options;
    options.profit = majority_without_decrement;
    auto r = verify::check_closed_forms(options);
    CHECK(r.status == verify::Status::fail);
    bool saw_e8 = false;
    for (const auto& f : r.failures)
      if (f.find("maj(E_8)") != std::string::npos && f.find("expected 4") != std::string::npos) saw_e8 = true;
    CHECK(saw_e8);
    // The adversary check runs through the same hook.
    CHECK(verify::check_adversary(options).status != verify::Status::skip);
  }

  TEST_CASE("lowered limits skip rather than fail") {
    verify::Options options;
    options.limits.canonical_limit = 4;
    options.limits.permutation_limit = 4;
    const auto results = verify::run_all(options);
    REQUIRE(results.size() == 10);
    int skipped = 0;
    for (const auto& r : results) {
      CHECK(r.status != verify::Status::fail);
      if (r.status == verify::Status::skip) {
        ++skipped;
        CHECK_FALSE(r.skip_reason.empty());
        CHECK(r.skip_reason.find("--limit-") != std::string::npos);
      }
    }
    CHECK(skipped == 8);
    CHECK(verify::all_passed(results));
    auto j = nlohmann::json::parse(verify::summary_json(results));
    CHECK(j["skipped"] == 8);
    CHECK(j["failed"] == 0);
    CHECK(j["passed"] == 2);
    CHECK(verify::summary_text(results).find("SKIP") != std::string::npos);
  }

  TEST_CASE("summary reports failures with expected and actual values") {
    verify::CheckResult bad{1, "x", "y", verify::Status::fail, {"maj(E_8): expected 4, got 5"}, {}, {}};
    std::vector<verify::CheckResult> results{bad};
    CHECK_FALSE(verify::all_passed(results));
    auto j = nlohmann::json::parse(verify::summary_json(results));
    CHECK(j["failed"] == 1);
    CHECK(j["checks"][0]["failures"][0] == "maj(E_8): expected 4, got 5");
  }
}
