#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "fitems/algorithms.hpp"
#include "fitems/measures.hpp"

namespace fitems::verify {

enum class Status { pass, fail, skip };
std::string_view to_string(Status status);

struct CheckResult {
  int id;
  std::string name;
  std::string claim;  // the result being checked, in words
  Status status = Status::pass;
  std::vector<std::string> failures;  // "what: expected X, got Y"
  std::vector<std::string> notes;     // recorded observations, never failures
  std::string skip_reason;
};

using ProfitFn = std::function<Profit(AlgorithmId, const Sequence&)>;

struct Options {
  SweepOptions limits;
  // Evaluates one algorithm on one sequence for the direct profit checks.
  // Replaceable so the harness itself can be fault-tested.
  ProfitFn profit = [](AlgorithmId alg, const Sequence& seq) { return run_algorithm(alg, seq).profit; };
};

CheckResult check_closed_forms(const Options& options);        // 1
CheckResult check_majority_worst_order(const Options& options);  // 2
CheckResult check_opt_worst_order(const Options& options);     // 3
CheckResult check_opt_oracle(const Options& options);          // 4
CheckResult check_naive_competitive(const Options& options);   // 5
CheckResult check_adversary(const Options& options);           // 6
CheckResult check_relative_interval(const Options& options);   // 7
CheckResult check_relative_worst_order(const Options& options);  // 8
CheckResult check_incomparability(const Options& options);     // 9
CheckResult check_properties(const Options& options);          // 10

std::vector<CheckResult> run_all(const Options& options = {});

bool all_passed(const std::vector<CheckResult>& results);
// One line per check: "PASS  1  name".
std::string summary_text(const std::vector<CheckResult>& results);
std::string summary_json(const std::vector<CheckResult>& results);

}  // namespace fitems::verify
