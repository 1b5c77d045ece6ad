#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "fitems/core.hpp"

namespace fitems {

struct OptRun {
  Trace trace;
  Profit profit;
  std::vector<std::size_t> switch_points;  // 1-based steps where the buffer changed
};

inline constexpr std::size_t kDefaultExhaustiveLimit = 12;

// Offline optimum under keep-or-replace. Interval DP over the segments a
// buffered item survives; O(n^2). Among optimal traces prefers the fewest
// switches, then the lexicographically earliest switch times.
OptRun run_opt(const Sequence& seq);

// Value-only DP on dense counts, for sweeps.
std::uint64_t opt_profit_sum(std::span<const Item> items, std::span<const std::uint32_t> counts);

// Brute force over all 2^(n-1) keep/replace decision vectors. Independent
// oracle for run_opt; refuses sequences longer than `limit`.
OptRun run_opt_exhaustive(const Sequence& seq, std::size_t limit = kDefaultExhaustiveLimit);

}  // namespace fitems
