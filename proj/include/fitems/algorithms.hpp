#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "fitems/core.hpp"

namespace fitems {

enum class AlgorithmId { naive, eager, majority, opt };

std::string_view to_string(AlgorithmId alg);
// Accepts nai/eag/maj/opt and the long names, case-insensitive.
std::optional<AlgorithmId> parse_algorithm(std::string_view text);
bool is_online(AlgorithmId alg);

// Buffer content plus the constant amount of bookkeeping the online
// algorithms carry between arrivals. `t` counts consumed items; the buffer
// is empty while t == 0.
struct OnlineState {
  Item buffered{};
  std::uint32_t counter = 0;  // majority only
  bool locked = false;        // eager only: a repeated item has been seen
  std::size_t t = 0;

  friend bool operator==(const OnlineState&, const OnlineState&) = default;
};

// One irrevocable decision: consumes `item` and returns the successor state,
// whose `buffered` is s_{t+1}. Only naive, eager and majority are online.
OnlineState advance(AlgorithmId alg, const OnlineState& state, Item item);

// Any deterministic one-slot algorithm expressed as a step function.
using OnlineStep = std::function<OnlineState(const OnlineState&, Item)>;
OnlineStep stepper(AlgorithmId alg);

struct AlgorithmRun {
  Trace trace;
  Profit profit;
};

AlgorithmRun run_naive(const Sequence& seq);
AlgorithmRun run_eager(const Sequence& seq);
AlgorithmRun run_majority(const Sequence& seq);
AlgorithmRun run_online(const OnlineStep& step, const Sequence& seq);
// Dispatches to the online runs or to the offline optimum.
AlgorithmRun run_algorithm(AlgorithmId alg, const Sequence& seq);

// Profit numerator sum_t n_I(s_t) without materializing or validating a
// trace. `counts` is indexed by item id (see dense_counts). Sweep fast path.
std::uint64_t profit_sum(AlgorithmId alg, std::span<const Item> items,
                         std::span<const std::uint32_t> counts);

inline Profit profit_of(AlgorithmId alg, const Sequence& seq) {
  return Profit(profit_sum(alg, seq.items(), dense_counts(seq)), seq.size());
}

}  // namespace fitems
