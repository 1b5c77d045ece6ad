#include "fitems/algorithms.hpp"

#include <algorithm>
#include <cctype>

#include "fitems/optimal.hpp"

namespace fitems {

std::string_view to_string(AlgorithmId alg) {
  switch (alg) {
    case AlgorithmId::naive: return "nai";
    case AlgorithmId::eager: return "eag";
    case AlgorithmId::majority: return "maj";
    case AlgorithmId::opt: return "opt";
  }
  return "?";
}

std::optional<AlgorithmId> parse_algorithm(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "nai" || lower == "naive") return AlgorithmId::naive;
  if (lower == "eag" || lower == "eager") return AlgorithmId::eager;
  if (lower == "maj" || lower == "majority") return AlgorithmId::majority;
  if (lower == "opt" || lower == "optimal") return AlgorithmId::opt;
  return std::nullopt;
}

bool is_online(AlgorithmId alg) { return alg != AlgorithmId::opt; }

OnlineState advance(AlgorithmId alg, const OnlineState& state, Item item) {
  if (alg == AlgorithmId::opt) throw InvalidInput("opt is offline and has no online step");
  OnlineState next = state;
  next.t = state.t + 1;
  if (state.t == 0) {
    // The buffer starts empty, so every algorithm takes a_1.
    next.buffered = item;
    next.counter = alg == AlgorithmId::majority ? 1 : 0;
    return next;
  }
  switch (alg) {
    case AlgorithmId::naive:
      next.buffered = item;
      break;
    case AlgorithmId::eager:
      if (!state.locked) {
        // Buffer holds a_t, so equality here means a_t == a_{t+1}.
        if (item == state.buffered) next.locked = true;
        else next.buffered = item;
      }
      break;
    case AlgorithmId::majority:
      if (state.counter == 0) {
        next.buffered = item;
        next.counter = 1;
      } else if (item == state.buffered) {
        ++next.counter;
      } else {
        // The old item stays buffered for this step.
        --next.counter;
      }
      break;
    case AlgorithmId::opt:
      break;
  }
  return next;
}

OnlineStep stepper(AlgorithmId alg) {
  if (!is_online(alg)) throw InvalidInput("opt is offline and has no online step");
  return [alg](const OnlineState& s, Item item) { return advance(alg, s, item); };
}

AlgorithmRun run_online(const OnlineStep& step, const Sequence& seq) {
  Trace trace;
  trace.reserve(seq.size());
  OnlineState state;
  for (const auto& item : seq) {
    state = step(state, item);
    trace.push_back(state.buffered);
  }
  auto profit = evaluate_trace(seq, trace);
  return {std::move(trace), profit};
}

AlgorithmRun run_naive(const Sequence& seq) { return run_online(stepper(AlgorithmId::naive), seq); }
AlgorithmRun run_eager(const Sequence& seq) { return run_online(stepper(AlgorithmId::eager), seq); }
AlgorithmRun run_majority(const Sequence& seq) {
  return run_online(stepper(AlgorithmId::majority), seq);
}

AlgorithmRun run_algorithm(AlgorithmId alg, const Sequence& seq) {
  if (alg == AlgorithmId::opt) {
    auto run = run_opt(seq);
    return {std::move(run.trace), run.profit};
  }
  return run_online(stepper(alg), seq);
}

std::uint64_t profit_sum(AlgorithmId alg, std::span<const Item> items,
                         std::span<const std::uint32_t> counts) {
  std::uint64_t total = 0;
  switch (alg) {
    case AlgorithmId::naive:
      for (const auto& item : items) total += counts[item.id];
      return total;
    case AlgorithmId::eager: {
      std::size_t t = 0;
      for (; t < items.size(); ++t) {
        total += counts[items[t].id];
        if (t + 1 < items.size() && items[t + 1] == items[t]) break;
      }
      if (t < items.size()) total += (items.size() - t - 1) * std::uint64_t{counts[items[t].id]};
      return total;
    }
    case AlgorithmId::majority: {
      Item held = items[0];
      std::uint32_t counter = 0;
      for (const auto& item : items) {
        if (counter == 0) {
          held = item;
          counter = 1;
        } else if (item == held) {
          ++counter;
        } else {
          --counter;
        }
        total += counts[held.id];
      }
      return total;
    }
    case AlgorithmId::opt:
      return opt_profit_sum(items, counts);
  }
  return total;
}

}  // namespace fitems
