#include "fitems/optimal.hpp"

#include <string>

namespace fitems {

namespace {

std::vector<std::size_t> change_points(const Trace& trace) {
  std::vector<std::size_t> out;
  for (std::size_t t = 1; t < trace.size(); ++t)
    if (trace[t] != trace[t - 1]) out.push_back(t + 1);
  return out;
}

}  // namespace

OptRun run_opt(const Sequence& seq) {
  const std::size_t n = seq.size();
  const auto counts = dense_counts(seq);
  // best[t]: max count sum over steps t..n-1 given that a segment starts at t.
  std::vector<std::uint64_t> best(n + 1, 0);
  std::vector<std::size_t> segments(n + 1, 0);
  std::vector<std::size_t> next(n + 1, n);
  for (std::size_t t = n; t-- > 0;) {
    const std::uint64_t c = counts[seq[t].id];
    bool have = false;
    for (std::size_t end = t + 1; end <= n; ++end) {
      const std::uint64_t value = (end - t) * c + best[end];
      const std::size_t segs = 1 + segments[end];
      // Ascending `end` means the first candidate kept under ties is the
      // earliest switch.
      if (!have || value > best[t] || (value == best[t] && segs < segments[t])) {
        best[t] = value;
        segments[t] = segs;
        next[t] = end;
        have = true;
      }
    }
  }
  Trace trace;
  trace.reserve(n);
  for (std::size_t start = 0; start < n; start = next[start]) {
    for (std::size_t t = start; t < next[start]; ++t) trace.push_back(seq[start]);
  }
  auto profit = evaluate_trace(seq, trace);
  auto switches = change_points(trace);
  return {std::move(trace), profit, std::move(switches)};
}

std::uint64_t opt_profit_sum(std::span<const Item> items, std::span<const std::uint32_t> counts) {
  const std::size_t n = items.size();
  std::vector<std::uint64_t> best(n + 1, 0);
  for (std::size_t t = n; t-- > 0;) {
    const std::uint64_t c = counts[items[t].id];
    std::uint64_t top = 0;
    for (std::size_t end = t + 1; end <= n; ++end) {
      const std::uint64_t value = (end - t) * c + best[end];
      if (value > top) top = value;
    }
    best[t] = top;
  }
  return best[0];
}

OptRun run_opt_exhaustive(const Sequence& seq, std::size_t limit) {
  const std::size_t n = seq.size();
  if (n > limit) {
    throw LimitExceeded("exhaustive optimum needs 2^" + std::to_string(n - 1) +
                            " decision vectors; sequence length " + std::to_string(n) +
                            " exceeds the limit " + std::to_string(limit),
                        n, limit, Budget::exhaustive_length);
  }
  const auto counts = dense_counts(seq);
  const std::uint64_t vectors = std::uint64_t{1} << (n - 1);
  std::uint64_t best_sum = 0;
  std::uint64_t best_mask = 0;
  for (std::uint64_t mask = 0; mask < vectors; ++mask) {
    Item held = seq[0];
    std::uint64_t sum = counts[held.id];
    for (std::size_t t = 1; t < n; ++t) {
      if (mask & (std::uint64_t{1} << (t - 1))) held = seq[t];
      sum += counts[held.id];
    }
    if (sum > best_sum) {
      best_sum = sum;
      best_mask = mask;
    }
  }
  Trace trace;
  trace.reserve(n);
  Item held = seq[0];
  trace.push_back(held);
  for (std::size_t t = 1; t < n; ++t) {
    if (best_mask & (std::uint64_t{1} << (t - 1))) held = seq[t];
    trace.push_back(held);
  }
  auto profit = evaluate_trace(seq, trace);
  auto switches = change_points(trace);
  return {std::move(trace), profit, std::move(switches)};
}

}  // namespace fitems
