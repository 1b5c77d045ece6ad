#include "fitems/worst_order.hpp"

#include <algorithm>
#include <optional>

#include "fitems/parallel.hpp"

namespace fitems {

namespace {

std::vector<FrequencyTable::Entry> by_frequency(const FrequencyTable& table) {
  std::vector<FrequencyTable::Entry> entries(table.entries().begin(), table.entries().end());
  std::stable_sort(entries.begin(), entries.end(),
                   [](const auto& a, const auto& b) { return a.second < b.second; });
  return entries;
}

Sequence expand(std::span<const FrequencyTable::Entry> entries) {
  std::vector<Item> items;
  for (const auto& [item, c] : entries) items.insert(items.end(), c, item);
  return Sequence(std::move(items));
}

struct Candidate {
  std::uint64_t sum;
  std::vector<Item> items;
};

}  // namespace

std::string_view to_string(WorstOrderMethod method) {
  switch (method) {
    case WorstOrderMethod::analytic: return "analytic";
    case WorstOrderMethod::brute_force: return "brute_force";
    case WorstOrderMethod::heuristic: return "heuristic";
  }
  return "?";
}

Sequence sorted_by_frequency(const FrequencyTable& table) { return expand(by_frequency(table)); }

Profit maj_worst_value(const FrequencyTable& table) {
  const auto d = sorted_by_frequency(table);
  const std::size_t n = d.size();
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < n / 2; ++i) sum += 2 * std::uint64_t{table.count(d[i])};
  if (n % 2 == 1) sum += table.count(d[n / 2]);
  return Profit(sum, n);
}

Sequence maj_worst_permutation(const FrequencyTable& table) {
  const auto d = sorted_by_frequency(table);
  const std::size_t n = d.size();
  std::vector<Item> items;
  items.reserve(n);
  for (std::size_t i = 0; i < n / 2; ++i) {
    items.push_back(d[i]);
    items.push_back(d[n - 1 - i]);
  }
  if (n % 2 == 1) items.push_back(d[n / 2]);
  return Sequence(std::move(items));
}

Sequence opt_worst_permutation(const FrequencyTable& table) { return sorted_by_frequency(table); }

WorstOrderResult worst_permutation_bruteforce(AlgorithmId alg, const FrequencyTable& table,
                                              std::uint64_t limit, std::size_t jobs) {
  const MultisetPermutations perms(table, limit);
  const std::size_t n = table.n();
  std::vector<std::uint32_t> counts;
  for (const auto& [item, c] : table.entries()) {
    if (counts.size() <= item.id) counts.resize(item.id + 1, 0);
    counts[item.id] = c;
  }
  // Every step contributes at least 1, so n is the floor of the count sum.
  const std::uint64_t floor = n;

  using Partial = std::optional<Candidate>;
  auto chunk = [&](std::uint64_t begin, std::uint64_t end) -> Partial {
    Partial best;
    perms.for_each(begin, end, [&](std::span<const Item> items) {
      const std::uint64_t sum = profit_sum(alg, items, counts);
      if (!best || sum < best->sum) best = Candidate{sum, {items.begin(), items.end()}};
      return best->sum > floor;
    });
    return best;
  };
  auto merge = [](Partial acc, Partial next) -> Partial {
    if (!acc) return next;
    if (next && next->sum < acc->sum) return next;
    return acc;
  };
  auto best = parallel_chunks<Partial>(perms.size(), jobs, chunk, merge, std::nullopt);
  return {Profit(best->sum, n), Sequence(std::move(best->items)), WorstOrderMethod::brute_force};
}

WorstOrderResult eager_worst_heuristic(const FrequencyTable& table) {
  const auto sorted = by_frequency(table);
  std::vector<Sequence> candidates;
  candidates.push_back(expand(sorted));

  // Lock onto a rarely repeated item immediately: a,a then the rest in
  // nondecreasing frequency.
  for (const auto& [item, c] : sorted) {
    if (c < 2) continue;
    std::vector<Item> items{item, item};
    for (const auto& [other, oc] : sorted) {
      const std::uint32_t left = other == item ? oc - 2 : oc;
      items.insert(items.end(), left, other);
    }
    candidates.emplace_back(std::move(items));
  }

  // Singletons first, then each repeated item as one block.
  {
    std::vector<Item> items;
    for (const auto& [item, c] : sorted)
      if (c == 1) items.push_back(item);
    for (const auto& [item, c] : sorted)
      if (c > 1) items.insert(items.end(), c, item);
    candidates.emplace_back(std::move(items));
  }

  std::optional<WorstOrderResult> best;
  for (auto& seq : candidates) {
    const auto p = profit_of(AlgorithmId::eager, seq);
    if (!best || p < best->value) best = WorstOrderResult{p, std::move(seq), WorstOrderMethod::heuristic};
  }
  return *best;
}

WorstOrderResult worst_order(AlgorithmId alg, const FrequencyTable& table, std::uint64_t limit,
                             std::size_t jobs) {
  switch (alg) {
    case AlgorithmId::naive: {
      auto seq = sorted_by_frequency(table);
      return {Profit(table.sum_of_squares(), table.n()), std::move(seq), WorstOrderMethod::analytic};
    }
    case AlgorithmId::majority:
      return {maj_worst_value(table), maj_worst_permutation(table), WorstOrderMethod::analytic};
    case AlgorithmId::opt: {
      auto seq = opt_worst_permutation(table);
      auto value = profit_of(AlgorithmId::opt, seq);
      return {value, std::move(seq), WorstOrderMethod::analytic};
    }
    case AlgorithmId::eager:
      break;
  }
  return worst_permutation_bruteforce(alg, table, limit, jobs);
}

}  // namespace fitems
