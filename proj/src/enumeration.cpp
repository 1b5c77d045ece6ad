#include "fitems/enumeration.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace fitems {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a > kSaturated - b ? kSaturated : a + b;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a > kSaturated / b ? kSaturated : a * b;
}

std::vector<std::vector<std::uint64_t>> completion_table(std::size_t n) {
  // Tails of length r with m labels in use: each position reuses one of the m
  // labels or opens label m.
  std::vector<std::vector<std::uint64_t>> table(n + 1, std::vector<std::uint64_t>(n + 2, 0));
  for (std::size_t m = 0; m <= n + 1; ++m) table[0][m] = 1;
  for (std::size_t r = 1; r <= n; ++r) {
    for (std::size_t m = 0; m + 1 <= n + 1; ++m) {
      table[r][m] = sat_add(sat_mul(m, table[r - 1][m]), table[r - 1][m + 1]);
    }
  }
  return table;
}

}  // namespace

std::uint64_t bell_number(std::size_t n) {
  if (n == 0) return 1;
  return completion_table(n)[n - 1][1];
}

std::uint64_t multinomial(std::span<const std::uint32_t> counts) {
  // Product of binomials C(running_total, c), each built incrementally so
  // every intermediate stays integral.
  std::uint64_t result = 1;
  std::uint64_t total = 0;
  for (auto c : counts) {
    for (std::uint32_t k = 1; k <= c; ++k) {
      ++total;
      const unsigned __int128 wide = static_cast<unsigned __int128>(result) * total;
      if (result == kSaturated || wide / k > kSaturated) {
        result = kSaturated;
      } else {
        result = static_cast<std::uint64_t>(wide / k);
      }
    }
  }
  return result;
}

CanonicalSequences::CanonicalSequences(std::size_t n, std::size_t limit) : n_(n) {
  if (n == 0) throw InvalidInput("canonical enumeration needs n >= 1");
  if (n > limit) {
    throw LimitExceeded("canonical enumeration of length " + std::to_string(n) + " yields Bell(" +
                            std::to_string(n) + ") = " + std::to_string(bell_number(n)) +
                            " sequences; the canonical length limit is " + std::to_string(limit),
                        n, limit);
  }
  completions_ = completion_table(n);
  size_ = completions_[n - 1][1];
}

std::vector<std::uint32_t> CanonicalSequences::unrank(std::uint64_t rank) const {
  std::vector<std::uint32_t> rgs(n_, 0);
  std::uint32_t labels = 1;
  for (std::size_t i = 1; i < n_; ++i) {
    const std::size_t remaining = n_ - i - 1;
    const std::uint64_t block = completions_[remaining][labels];
    if (rank < labels * block) {
      rgs[i] = static_cast<std::uint32_t>(rank / block);
      rank %= block;
    } else {
      rank -= labels * block;
      rgs[i] = labels++;
    }
  }
  return rgs;
}

Sequence CanonicalSequences::at(std::uint64_t rank) const {
  if (rank >= size_) throw InvalidInput("canonical sequence rank out of range");
  return Sequence::from_ids(unrank(rank));
}

void CanonicalSequences::for_each(std::uint64_t begin, std::uint64_t end,
                                  const std::function<void(std::span<const Item>)>& fn) const {
  end = std::min(end, size_);
  if (begin >= end) return;
  const auto rgs = unrank(begin);
  std::vector<Item> items(n_);
  // prefix_max[i] = max(items[0..i]).
  std::vector<std::uint32_t> prefix_max(n_, 0);
  for (std::size_t i = 0; i < n_; ++i) {
    items[i] = Item{rgs[i]};
    prefix_max[i] = i == 0 ? rgs[0] : std::max(prefix_max[i - 1], rgs[i]);
  }
  for (std::uint64_t rank = begin;;) {
    fn(items);
    if (++rank == end) break;
    std::size_t i = n_ - 1;
    while (items[i].id > prefix_max[i - 1]) --i;
    ++items[i].id;
    prefix_max[i] = std::max(prefix_max[i - 1], items[i].id);
    for (std::size_t j = i + 1; j < n_; ++j) {
      items[j].id = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
}

MultisetPermutations::MultisetPermutations(const FrequencyTable& table, std::uint64_t limit)
    : entries_(table.entries().begin(), table.entries().end()) {
  std::vector<std::uint32_t> counts;
  for (const auto& [item, c] : entries_) {
    counts.push_back(c);
    sorted_.insert(sorted_.end(), c, item);
  }
  size_ = multinomial(counts);
  if (size_ > limit) {
    throw LimitExceeded("multiset has " +
                            (size_ == kSaturated ? std::string("more than 2^64")
                                                 : std::to_string(size_)) +
                            " distinct permutations; the permutation limit is " +
                            std::to_string(limit),
                        size_, limit, Budget::permutations);
  }
}

std::vector<Item> MultisetPermutations::unrank(std::uint64_t rank) const {
  std::vector<std::uint32_t> remaining;
  for (const auto& e : entries_) remaining.push_back(e.second);
  std::vector<Item> out;
  out.reserve(sorted_.size());
  for (std::size_t pos = 0; pos < sorted_.size(); ++pos) {
    for (std::size_t k = 0; k < entries_.size(); ++k) {
      if (remaining[k] == 0) continue;
      --remaining[k];
      const std::uint64_t block = multinomial(remaining);
      if (rank < block) {
        out.push_back(entries_[k].first);
        break;
      }
      rank -= block;
      ++remaining[k];
    }
  }
  return out;
}

Sequence MultisetPermutations::at(std::uint64_t rank) const {
  if (rank >= size_) throw InvalidInput("permutation rank out of range");
  return Sequence(unrank(rank));
}

void MultisetPermutations::for_each(std::uint64_t begin, std::uint64_t end,
                                    const std::function<bool(std::span<const Item>)>& fn) const {
  end = std::min(end, size_);
  if (begin >= end) return;
  auto items = unrank(begin);
  for (std::uint64_t rank = begin; rank < end; ++rank) {
    if (!fn(items)) return;
    std::next_permutation(items.begin(), items.end());
  }
}

std::vector<std::vector<std::uint32_t>> integer_partitions(std::size_t n) {
  std::vector<std::vector<std::uint32_t>> out;
  if (n == 0) return out;
  std::vector<std::uint32_t> parts{static_cast<std::uint32_t>(n)};
  while (true) {
    out.push_back(parts);
    // Rightmost part greater than one.
    std::size_t ones = 0;
    while (!parts.empty() && parts.back() == 1) {
      parts.pop_back();
      ++ones;
    }
    if (parts.empty()) break;
    const std::uint32_t k = --parts.back();
    std::uint32_t rest = static_cast<std::uint32_t>(ones) + 1;
    while (rest > k) {
      parts.push_back(k);
      rest -= k;
    }
    if (rest > 0) parts.push_back(rest);
  }
  return out;
}

std::vector<FrequencyTable> canonical_multisets(std::size_t n) {
  std::vector<FrequencyTable> out;
  for (const auto& parts : integer_partitions(n)) {
    std::vector<FrequencyTable::Entry> entries;
    for (std::size_t i = 0; i < parts.size(); ++i)
      entries.emplace_back(Item{static_cast<std::uint32_t>(i)}, parts[i]);
    out.emplace_back(std::move(entries));
  }
  return out;
}

}  // namespace fitems
