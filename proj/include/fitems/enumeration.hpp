#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "fitems/core.hpp"

namespace fitems {

inline constexpr std::size_t kDefaultCanonicalLimit = 10;
inline constexpr std::uint64_t kDefaultPermutationLimit = 1'000'000;

// Bell(n) via the completion-count table used for unranking. Saturates at
// UINT64_MAX.
std::uint64_t bell_number(std::size_t n);
// n! / prod(c!) for the given counts. Saturates at UINT64_MAX.
std::uint64_t multinomial(std::span<const std::uint32_t> counts);

// All restricted growth strings of length n in lexicographic order, i.e. one
// representative per renaming class of sequences. Value-like: ranges of
// ranks can be enumerated independently and merged in rank order.
class CanonicalSequences {
 public:
  CanonicalSequences(std::size_t n, std::size_t limit = kDefaultCanonicalLimit);

  std::size_t length() const { return n_; }
  std::uint64_t size() const { return size_; }
  Sequence at(std::uint64_t rank) const;

  // Calls fn on every sequence with rank in [begin, end), in rank order.
  // The span is only valid during the call.
  void for_each(std::uint64_t begin, std::uint64_t end,
                const std::function<void(std::span<const Item>)>& fn) const;
  void for_each(const std::function<void(std::span<const Item>)>& fn) const {
    for_each(0, size_, fn);
  }

 private:
  std::vector<std::uint32_t> unrank(std::uint64_t rank) const;

  std::size_t n_;
  std::uint64_t size_;
  // completions_[r][m]: number of tails of length r after a prefix using m labels.
  std::vector<std::vector<std::uint64_t>> completions_;
};

// Distinct permutations of a multiset in lexicographic order of item ids.
class MultisetPermutations {
 public:
  MultisetPermutations(const FrequencyTable& table,
                       std::uint64_t limit = kDefaultPermutationLimit);

  std::uint64_t size() const { return size_; }
  std::size_t length() const { return sorted_.size(); }
  Sequence at(std::uint64_t rank) const;

  // Calls fn on permutations with rank in [begin, end) in order; stops early
  // when fn returns false.
  void for_each(std::uint64_t begin, std::uint64_t end,
                const std::function<bool(std::span<const Item>)>& fn) const;
  void for_each(const std::function<bool(std::span<const Item>)>& fn) const {
    for_each(0, size_, fn);
  }

 private:
  std::vector<Item> unrank(std::uint64_t rank) const;

  std::vector<Item> sorted_;
  std::vector<FrequencyTable::Entry> entries_;
  std::uint64_t size_;
};

// Integer partitions of n, parts nonincreasing, listed from [n] downwards in
// reverse lexicographic order.
std::vector<std::vector<std::uint32_t>> integer_partitions(std::size_t n);

// One multiset per partition of n; item i carries the i-th largest part.
std::vector<FrequencyTable> canonical_multisets(std::size_t n);

}  // namespace fitems
