#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fitems/rational.hpp"

namespace fitems {

// Rejected input: empty sequences, malformed traces, out-of-range family
// parameters.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Which configured budget an exhaustive computation ran into.
enum class Budget { canonical_length, permutations, exhaustive_length };

// An exhaustive computation would exceed its configured budget.
class LimitExceeded : public std::runtime_error {
 public:
  LimitExceeded(const std::string& what, std::uint64_t requested, std::uint64_t limit,
                Budget budget = Budget::canonical_length)
      : std::runtime_error(what), requested_(requested), limit_(limit), budget_(budget) {}
  std::uint64_t requested() const { return requested_; }
  std::uint64_t limit() const { return limit_; }
  Budget budget() const { return budget_; }

 private:
  std::uint64_t requested_;
  std::uint64_t limit_;
  Budget budget_;
};

// Opaque item token. Only equality is meaningful to the algorithms; the
// ordering exists for deterministic tie-breaking and container keys.
struct Item {
  std::uint32_t id = 0;
  friend auto operator<=>(const Item&, const Item&) = default;
};

// Non-empty ordered stream a_1..a_n. Optionally carries display names indexed
// by item id, used only for text rendering.
class Sequence {
 public:
  using Names = std::vector<std::string>;

  explicit Sequence(std::vector<Item> items, std::shared_ptr<const Names> names = nullptr);
  static Sequence from_ids(std::span<const std::uint32_t> ids);
  static Sequence from_ids(std::initializer_list<std::uint32_t> ids);

  std::size_t size() const { return items_.size(); }
  const Item& operator[](std::size_t i) const { return items_[i]; }
  std::span<const Item> items() const { return items_; }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

  std::vector<std::uint32_t> ids() const;
  const std::shared_ptr<const Names>& names() const { return names_; }
  // Display token for one item: its name when known, else the numeric id.
  std::string name_of(Item item) const;

  friend bool operator==(const Sequence& a, const Sequence& b) { return a.items_ == b.items_; }
  friend auto operator<=>(const Sequence& a, const Sequence& b) { return a.items_ <=> b.items_; }

 private:
  std::vector<Item> items_;
  std::shared_ptr<const Names> names_;
};

// n_I(a) for every item of a sequence, kept sorted by item.
class FrequencyTable {
 public:
  using Entry = std::pair<Item, std::uint32_t>;

  // Counts must be positive; items must be distinct.
  explicit FrequencyTable(std::vector<Entry> entries);

  std::size_t n() const { return n_; }
  std::size_t distinct() const { return entries_.size(); }
  std::span<const Entry> entries() const { return entries_; }
  // Zero for items that do not occur.
  std::uint32_t count(Item item) const;
  // Sum of n_I(a)^2; equals n times the naive algorithm's profit.
  std::uint64_t sum_of_squares() const;
  // Counts sorted in nonincreasing order (the shape of the multiset).
  std::vector<std::uint32_t> shape() const;

  friend bool operator==(const FrequencyTable&, const FrequencyTable&) = default;

 private:
  std::vector<Entry> entries_;
  std::size_t n_ = 0;
};

// Buffered item s_t at every time step of one run.
using Trace = std::vector<Item>;

// Aggregate frequency stored as sum_t n_I(s_t) over the fixed denominator n.
class Profit {
 public:
  Profit(std::uint64_t numerator, std::uint64_t denominator);

  std::uint64_t numerator() const { return numerator_; }
  std::uint64_t denominator() const { return denominator_; }
  Rational value() const;
  // Unreduced "numerator/n".
  std::string str() const;
  std::string decimal() const { return value().decimal(); }

  friend bool operator==(const Profit& a, const Profit& b);
  friend std::strong_ordering operator<=>(const Profit& a, const Profit& b);

 private:
  std::uint64_t numerator_;
  std::uint64_t denominator_;
};

FrequencyTable frequency_table(const Sequence& seq);

// Counts indexed by item id; the dense form every algorithm evaluates against.
std::vector<std::uint32_t> dense_counts(const Sequence& seq);

// Validates the keep-or-replace rule and returns sum_t n_I(s_t) / n.
Profit evaluate_trace(const Sequence& seq, const Trace& trace);
// Throws InvalidInput describing the first violation.
void validate_trace(const Sequence& seq, const Trace& trace);

// Relabels items 0,1,2,... in order of first appearance (restricted growth
// string form).
Sequence canonicalize(const Sequence& seq);
bool is_canonical(const Sequence& seq);

// Applies an item renaming; `mapping` is indexed by item id.
Sequence rename(const Sequence& seq, std::span<const std::uint32_t> mapping);

// Whitespace separated tokens; each distinct token becomes one item, interned
// in order of first appearance.
Sequence parse_sequence(std::string_view text);
Sequence read_sequence(std::istream& in);
// One token per line.
std::string format_sequence(const Sequence& seq);
// Space separated numeric ids.
std::string format_ids(const Sequence& seq);

}  // namespace fitems
