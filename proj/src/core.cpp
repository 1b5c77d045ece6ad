#include "fitems/core.hpp"

#include <algorithm>
#include <istream>
#include <iterator>
#include <sstream>
#include <unordered_map>

namespace fitems {

Sequence::Sequence(std::vector<Item> items, std::shared_ptr<const Names> names)
    : items_(std::move(items)), names_(std::move(names)) {
  if (items_.empty()) throw InvalidInput("sequence must contain at least one item");
}

Sequence Sequence::from_ids(std::span<const std::uint32_t> ids) {
  std::vector<Item> items;
  items.reserve(ids.size());
  for (auto id : ids) items.push_back(Item{id});
  return Sequence(std::move(items));
}

Sequence Sequence::from_ids(std::initializer_list<std::uint32_t> ids) {
  return from_ids(std::span<const std::uint32_t>(ids.begin(), ids.size()));
}

std::vector<std::uint32_t> Sequence::ids() const {
  std::vector<std::uint32_t> out;
  out.reserve(items_.size());
  for (const auto& item : items_) out.push_back(item.id);
  return out;
}

std::string Sequence::name_of(Item item) const {
  if (names_ && item.id < names_->size()) return (*names_)[item.id];
  return std::to_string(item.id);
}

FrequencyTable::FrequencyTable(std::vector<Entry> entries) : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end());
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].second == 0) throw InvalidInput("frequency table counts must be positive");
    if (i > 0 && entries_[i].first == entries_[i - 1].first)
      throw InvalidInput("frequency table lists an item twice");
    n_ += entries_[i].second;
  }
  if (n_ == 0) throw InvalidInput("frequency table must describe a nonempty multiset");
}

std::uint32_t FrequencyTable::count(Item item) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), item,
                             [](const Entry& e, Item key) { return e.first < key; });
  return (it != entries_.end() && it->first == item) ? it->second : 0;
}

std::uint64_t FrequencyTable::sum_of_squares() const {
  std::uint64_t total = 0;
  for (const auto& [item, c] : entries_) total += static_cast<std::uint64_t>(c) * c;
  return total;
}

std::vector<std::uint32_t> FrequencyTable::shape() const {
  std::vector<std::uint32_t> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.second);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

Profit::Profit(std::uint64_t numerator, std::uint64_t denominator)
    : numerator_(numerator), denominator_(denominator) {
  if (denominator_ == 0) throw InvalidInput("profit denominator must be positive");
}

Rational Profit::value() const {
  return Rational(static_cast<std::int64_t>(numerator_), static_cast<std::int64_t>(denominator_));
}

std::string Profit::str() const {
  return std::to_string(numerator_) + "/" + std::to_string(denominator_);
}

bool operator==(const Profit& a, const Profit& b) {
  return static_cast<unsigned __int128>(a.numerator_) * b.denominator_ ==
         static_cast<unsigned __int128>(b.numerator_) * a.denominator_;
}

std::strong_ordering operator<=>(const Profit& a, const Profit& b) {
  const auto lhs = static_cast<unsigned __int128>(a.numerator_) * b.denominator_;
  const auto rhs = static_cast<unsigned __int128>(b.numerator_) * a.denominator_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

FrequencyTable frequency_table(const Sequence& seq) {
  std::unordered_map<std::uint32_t, std::uint32_t> counts;
  for (const auto& item : seq) ++counts[item.id];
  std::vector<FrequencyTable::Entry> entries;
  entries.reserve(counts.size());
  for (const auto& [id, c] : counts) entries.emplace_back(Item{id}, c);
  return FrequencyTable(std::move(entries));
}

std::vector<std::uint32_t> dense_counts(const Sequence& seq) {
  std::uint32_t max_id = 0;
  for (const auto& item : seq) max_id = std::max(max_id, item.id);
  std::vector<std::uint32_t> counts(static_cast<std::size_t>(max_id) + 1, 0);
  for (const auto& item : seq) ++counts[item.id];
  return counts;
}

void validate_trace(const Sequence& seq, const Trace& trace) {
  if (trace.size() != seq.size()) {
    throw InvalidInput("trace length " + std::to_string(trace.size()) +
                       " does not match sequence length " + std::to_string(seq.size()));
  }
  if (trace[0] != seq[0]) throw InvalidInput("trace must buffer the first item at step 1");
  for (std::size_t t = 1; t < trace.size(); ++t) {
    if (trace[t] != trace[t - 1] && trace[t] != seq[t]) {
      throw InvalidInput("trace step " + std::to_string(t + 1) +
                         " neither keeps the buffer nor takes the arriving item");
    }
  }
}

Profit evaluate_trace(const Sequence& seq, const Trace& trace) {
  validate_trace(seq, trace);
  const auto counts = dense_counts(seq);
  std::uint64_t total = 0;
  // Legal traces only hold items of the sequence, so every id is in range.
  for (const auto& item : trace) total += counts[item.id];
  return Profit(total, seq.size());
}

Sequence canonicalize(const Sequence& seq) {
  std::unordered_map<std::uint32_t, std::uint32_t> relabel;
  std::vector<Item> out;
  out.reserve(seq.size());
  for (const auto& item : seq) {
    auto [it, inserted] = relabel.try_emplace(item.id, static_cast<std::uint32_t>(relabel.size()));
    out.push_back(Item{it->second});
  }
  return Sequence(std::move(out));
}

bool is_canonical(const Sequence& seq) {
  std::uint32_t next = 0;
  for (const auto& item : seq) {
    if (item.id > next) return false;
    if (item.id == next) ++next;
  }
  return true;
}

Sequence rename(const Sequence& seq, std::span<const std::uint32_t> mapping) {
  std::vector<std::uint32_t> targets(mapping.begin(), mapping.end());
  std::sort(targets.begin(), targets.end());
  if (std::adjacent_find(targets.begin(), targets.end()) != targets.end())
    throw InvalidInput("renaming maps two items to the same id");
  std::vector<Item> out;
  out.reserve(seq.size());
  for (const auto& item : seq) {
    if (item.id >= mapping.size()) throw InvalidInput("renaming does not cover every item");
    out.push_back(Item{mapping[item.id]});
  }
  return Sequence(std::move(out));
}

Sequence parse_sequence(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_sequence(in);
}

Sequence read_sequence(std::istream& in) {
  auto names = std::make_shared<Sequence::Names>();
  std::unordered_map<std::string, std::uint32_t> interned;
  std::vector<Item> items;
  std::string token;
  while (in >> token) {
    auto [it, inserted] = interned.try_emplace(token, static_cast<std::uint32_t>(names->size()));
    if (inserted) names->push_back(token);
    items.push_back(Item{it->second});
  }
  if (items.empty()) throw InvalidInput("input contains no items");
  return Sequence(std::move(items), std::move(names));
}

std::string format_sequence(const Sequence& seq) {
  std::string out;
  for (const auto& item : seq) {
    out += seq.name_of(item);
    out += '\n';
  }
  return out;
}

std::string format_ids(const Sequence& seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(seq[i].id);
  }
  return out;
}

}  // namespace fitems
