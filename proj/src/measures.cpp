#include "fitems/measures.hpp"

#include "fitems/optimal.hpp"
#include "fitems/parallel.hpp"
#include "fitems/worst_order.hpp"

namespace fitems {

namespace {

constexpr std::array kAll{AlgorithmId::naive, AlgorithmId::eager, AlgorithmId::majority,
                          AlgorithmId::opt};

std::size_t index_of(AlgorithmId alg) { return static_cast<std::size_t>(alg); }

Rational ratio(std::uint64_t num, std::uint64_t den) {
  return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

Rational difference(std::uint64_t a, std::uint64_t b, std::size_t n) {
  return Rational(static_cast<std::int64_t>(a) - static_cast<std::int64_t>(b),
                  static_cast<std::int64_t>(n));
}

// a/b > c/d for positive denominators.
bool ratio_greater(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d) {
  return static_cast<unsigned __int128>(a) * d > static_cast<unsigned __int128>(c) * b;
}

using Extreme = CanonicalSweep::Extreme;

struct SweepState {
  std::array<Extreme, 4> competitive{};
  std::array<std::array<Extreme, 4>, 4> min_diff{};
  std::array<std::array<Extreme, 4>, 4> max_diff{};
};

bool competitive_better(const Extreme& cand, const Extreme& best, std::size_t alg) {
  const std::size_t opt = index_of(AlgorithmId::opt);
  return !best.set || ratio_greater(cand.sums[opt], cand.sums[alg], best.sums[opt], best.sums[alg]);
}

std::int64_t signed_diff(const CanonicalSweep::Sums& sums, std::size_t a, std::size_t b) {
  return static_cast<std::int64_t>(sums[a]) - static_cast<std::int64_t>(sums[b]);
}

void absorb(SweepState& state, const Extreme& cand) {
  for (std::size_t a = 0; a < 4; ++a) {
    if (competitive_better(cand, state.competitive[a], a)) state.competitive[a] = cand;
    for (std::size_t b = 0; b < 4; ++b) {
      const auto d = signed_diff(cand.sums, a, b);
      auto& lo = state.min_diff[a][b];
      if (!lo.set || d < signed_diff(lo.sums, a, b)) lo = cand;
      auto& hi = state.max_diff[a][b];
      if (!hi.set || d > signed_diff(hi.sums, a, b)) hi = cand;
    }
  }
}

void absorb_state(SweepState& acc, const SweepState& next) {
  for (std::size_t a = 0; a < 4; ++a) {
    if (next.competitive[a].set && competitive_better(next.competitive[a], acc.competitive[a], a))
      acc.competitive[a] = next.competitive[a];
    for (std::size_t b = 0; b < 4; ++b) {
      const auto& lo = next.min_diff[a][b];
      if (lo.set && (!acc.min_diff[a][b].set ||
                     signed_diff(lo.sums, a, b) < signed_diff(acc.min_diff[a][b].sums, a, b)))
        acc.min_diff[a][b] = lo;
      const auto& hi = next.max_diff[a][b];
      if (hi.set && (!acc.max_diff[a][b].set ||
                     signed_diff(hi.sums, a, b) > signed_diff(acc.max_diff[a][b].sums, a, b)))
        acc.max_diff[a][b] = hi;
    }
  }
}

}  // namespace

Rational competitive_point(AlgorithmId alg, const Sequence& seq) {
  const auto counts = dense_counts(seq);
  return ratio(profit_sum(AlgorithmId::opt, seq.items(), counts), profit_sum(alg, seq.items(), counts));
}

CanonicalSweep::CanonicalSweep(std::size_t n, const SweepOptions& options)
    : n_(n), sequences_(n, options.canonical_limit) {
  auto chunk = [&](std::uint64_t begin, std::uint64_t end) {
    SweepState state;
    std::vector<std::uint32_t> counts(n_, 0);
    std::uint64_t rank = begin;
    sequences_.for_each(begin, end, [&](std::span<const Item> items) {
      std::fill(counts.begin(), counts.end(), 0);
      for (const auto& item : items) ++counts[item.id];
      Extreme cand;
      for (auto alg : kAll) cand.sums[index_of(alg)] = profit_sum(alg, items, counts);
      cand.rank = rank++;
      cand.set = true;
      absorb(state, cand);
    });
    return state;
  };
  auto merge = [](SweepState acc, SweepState next) {
    absorb_state(acc, next);
    return acc;
  };
  auto state = parallel_chunks<SweepState>(sequences_.size(), options.jobs, chunk, merge, SweepState{});
  competitive_ = state.competitive;
  min_diff_ = state.min_diff;
  max_diff_ = state.max_diff;
}

RatioPoint CanonicalSweep::competitive(AlgorithmId alg) const {
  const auto& e = competitive_[index_of(alg)];
  return {n_, ratio(e.sums[index_of(AlgorithmId::opt)], e.sums[index_of(alg)]),
          sequences_.at(e.rank)};
}

IntervalPoint CanonicalSweep::interval(AlgorithmId a, AlgorithmId b) const {
  const auto ia = index_of(a);
  const auto ib = index_of(b);
  const auto& lo = min_diff_[ia][ib];
  const auto& hi = max_diff_[ia][ib];
  return {n_,
          difference(lo.sums[ia], lo.sums[ib], n_),
          difference(hi.sums[ia], hi.sums[ib], n_),
          sequences_.at(lo.rank),
          sequences_.at(hi.rank)};
}

RatioPoint competitive_sup(AlgorithmId alg, std::size_t n, const SweepOptions& options) {
  return CanonicalSweep(n, options).competitive(alg);
}

IntervalPoint relative_interval_exact(AlgorithmId a, AlgorithmId b, std::size_t n,
                                      const SweepOptions& options) {
  return CanonicalSweep(n, options).interval(a, b);
}

std::vector<FamilyIntervalPoint> relative_interval_family(AlgorithmId a, AlgorithmId b,
                                                          std::span<const std::size_t> ns) {
  std::vector<FamilyIntervalPoint> out;
  for (auto n : ns) {
    std::optional<FamilyIntervalPoint> point;
    for (auto family : fixed_families()) {
      if (!family_valid(family, n)) continue;
      auto seq = generate(family, n);
      const auto counts = dense_counts(seq);
      const auto d = difference(profit_sum(a, seq.items(), counts), profit_sum(b, seq.items(), counts), n);
      if (!point) {
        point = FamilyIntervalPoint{IntervalPoint{n, d, d, seq, seq}, family, family};
        continue;
      }
      if (d < point->point.min_diff) {
        point->point.min_diff = d;
        point->point.min_witness = seq;
        point->min_family = family;
      }
      if (d > point->point.max_diff) {
        point->point.max_diff = d;
        point->point.max_witness = seq;
        point->max_family = family;
      }
    }
    if (!point) throw InvalidInput("no family is defined at n = " + std::to_string(n));
    out.push_back(std::move(*point));
  }
  return out;
}

FamilyRatioPoint competitive_family(AlgorithmId alg, std::size_t n) {
  std::vector<FamilyId> families(fixed_families().begin(), fixed_families().end());
  if (is_online(alg) && family_valid(FamilyId::competitive_adversary, n))
    families.push_back(FamilyId::competitive_adversary);
  std::optional<FamilyRatioPoint> best;
  for (auto family : families) {
    if (!family_valid(family, n)) continue;
    std::optional<AlgorithmId> target;
    if (family == FamilyId::competitive_adversary) target = alg;
    auto seq = generate(family, n, target);
    const auto value = competitive_point(alg, seq);
    if (!best || value > best->point.value) best = FamilyRatioPoint{RatioPoint{n, value, seq}, family};
  }
  if (!best) throw InvalidInput("no family is defined at n = " + std::to_string(n));
  return *best;
}

WorstOrderPoint relative_worst_order_exact(AlgorithmId a, AlgorithmId b, std::size_t n,
                                           const SweepOptions& options) {
  if (n > options.canonical_limit) {
    throw LimitExceeded("worst-order sweep at n = " + std::to_string(n) +
                            " exceeds the canonical length limit " +
                            std::to_string(options.canonical_limit),
                        n, options.canonical_limit);
  }
  std::optional<WorstOrderPoint> point;
  for (const auto& table : canonical_multisets(n)) {
    const auto wa = worst_order(a, table, options.permutation_limit, options.jobs);
    const auto wb = worst_order(b, table, options.permutation_limit, options.jobs);
    const auto r = ratio(wa.value.numerator(), wb.value.numerator());
    if (!point) {
      point = WorstOrderPoint{n, r, r, table, table};
      continue;
    }
    if (r > point->sup_ratio) {
      point->sup_ratio = r;
      point->sup_witness = table;
    }
    if (r < point->inf_ratio) {
      point->inf_ratio = r;
      point->inf_witness = table;
    }
  }
  return std::move(*point);
}

std::string_view to_string(Comparison verdict) {
  switch (verdict) {
    case Comparison::equal: return "equal";
    case Comparison::a_better: return "a_better";
    case Comparison::b_better: return "b_better";
    case Comparison::incomparable: return "incomparable";
  }
  return "?";
}

ComparisonResult incomparability_check(AlgorithmId a, AlgorithmId b, std::size_t n,
                                       const SweepOptions& options) {
  if (n > options.canonical_limit) {
    throw LimitExceeded("comparison at n = " + std::to_string(n) +
                            " exceeds the canonical length limit " +
                            std::to_string(options.canonical_limit),
                        n, options.canonical_limit);
  }
  ComparisonResult result{Comparison::equal, std::nullopt, std::nullopt};
  for (const auto& table : canonical_multisets(n)) {
    const auto wa = worst_order(a, table, options.permutation_limit, options.jobs).value;
    const auto wb = worst_order(b, table, options.permutation_limit, options.jobs).value;
    if (wa > wb && !result.a_wins) result.a_wins = table;
    if (wa < wb && !result.b_wins) result.b_wins = table;
  }
  if (result.a_wins && result.b_wins) result.verdict = Comparison::incomparable;
  else if (result.a_wins) result.verdict = Comparison::a_better;
  else if (result.b_wins) result.verdict = Comparison::b_better;
  return result;
}

bool within_naive_competitive_bound(const Rational& r, std::size_t n) {
  if (r.num() < 0) return true;
  const auto p = static_cast<unsigned __int128>(r.num());
  const auto q = static_cast<unsigned __int128>(r.den());
  const auto nn = static_cast<unsigned __int128>(n);
  const auto rhs = nn * q + p;
  return 4 * nn * p * p <= rhs * rhs;
}

}  // namespace fitems
