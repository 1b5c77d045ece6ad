#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fitems/algorithms.hpp"
#include "fitems/core.hpp"
#include "fitems/enumeration.hpp"
#include "fitems/generators.hpp"
#include "fitems/rational.hpp"

namespace fitems {

struct SweepOptions {
  std::size_t canonical_limit = kDefaultCanonicalLimit;
  std::uint64_t permutation_limit = kDefaultPermutationLimit;
  std::size_t jobs = 1;
};

// A finite-n point of the competitive function: Opt(I)/A(I).
struct RatioPoint {
  std::size_t n;
  Rational value;
  Sequence witness;
};

// Min and max of A(I) - B(I) over sequences of length n.
struct IntervalPoint {
  std::size_t n;
  Rational min_diff;
  Rational max_diff;
  Sequence min_witness;
  Sequence max_witness;

  Rational normalized_min() const { return min_diff / Rational(static_cast<std::int64_t>(n)); }
  Rational normalized_max() const { return max_diff / Rational(static_cast<std::int64_t>(n)); }
};

// Family-based bounds: max over families is a lower bound on Max_{A,B}(n),
// min over families an upper bound on Min_{A,B}(n).
struct FamilyIntervalPoint {
  IntervalPoint point;
  FamilyId min_family;
  FamilyId max_family;
};

// Sup and inf of A_W(I)/B_W(I) over multisets of size n.
struct WorstOrderPoint {
  std::size_t n;
  Rational sup_ratio;
  Rational inf_ratio;
  FrequencyTable sup_witness;
  FrequencyTable inf_witness;
};

Rational competitive_point(AlgorithmId alg, const Sequence& seq);

RatioPoint competitive_sup(AlgorithmId alg, std::size_t n, const SweepOptions& options = {});
IntervalPoint relative_interval_exact(AlgorithmId a, AlgorithmId b, std::size_t n,
                                      const SweepOptions& options = {});

// One pass over every canonical sequence of length n collecting all four
// algorithms' profits. Extremes keep the smallest rank under ties.
class CanonicalSweep {
 public:
  CanonicalSweep(std::size_t n, const SweepOptions& options = {});

  std::size_t n() const { return n_; }
  RatioPoint competitive(AlgorithmId alg) const;
  IntervalPoint interval(AlgorithmId a, AlgorithmId b) const;

  // Raw extremes, exposed for tests: count-sum profits indexed by AlgorithmId.
  using Sums = std::array<std::uint64_t, 4>;
  struct Extreme {
    Sums sums{};
    std::uint64_t rank = 0;
    bool set = false;
  };

 private:
  std::size_t n_;
  CanonicalSequences sequences_;
  std::array<Extreme, 4> competitive_{};
  std::array<std::array<Extreme, 4>, 4> min_diff_{};
  std::array<std::array<Extreme, 4>, 4> max_diff_{};
};

// Evaluates A - B on every fixed family valid at each n, keeping the family
// extremes.
std::vector<FamilyIntervalPoint> relative_interval_family(AlgorithmId a, AlgorithmId b,
                                                          std::span<const std::size_t> ns);

// Largest Opt/A over the fixed families and, for square n, the adversary
// aimed at A. Lower bound on competitive_sup.
struct FamilyRatioPoint {
  RatioPoint point;
  FamilyId family;
};
FamilyRatioPoint competitive_family(AlgorithmId alg, std::size_t n);

WorstOrderPoint relative_worst_order_exact(AlgorithmId a, AlgorithmId b, std::size_t n,
                                           const SweepOptions& options = {});

enum class Comparison { equal, a_better, b_better, incomparable };
std::string_view to_string(Comparison verdict);

// Multiset witnesses for A_W > B_W and A_W < B_W at length n.
struct ComparisonResult {
  Comparison verdict;
  std::optional<FrequencyTable> a_wins;
  std::optional<FrequencyTable> b_wins;
};
ComparisonResult incomparability_check(AlgorithmId a, AlgorithmId b, std::size_t n,
                                       const SweepOptions& options = {});

// p/q <= sqrt(n) / (2 - 1/sqrt(n)) = n / (2 sqrt(n) - 1), decided exactly by
// squaring: 4 n p^2 <= (n q + p)^2.
bool within_naive_competitive_bound(const Rational& ratio, std::size_t n);

}  // namespace fitems
