#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "fitems/algorithms.hpp"
#include "fitems/core.hpp"
#include "fitems/enumeration.hpp"

namespace fitems {

enum class WorstOrderMethod { analytic, brute_force, heuristic };
std::string_view to_string(WorstOrderMethod method);

// Minimum profit over all orderings of a multiset and an ordering attaining it.
struct WorstOrderResult {
  Profit value;
  Sequence witness;
  WorstOrderMethod method;
};

// D(I): items in nondecreasing order of count, ties by ascending id.
Sequence sorted_by_frequency(const FrequencyTable& table);

// Majority's worst-order profit: twice the counts of the floor(n/2) least
// frequent requests of D(I), plus the middle request once when n is odd.
Profit maj_worst_value(const FrequencyTable& table);

// D(I) folded from both ends: a'_1, a'_n, a'_2, a'_{n-1}, ...; the middle
// request goes last for odd n. Majority buffers exactly the low half.
Sequence maj_worst_permutation(const FrequencyTable& table);

// The optimum cannot hold an item before it arrives, so on D(I) it can do
// no better than buffering each arrival.
Sequence opt_worst_permutation(const FrequencyTable& table);

// Exhaustive minimum over distinct permutations. Stops early once a
// permutation reaches the floor profit 1. The witness is the
// lexicographically smallest minimizer.
WorstOrderResult worst_permutation_bruteforce(AlgorithmId alg, const FrequencyTable& table,
                                              std::uint64_t limit = kDefaultPermutationLimit,
                                              std::size_t jobs = 1);

// Best of a few structured candidates for eager's worst order. Upper bound
// on the true minimum only; labelled heuristic.
WorstOrderResult eager_worst_heuristic(const FrequencyTable& table);

// A_W(I) through the cheapest exact route: closed forms for naive, majority
// and opt, brute force for eager.
WorstOrderResult worst_order(AlgorithmId alg, const FrequencyTable& table,
                             std::uint64_t limit = kDefaultPermutationLimit, std::size_t jobs = 1);

}  // namespace fitems
