#include <doctest.h>

#include "fitems/algorithms.hpp"
#include "fitems/enumeration.hpp"
#include "fitems/generators.hpp"
#include "fitems/worst_order.hpp"
#include "support.hpp"

using namespace fitems;
using test::q;

namespace {
FrequencyTable abc() { return FrequencyTable({{Item{0}, 3}, {Item{1}, 2}, {Item{2}, 1}}); }
}  // namespace

TEST_SUITE("worst_order") {
  TEST_CASE("folding order D(I)") {
    CHECK(test::ids(sorted_by_frequency(abc())) == oracle::Seq{2, 1, 1, 0, 0, 0});
    CHECK(test::ids(sorted_by_frequency(FrequencyTable({{Item{0}, 1}}))) == oracle::Seq{0});
    auto tie = sorted_by_frequency(FrequencyTable({{Item{0}, 2}, {Item{1}, 2}}));
    CHECK(format_ids(canonicalize(tie)) == "0 0 1 1");
  }

  TEST_CASE("majority worst value") {
    CHECK(maj_worst_value(abc()).value() == q(5, 3));
    CHECK(maj_worst_value(frequency_table(gen_W(8))).value() == q(1));
    CHECK(maj_worst_value(FrequencyTable({{Item{0}, 4}})).value() == q(4));
  }

  TEST_CASE("majority worst permutation") {
    CHECK(test::ids(maj_worst_permutation(abc())) == oracle::Seq{2, 0, 1, 0, 1, 0});
    const auto w8_table = frequency_table(gen_W(8));
    const Item a0 = gen_W(8)[1];
    REQUIRE(w8_table.count(a0) == 4);
    auto w8 = maj_worst_permutation(w8_table);
    for (std::size_t t = 1; t < 8; t += 2) CHECK(w8[t] == a0);
    for (std::size_t t = 0; t < 8; t += 2) CHECK(w8[t] != a0);
    auto two = maj_worst_permutation(FrequencyTable({{Item{0}, 1}, {Item{1}, 1}}));
    CHECK(run_majority(two).profit.value() == q(1));
  }

  TEST_CASE("opt worst permutation is D(I) and opt equals naive there") {
    auto d = opt_worst_permutation(abc());
    CHECK(test::ids(d) == oracle::Seq{2, 1, 1, 0, 0, 0});
    CHECK(run_algorithm(AlgorithmId::opt, d).profit.value() == q(7, 3));
    CHECK(run_algorithm(AlgorithmId::opt, opt_worst_permutation(FrequencyTable({{Item{0}, 5}}))).profit.value() == q(5));
    auto e = opt_worst_permutation(frequency_table(gen_E(8)));
    CHECK(run_algorithm(AlgorithmId::opt, e).profit.value() == q(5));
  }

  TEST_CASE("brute force matches next_permutation oracle") {
    for (int n = 1; n <= 7; ++n) {
      for (const auto& shape : oracle::partitions(n)) {
        const auto o = oracle::multiset(shape);
        const auto table = frequency_table(test::seq(o));
        const auto nn = static_cast<std::size_t>(n);
        CHECK(worst_permutation_bruteforce(AlgorithmId::majority, table).value.numerator() ==
              oracle::worst(o, oracle::majority));
        CHECK(worst_permutation_bruteforce(AlgorithmId::eager, table).value.numerator() ==
              oracle::worst(o, oracle::eager));
        CHECK(worst_permutation_bruteforce(AlgorithmId::opt, table).value.numerator() ==
              oracle::worst(o, oracle::opt));
        CHECK(maj_worst_value(table).numerator() == oracle::worst(o, oracle::majority));
        CHECK(maj_worst_value(table).denominator() == nn);
      }
    }
  }

  TEST_CASE("brute-force witnesses reproduce their value") {
    for (auto alg : {AlgorithmId::naive, AlgorithmId::eager, AlgorithmId::majority, AlgorithmId::opt}) {
      auto r = worst_permutation_bruteforce(alg, abc());
      CHECK(frequency_table(r.witness) == abc());
      CHECK(run_algorithm(alg, r.witness).profit == r.value);
      CHECK(r.method == WorstOrderMethod::brute_force);
    }
  }

  TEST_CASE("parallel brute force is deterministic") {
    auto t = frequency_table(parse_sequence("a a a b b c d e"));
    for (auto alg : {AlgorithmId::eager, AlgorithmId::majority}) {
      auto one = worst_permutation_bruteforce(alg, t, kDefaultPermutationLimit, 1);
      auto four = worst_permutation_bruteforce(alg, t, kDefaultPermutationLimit, 4);
      CHECK(one.value == four.value);
      CHECK(one.witness == four.witness);
    }
  }

  TEST_CASE("eager worst orders") {
    auto e = worst_order(AlgorithmId::eager, frequency_table(gen_E(8)));
    CHECK(e.value.value() == q(2));
    CHECK(run_eager(e.witness).profit == e.value);
    auto w = worst_order(AlgorithmId::eager, frequency_table(gen_W(8)));
    CHECK(w.value.value() == q(5, 2));
    CHECK(run_eager(gen_W_prime(8)).profit.value() == q(5, 2));
  }

  TEST_CASE("eager heuristic is an upper bound that is tight on the named families") {
    CHECK(eager_worst_heuristic(frequency_table(gen_E(8))).value.value() == q(2));
    CHECK(eager_worst_heuristic(frequency_table(gen_W(8))).value.value() == q(5, 2));
    auto singles = eager_worst_heuristic(frequency_table(parse_sequence("a b c d")));
    CHECK(singles.value.value() == q(1));
    for (std::size_t n = 1; n <= 7; ++n)
      for (const auto& t : canonical_multisets(n)) {
        auto h = eager_worst_heuristic(t);
        CHECK(h.method == WorstOrderMethod::heuristic);
        CHECK(run_eager(h.witness).profit == h.value);
        CHECK(h.value >= worst_permutation_bruteforce(AlgorithmId::eager, t).value);
      }
  }

  TEST_CASE("analytic dispatch") {
    auto t = abc();
    CHECK(worst_order(AlgorithmId::majority, t).method == WorstOrderMethod::analytic);
    CHECK(worst_order(AlgorithmId::opt, t).value.value() == q(7, 3));
    CHECK(worst_order(AlgorithmId::naive, t).value.value() == q(7, 3));
  }
}
