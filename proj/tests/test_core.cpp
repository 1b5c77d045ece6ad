#include <doctest.h>

#include <sstream>

#include "fitems/algorithms.hpp"
#include "fitems/core.hpp"
#include "fitems/generators.hpp"
#include "support.hpp"

using namespace fitems;
using test::q;

TEST_SUITE("core") {
  TEST_CASE("rational arithmetic stays reduced") {
    CHECK(q(6, 8) == q(3, 4));
    CHECK((q(1, 2) + q(1, 3)).str() == "5/6");
    CHECK((q(1, 2) - q(1, 2)).str() == "0");
    CHECK((q(-3, 6)).str() == "-1/2");
    CHECK(q(3, -6) == q(-1, 2));
    CHECK((q(29, 8) / q(1)).decimal() == "3.625");
    CHECK(q(1, 3) < q(1, 2));
    CHECK(q(-1, 2) < q(0));
    CHECK_THROWS(q(1, 0));
  }

  TEST_CASE("frequency table of E_8 and the worked example") {
    auto e8 = frequency_table(parse_sequence("a a b b b b b b"));
    CHECK(e8.n() == 8);
    CHECK(e8.distinct() == 2);
    CHECK(e8.count(Item{0}) == 2);
    CHECK(e8.count(Item{1}) == 6);
    CHECK(e8.sum_of_squares() == 40);

    auto ex = frequency_table(parse_sequence("a b c a b a"));
    CHECK(ex.shape() == std::vector<std::uint32_t>{3, 2, 1});
    CHECK(ex.count(Item{7}) == 0);

    auto single = frequency_table(parse_sequence("x"));
    CHECK(single.n() == 1);
    CHECK(single.count(Item{0}) == 1);
  }

  TEST_CASE("frequency table rejects bad entries") {
    CHECK_THROWS_AS(FrequencyTable({{Item{0}, 0}}), InvalidInput);
    CHECK_THROWS_AS(FrequencyTable({{Item{0}, 1}, {Item{0}, 2}}), InvalidInput);
  }

  TEST_CASE("empty input is rejected") {
    CHECK_THROWS_AS(parse_sequence("   \n "), InvalidInput);
    CHECK_THROWS_AS(Sequence(std::vector<Item>{}), InvalidInput);
  }

  TEST_CASE("evaluate_trace") {
    auto e8 = gen_E(8);
    CHECK(evaluate_trace(e8, Trace(e8.begin(), e8.end())).str() == "40/8");
    CHECK(evaluate_trace(e8, Trace(e8.begin(), e8.end())).value() == q(5));

    auto xxx = parse_sequence("x x x");
    CHECK(evaluate_trace(xxx, Trace(xxx.begin(), xxx.end())).str() == "9/3");

    auto w8 = gen_W(8);
    CHECK(evaluate_trace(w8, run_majority(w8).trace).str() == "8/8");
  }

  TEST_CASE("illegal traces are rejected") {
    auto s = parse_sequence("a b c");
    CHECK_THROWS_AS(evaluate_trace(s, Trace{Item{0}, Item{2}, Item{2}}), InvalidInput);  // c before it arrives
    CHECK_THROWS_AS(evaluate_trace(s, Trace{Item{1}, Item{1}, Item{2}}), InvalidInput);  // s_1 must be a_1
    CHECK_THROWS_AS(evaluate_trace(s, Trace{Item{0}, Item{1}}), InvalidInput);           // wrong length
    CHECK_NOTHROW(evaluate_trace(s, Trace{Item{0}, Item{0}, Item{0}}));
  }

  TEST_CASE("canonicalize relabels by first appearance") {
    CHECK(format_ids(canonicalize(Sequence::from_ids({7, 3, 7}))) == "0 1 0");
    CHECK(format_ids(canonicalize(parse_sequence("a a b b b b b b"))) == "0 0 1 1 1 1 1 1");
    CHECK(format_ids(canonicalize(Sequence::from_ids({4, 9, 4, 9, 2}))) == "0 1 0 1 2");
    CHECK(is_canonical(Sequence::from_ids({0, 1, 0, 2})));
    CHECK_FALSE(is_canonical(Sequence::from_ids({1, 0})));
  }

  TEST_CASE("rename is a bijection on item ids") {
    auto s = Sequence::from_ids({0, 1, 0, 2});
    std::vector<std::uint32_t> map{5, 9, 2};
    CHECK(format_ids(rename(s, map)) == "5 9 5 2");
    CHECK(canonicalize(rename(s, map)) == s);
    std::vector<std::uint32_t> not_injective{1, 1, 2};
    CHECK_THROWS_AS(rename(s, not_injective), InvalidInput);
  }

  TEST_CASE("sequence text round trip") {
    std::istringstream in("a1\na0\n  a2 a0\n");
    auto s = read_sequence(in);
    CHECK(format_ids(s) == "0 1 2 1");
    CHECK(format_sequence(s) == "a1\na0\na2\na0\n");
    std::istringstream again(format_sequence(s));
    CHECK(read_sequence(again) == s);
  }

  TEST_CASE("profit keeps its denominator") {
    Profit p(32, 8);
    CHECK(p.str() == "32/8");
    CHECK(p.value() == q(4));
    CHECK(Profit(3, 3) == Profit(8, 8));
    CHECK(Profit(20, 8) < Profit(29, 8));
  }
}
