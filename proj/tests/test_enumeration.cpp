#include <doctest.h>

#include <set>

#include "fitems/enumeration.hpp"
#include "support.hpp"

using namespace fitems;

TEST_SUITE("enumeration") {
  TEST_CASE("bell numbers") {
    for (int n = 1; n <= 15; ++n) CHECK(bell_number(n) == oracle::bell(n));
    CHECK(bell_number(8) == 4140);
  }

  TEST_CASE("multinomials") {
    std::vector<std::uint32_t> a{2, 1}, b{3, 2, 1}, c{4};
    CHECK(multinomial(a) == 3);
    CHECK(multinomial(b) == 60);
    CHECK(multinomial(c) == 1);
    for (const auto& p : oracle::partitions(9)) {
      std::vector<std::uint32_t> parts(p.begin(), p.end());
      CHECK(multinomial(parts) == oracle::multinomial(p));
    }
  }

  TEST_CASE("small canonical enumerations") {
    CHECK(test::ids(CanonicalSequences(1).at(0)) == oracle::Seq{0});
    CanonicalSequences three(3);
    REQUIRE(three.size() == 5);
    std::vector<std::string> got;
    three.for_each([&](std::span<const Item> s) {
      std::string w;
      for (auto i : s) w += char('0' + i.id);
      got.push_back(w);
    });
    CHECK(got == std::vector<std::string>{"000", "001", "010", "011", "012"});
  }

  TEST_CASE("canonical enumeration matches the filtered word list") {
    for (int n = 1; n <= 7; ++n) {
      const auto expected = oracle::canonical_sequences(n);
      CanonicalSequences seqs(n);
      REQUIRE(seqs.size() == expected.size());
      std::size_t k = 0;
      seqs.for_each([&](std::span<const Item> s) {
        REQUIRE(test::ids(Sequence(std::vector<Item>(s.begin(), s.end()))) == expected[k]);
        REQUIRE(test::ids(seqs.at(k)) == expected[k]);
        ++k;
      });
    }
    CHECK(CanonicalSequences(8).size() == 4140);
  }

  TEST_CASE("ranged traversal covers exactly the requested ranks") {
    CanonicalSequences seqs(6);
    std::vector<Sequence> chunked;
    for (std::uint64_t lo = 0; lo < seqs.size(); lo += 37)
      seqs.for_each(lo, std::min<std::uint64_t>(lo + 37, seqs.size()), [&](std::span<const Item> s) {
        chunked.emplace_back(std::vector<Item>(s.begin(), s.end()));
      });
    REQUIRE(chunked.size() == seqs.size());
    for (std::size_t k = 0; k < chunked.size(); ++k) REQUIRE(chunked[k] == seqs.at(k));
  }

  TEST_CASE("canonical enumeration enforces its limit") {
    CHECK_THROWS_AS(CanonicalSequences(11), LimitExceeded);
    CHECK_THROWS_AS(CanonicalSequences(5, 4), LimitExceeded);
    CHECK_NOTHROW(CanonicalSequences(5, 5));
  }

  TEST_CASE("multiset permutations are distinct and complete") {
    FrequencyTable t({{Item{0}, 3}, {Item{1}, 2}, {Item{2}, 1}});
    MultisetPermutations perms(t);
    REQUIRE(perms.size() == 60);
    std::set<std::vector<std::uint32_t>> seen;
    std::uint64_t k = 0;
    perms.for_each([&](std::span<const Item> s) {
      const Sequence seq(std::vector<Item>(s.begin(), s.end()));
      CHECK(frequency_table(seq) == t);
      CHECK(perms.at(k) == seq);
      seen.insert(seq.ids());
      ++k;
      return true;
    });
    CHECK(seen.size() == 60);
  }

  TEST_CASE("permutation traversal can stop early") {
    FrequencyTable t({{Item{0}, 2}, {Item{1}, 2}});
    int visited = 0;
    MultisetPermutations(t).for_each([&](std::span<const Item>) { return ++visited < 3; });
    CHECK(visited == 3);
  }

  TEST_CASE("permutation limit") {
    FrequencyTable t({{Item{0}, 1}, {Item{1}, 1}, {Item{2}, 1}, {Item{3}, 1}});
    CHECK_THROWS_AS(MultisetPermutations(t, 23), LimitExceeded);
    try {
      MultisetPermutations(t, 23);
    } catch (const LimitExceeded& e) {
      CHECK(e.budget() == Budget::permutations);
      CHECK(e.requested() == 24);
    }
    CHECK(MultisetPermutations(t, 24).size() == 24);
  }

  TEST_CASE("integer partitions and canonical multisets") {
    for (int n = 1; n <= 10; ++n) {
      const auto ours = integer_partitions(n);
      const auto ref = oracle::partitions(n);
      REQUIRE(ours.size() == ref.size());
      for (std::size_t i = 0; i < ref.size(); ++i)
        CHECK(std::vector<int>(ours[i].begin(), ours[i].end()) == ref[i]);
    }
    const auto tables = canonical_multisets(4);
    REQUIRE(tables.size() == 5);
    CHECK(tables.front().shape() == std::vector<std::uint32_t>{4});
    CHECK(tables.back().distinct() == 4);
    for (const auto& t : tables) CHECK(t.count(Item{0}) == t.shape().front());
  }
}
