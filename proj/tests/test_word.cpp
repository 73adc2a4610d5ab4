#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "matroid/word.hpp"

using namespace matroid;

TEST_CASE("word construction enforces weak increase and alphabet bounds") {
  CHECK_NOTHROW(Word({1, 1, 3}, 4));
  CHECK_NOTHROW(Word::empty(0));
  CHECK_THROWS_AS(Word({2, 1}, 4), std::invalid_argument);
  CHECK_THROWS_AS(Word({0, 1}, 4), std::invalid_argument);
  CHECK_THROWS_AS(Word({1, 5}, 4), std::invalid_argument);
}

TEST_CASE("subset word construction enforces strict increase") {
  CHECK_NOTHROW(SubsetWord({2, 4, 6, 8}, 8));
  CHECK_THROWS_AS(SubsetWord({2, 2, 4}, 8), std::invalid_argument);
  SubsetWord s({2, 4}, 5);
  CHECK(s.contains(4));
  CHECK_FALSE(s.contains(3));
  CHECK(s.complement().elements() == std::vector<int>{1, 3, 5});
  CHECK(s.complement().complement() == s);
  CHECK(SubsetWord::full(3).elements() == std::vector<int>{1, 2, 3});
  CHECK(SubsetWord::empty(3).size() == 0);
}

TEST_CASE("componentwise order") {
  Word s({1, 3, 5}, 8), t({2, 4, 6}, 8);
  CHECK(componentwise_leq(s, t));
  CHECK_FALSE(componentwise_leq(t, s));
  CHECK(componentwise_leq(t, t));
  CHECK_THROWS_AS(componentwise_leq(Word({1}, 8), t), std::invalid_argument);

  auto pi = matching_witness(s, t);
  REQUIRE(pi.has_value());
  for (std::size_t i = 0; i < pi->size(); ++i) CHECK(s[i] <= t[(*pi)[i]]);
  CHECK_FALSE(matching_witness(t, s).has_value());
}

TEST_CASE("sorted concatenation") {
  Word a({1, 4}, 6), b({2, 4, 5}, 6);
  CHECK(sorted_concat(a, b) == Word({1, 2, 4, 4, 5}, 6));
  CHECK(sorted_concat(a, Word::empty(6)) == a);
  CHECK_THROWS_AS(sorted_concat(a, Word({1}, 7)), std::invalid_argument);
}

TEST_CASE("block decomposition of 2568") {
  BlockDecomposition bd = block_decomposition(SubsetWord({2, 5, 6, 8}, 8));
  REQUIRE(bd.blocks.size() == 3);
  CHECK(bd.blocks[0].elements() == std::vector<int>{2});
  CHECK(bd.blocks[1].elements() == std::vector<int>{5, 6});
  CHECK(bd.blocks[2].elements() == std::vector<int>{8});
  REQUIRE(bd.gaps.size() == 3);
  CHECK(bd.gaps[0].elements() == std::vector<int>{1});
  CHECK(bd.gaps[1].elements() == std::vector<int>{3, 4});
  CHECK(bd.gaps[2].elements() == std::vector<int>{7});
  CHECK(bd.first_run_is_gap);
  CHECK_FALSE(block_decomposition(SubsetWord({1, 2}, 4)).first_run_is_gap);
  CHECK_THROWS_AS(block_decomposition(SubsetWord::empty(4)), DegenerateInputError);
}

TEST_CASE("format and parse round trip") {
  SubsetWord s({2, 4, 6, 8}, 8);
  CHECK(format_subset_word(s) == "2 4 6 8");
  CHECK(parse_subset_word("2 4 6 8", 8) == s);
  CHECK(parse_subset_word("", 8).size() == 0);
  CHECK_THROWS_WITH(parse_subset_word("2 x 6", 8),
                    Catch::Matchers::ContainsSubstring("token 2"));
  CHECK_THROWS_WITH(parse_subset_word("2 4 3", 8),
                    Catch::Matchers::ContainsSubstring("token 3"));
  CHECK_THROWS_WITH(parse_subset_word("2 9", 8),
                    Catch::Matchers::ContainsSubstring("token 2"));
}

TEST_CASE("random subsets: complement and block bookkeeping are consistent") {
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng() % 16);
    std::vector<int> elems;
    for (int e = 1; e <= n; ++e)
      if (rng() % 2) elems.push_back(e);
    SubsetWord s(elems, n);
    CHECK(s.size() + s.complement().size() == static_cast<std::size_t>(n));
    if (s.size() == 0) continue;
    BlockDecomposition bd = block_decomposition(s);
    std::size_t total = 0;
    for (const auto& b : bd.blocks) total += b.size();
    CHECK(total == s.size());
    // blocks and gaps alternate, so their counts differ by at most one
    std::size_t diff = bd.blocks.size() > bd.gaps.size()
                           ? bd.blocks.size() - bd.gaps.size()
                           : bd.gaps.size() - bd.blocks.size();
    CHECK(diff <= 1);
  }
}
