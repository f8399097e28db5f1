#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "burau4/garside.hpp"
#include "burau4/sweep.hpp"

using namespace burau4;

TEST_CASE("Delta itself") {
  auto g = garside_normal_form(parse_braid_word("1 2 3 1 2 1"));
  CHECK(g.k == 1);
  CHECK(g.tail.empty());
}

TEST_CASE("already reduced positives") {
  auto g = garside_normal_form(parse_braid_word("1"));
  CHECK(g.k == 0);
  CHECK(g.tail.word() == PositiveWord{1});
  g = garside_normal_form(parse_braid_word("2 1 2"));
  CHECK(g.k == 0);
  CHECK(g.tail.word() == PositiveWord{1, 2, 1});
}

TEST_CASE("single inverse letter") {
  auto g = garside_normal_form(parse_braid_word("-1"));
  CHECK(g.k == -1);
  // tail is the minimal form of Delta s1^{-1}, and is Delta-indivisible
  CHECK(g.tail.length() == 5);
  CHECK(positive_equivalent(g.tail.word(), PositiveWord{1, 2, 3, 1, 2}));
  CHECK_FALSE(delta_divides(g.tail));
}

TEST_CASE("identity and inverse pairs") {
  CHECK(garside_normal_form(parse_braid_word("")).k == 0);
  CHECK(garside_normal_form(parse_braid_word("")).tail.empty());
  auto g = garside_normal_form(parse_braid_word("2 -2 1 -1"));
  CHECK(g.k == 0);
  CHECK(g.tail.empty());
  // a braid-relation commutator is trivial but not freely reduced
  g = garside_normal_form(parse_braid_word("1 2 1 -2 -1 -2"));
  CHECK(g.k == 0);
  CHECK(g.tail.empty());
}

TEST_CASE("delta_divides from the worked examples") {
  CHECK(delta_divides(PositiveBraid::pack(PositiveWord{1, 2, 3, 1, 2, 1, 2})));
  for (int n = 1; n <= 6; ++n)
    CHECK_FALSE(delta_divides(PositiveBraid::pack(PositiveWord(n, uint8_t{1}))));
  CHECK(delta_divides(minimal_form(PositiveWord{1, 1, 2, 1, 3, 2, 1})));
}

TEST_CASE("reassembly is equivalent to the input at small lengths") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 120; ++trial) {
    const int len = static_cast<int>(rng() % 7);
    BraidWord w;
    for (int i = 0; i < len; ++i)
      w.push_back(Generator{static_cast<int>(rng() % 3 + 1), rng() % 2 == 0});
    const auto g = garside_normal_form(w);
    // clear inverses on both the input and the reassembled word, then compare
    auto [k1, p1] = clear_inverses(free_reduce(w));
    auto [k2, p2] = clear_inverses(garside_word(g));
    // pad with Delta^2 powers so both positive parts live at one level
    const int shift = std::max(-k1, -k2);
    PositiveWord lhs, rhs;
    for (int i = 0; i < shift + k1; ++i) {
      lhs.insert(lhs.end(), delta_word().begin(), delta_word().end());
    }
    // delta^k1 p1 == delta^k2 p2 iff delta^(k1-k2) p1 == p2 (k1 >= k2 wlog)
    if (k1 >= k2) {
      PositiveWord padded;
      for (int i = 0; i < k1 - k2; ++i)
        padded.insert(padded.end(), delta_word().begin(), delta_word().end());
      padded.insert(padded.end(), p1.begin(), p1.end());
      CHECK(positive_equivalent(padded, p2));
    } else {
      PositiveWord padded;
      for (int i = 0; i < k2 - k1; ++i)
        padded.insert(padded.end(), delta_word().begin(), delta_word().end());
      padded.insert(padded.end(), p2.begin(), p2.end());
      CHECK(positive_equivalent(padded, p1));
    }
  }
}

TEST_CASE("garside exponent grows with explicit Delta powers") {
  for (int k = 0; k <= 2; ++k) {
    BraidWord w;
    for (int i = 0; i < k; ++i)
      for (uint8_t x : delta_word()) w.push_back(Generator{x, false});
    for (uint8_t x : PositiveWord{1, 2, 2}) w.push_back(Generator{x, false});
    const auto g = garside_normal_form(w);
    CHECK(g.k >= k);
  }
}
