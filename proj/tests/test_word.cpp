#include <catch2/catch_amalgamated.hpp>

#include "burau4/word.hpp"

using namespace burau4;

TEST_CASE("grammar: plain letters") {
  auto w = parse_braid_word("1 2 1");
  REQUIRE(w.size() == 3);
  CHECK(w[0] == Generator{1, false});
  CHECK(w[1] == Generator{2, false});
  CHECK(w[2] == Generator{1, false});
}

TEST_CASE("grammar: inverses and exponents") {
  auto w = parse_braid_word("1 -2 3^2");
  REQUIRE(w.size() == 4);
  CHECK(w[1] == Generator{2, true});
  CHECK(w[2] == Generator{3, false});
  CHECK(w[3] == Generator{3, false});
  CHECK(parse_braid_word("  -1^3 ").size() == 3);
  CHECK(parse_braid_word("").empty());
}

TEST_CASE("grammar: errors carry byte offsets") {
  CHECK_THROWS_AS(parse_braid_word("4"), ParseError);
  CHECK_THROWS_AS(parse_braid_word("0"), ParseError);
  try {
    parse_braid_word("1 2 x");
    FAIL("expected parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 4);
  }
  try {
    parse_braid_word("1 2^");
    FAIL("expected parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 3);
  }
  CHECK_THROWS_AS(parse_braid_word("2^0"), ParseError);
  CHECK_THROWS_AS(parse_braid_word("1-2"), ParseError);
}

TEST_CASE("free reduction") {
  CHECK(free_reduce(parse_braid_word("1 -1")).empty());
  CHECK(free_reduce(parse_braid_word("1 2 -2 -1")).empty());
  CHECK(free_reduce(parse_braid_word("1 -2 2 3")) == parse_braid_word("1 3"));
  CHECK(exponent_sum(parse_braid_word("1 -2 3")) == 1);
}

TEST_CASE("flip automorphism") {
  CHECK(flipped({1, 2, 3}) == PositiveWord{3, 2, 1});
  CHECK(flipped(delta_word()) == PositiveWord{3, 2, 1, 3, 2, 3});
}
