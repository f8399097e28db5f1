#include <catch2/catch_amalgamated.hpp>

#include "burau4/braid.hpp"
#include "burau4/sweep.hpp"

using namespace burau4;

TEST_CASE("syllable packing") {
  auto b = PositiveBraid::pack({1, 2, 1});
  REQUIRE(b.count() == 2);
  CHECK(b.syl(1) == Syllable{1, 0, 1});
  CHECK(b.syl(2) == Syllable{1, 0, 0});
  CHECK(b.length() == 3);
  CHECK(b.word() == PositiveWord{1, 2, 1});

  auto lead2 = PositiveBraid::pack({2, 2, 1});
  CHECK(lead2.syl(1) == Syllable{0, 0, 2});
  CHECK(lead2.syl(2) == Syllable{1, 0, 0});

  CHECK(PositiveBraid::pack({}).empty());
  CHECK_THROWS_AS(PositiveBraid::pack({3, 1}), std::invalid_argument);
}

TEST_CASE("generator positions") {
  auto b = PositiveBraid::pack({1, 1, 3, 2, 2, 1});  // (2,1,2),(1,0,0)
  CHECK(b.a_begin(1) == 1);
  CHECK(b.a_end(1) == 2);
  CHECK(b.b_end(1) == 3);
  CHECK(b.c_begin(1) == 4);
  CHECK(b.c_end(1) == 5);
  CHECK(b.last_sigma2_pos(1) == 5);
  CHECK(b.a_end(2) == 6);
}

TEST_CASE("minimal form from the worked examples") {
  auto b = minimal_form(PositiveWord{2, 1, 2});
  CHECK(b.word() == PositiveWord{1, 2, 1});
  CHECK(minimal_form(PositiveWord{1, 3, 2, 1, 2}).word() == PositiveWord{1, 1, 3, 2, 1});
  CHECK(minimal_form(PositiveWord{}).empty());
}

TEST_CASE("minimal-form constraint checker") {
  CHECK(verify_minimal_constraints(minimal_form(PositiveWord{2, 1, 2})).empty());
  // raw packing of s2 s1 s2: clause (i) at p=2 (a_2=1 and b_2=0)
  {
    PositiveBraid raw({Syllable{0, 0, 1}, Syllable{1, 0, 1}});
    auto v = verify_minimal_constraints(raw);
    REQUIRE_FALSE(v.empty());
    CHECK(v[0].clause == "i");
  }
  // packing of s3 s2 s1 s3: clause (ii) at p=1 (b_1>0 and b_2>0 with c_1=1)
  {
    PositiveBraid raw({Syllable{0, 1, 1}, Syllable{1, 1, 0}});
    auto v = verify_minimal_constraints(raw);
    REQUIRE_FALSE(v.empty());
    CHECK(v[0].clause == "ii");
  }
}

TEST_CASE("constraints hold on every minimal form up to length 8") {
  for (int len = 0; len <= 8; ++len) {
    LengthClasses classes(len);
    classes.for_each_class([&](const PositiveWord& w, bool) {
      auto v = verify_minimal_constraints(PositiveBraid::pack(w));
      if (!v.empty()) {
        CAPTURE(word_str(w), v[0].clause, v[0].p);
        FAIL("constraint violation on a minimal form");
      }
    });
  }
}

TEST_CASE("isolated sigma2 decomposition") {
  // all c_i >= 2: a single non-isolated segment
  auto plain = PositiveBraid::pack({1, 2, 2, 3, 2, 2});
  auto segs = isolated_sigma2_decomposition(plain);
  REQUIRE(segs.size() == 1);
  CHECK(segs[0].type == IsolatedType::NonIsolated);
  CHECK(segs[0].gen_begin == 1);
  CHECK(segs[0].gen_end == 6);

  // s1 s3 s2 s1^2 s2 s3^2 s2^2: c_1 = c_2 = 1 run of type I, then remainder
  auto b = PositiveBraid::pack({1, 3, 2, 1, 1, 2, 3, 3, 2, 2});
  segs = isolated_sigma2_decomposition(b);
  REQUIRE(segs.size() == 2);
  CHECK(segs[0].type == IsolatedType::I);
  CHECK(segs[0].gen_begin == 1);
  CHECK(segs[0].gen_end == 8);
  CHECK(segs[1].type == IsolatedType::NonIsolated);
  CHECK(segs[1].gen_begin == 9);

  // s1 s2 s1 s3 s2 ...: type III (p=1, a_2 > 0)
  auto c = PositiveBraid::pack({1, 2, 1, 3, 2, 2, 2});
  segs = isolated_sigma2_decomposition(c);
  REQUIRE_FALSE(segs.empty());
  CHECK(segs[0].type == IsolatedType::III);

  CHECK(isolated_sigma2_decomposition(PositiveBraid{}).empty());
}

TEST_CASE("s-subproducts") {
  auto b = PositiveBraid::pack({1, 2});
  auto subs = s_subproducts(b);
  REQUIRE(subs.size() == 2);
  CHECK(subs[0].kind == SubproductKind::OneThree);
  CHECK(subs[0].length == 1);
  CHECK(subs[1].kind == SubproductKind::Two);
  CHECK(subs[1].length == 2);

  // one syllable (1,1,2): prefixes s1 s3 and s1 s3 s2^2
  auto c = PositiveBraid::pack({1, 3, 2, 2});
  subs = s_subproducts(c);
  REQUIRE(subs.size() == 2);
  CHECK(subs[0].length == 2);
  CHECK(subs[1].length == 4);

  auto empty = s_subproducts(PositiveBraid{});
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].length == 0);
}

TEST_CASE("prefix extraction") {
  auto b = PositiveBraid::pack({1, 1, 3, 2, 2, 1, 2});
  auto pre = b.prefix(Boundary{1, true});
  CHECK(pre.word() == PositiveWord{1, 1, 3});
  CHECK(b.prefix(Boundary{2, false}).word() == PositiveWord{1, 1, 3, 2, 2});
  CHECK(b.prefix(Boundary{2, true}).word() == PositiveWord{1, 1, 3, 2, 2, 1});
  CHECK(b.prefix(Boundary{1, false}).empty());
}
