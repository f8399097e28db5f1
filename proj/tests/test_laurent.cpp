#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>

#include "burau4/laurent.hpp"

using burau4::BigInt;
using burau4::Poly;

TEST_CASE("basic arithmetic") {
  const Poly q = Poly::q();
  const Poly one = Poly::constant(1);
  CHECK((q + q) == Poly::monomial(2, 1));
  CHECK((q - q).is_zero());
  CHECK((q * q) == Poly::q(2));
  CHECK((q + one) * (q - one) == Poly::q(2) - one);
  CHECK((-q) == Poly::monomial(-1, 1));
  CHECK(q.shifted(-3) == Poly::q(-2));
}

TEST_CASE("degree and leading data") {
  Poly p = Poly::monomial(3, 5) - Poly::q(1);
  REQUIRE(p.degree().has_value());
  CHECK(*p.degree() == 5);
  CHECK(*p.low_degree() == 1);
  auto lead = p.leading();
  REQUIRE(lead);
  CHECK(lead->degree == 5);
  CHECK(lead->coefficient == 3);
  CHECK_FALSE(Poly{}.leading().has_value());
  CHECK_FALSE(Poly{}.degree().has_value());
}

TEST_CASE("mod reduction drops zero coefficients") {
  Poly p = Poly::monomial(5, 3) - Poly::constant(3);
  Poly r = p.reduced_mod(5);
  CHECK(r == Poly::constant(2));
  CHECK(p.reduced_mod(3) == Poly::monomial(2, 3));
}

TEST_CASE("canonical text form") {
  CHECK(Poly{}.str() == "0");
  CHECK(Poly::constant(-7).str() == "-7");
  CHECK((Poly::monomial(3, 5) - Poly::q()).str() == "3*q^5 - q");
  CHECK((Poly::q(2) + Poly::constant(1)).str() == "q^2 + 1");
  CHECK(Poly::monomial(-1, -2).str() == "-q^-2");
}

TEST_CASE("rational evaluation") {
  // q^2 - 2 at q = 3/2 is 9/4 - 2 = 1/4
  Poly p = Poly::q(2) - Poly::constant(2);
  CHECK(p.at_rational(3, 2) == burau4::BigRational(1, 4));
  // negative exponents at q = 2: q^-1 -> 1/2
  CHECK(Poly::q(-1).at_rational(2, 1) == burau4::BigRational(1, 2));
  CHECK_THROWS_AS(Poly::q(-1).at_rational(0, 1), std::domain_error);
}

TEST_CASE("random add/mul consistency against map model") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::map<int, long long> ma, mb;
    Poly a, b;
    for (int i = 0; i < 6; ++i) {
      int e = static_cast<int>(rng() % 11) - 5;
      long long c = static_cast<long long>(rng() % 9) - 4;
      ma[e] += c;
      a += Poly::monomial(c, e);
      e = static_cast<int>(rng() % 11) - 5;
      c = static_cast<long long>(rng() % 9) - 4;
      mb[e] += c;
      b += Poly::monomial(c, e);
    }
    std::map<int, long long> prod;
    for (auto& [ea, ca] : ma)
      for (auto& [eb, cb] : mb) prod[ea + eb] += ca * cb;
    Poly expect;
    for (auto& [e, c] : prod) expect += Poly::monomial(c, e);
    CHECK(a * b == expect);
  }
}
