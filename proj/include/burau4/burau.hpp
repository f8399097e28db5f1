#pragma once

// The Burau representation of B4 as exact 3x3 Laurent-polynomial matrices,
// with mod-t reduction and exact rational specialization.

#include <array>
#include <stdexcept>

#include "burau4/braid.hpp"
#include "burau4/garside.hpp"
#include "burau4/laurent.hpp"
#include "burau4/word.hpp"

namespace burau4 {

template <class Int>
struct Mat3 {
  std::array<Laurent<Int>, 9> e{};

  static Mat3 identity() {
    Mat3 m;
    for (int i = 0; i < 3; ++i) m.at(i + 1, i + 1) = Laurent<Int>::constant(Int(1));
    return m;
  }

  Laurent<Int>& at(int r, int s) { return e[static_cast<size_t>((r - 1) * 3 + (s - 1))]; }
  const Laurent<Int>& at(int r, int s) const {
    return e[static_cast<size_t>((r - 1) * 3 + (s - 1))];
  }

  friend Mat3 operator*(const Mat3& x, const Mat3& y) {
    Mat3 m;
    for (int r = 1; r <= 3; ++r)
      for (int s = 1; s <= 3; ++s) {
        Laurent<Int> acc;
        for (int k = 1; k <= 3; ++k) acc += x.at(r, k) * y.at(k, s);
        m.at(r, s) = std::move(acc);
      }
    return m;
  }

  friend bool operator==(const Mat3&, const Mat3&) = default;
};

using BurauMatrix = Mat3<BigInt>;

template <class Int>
Mat3<Int> burau_generator(int i, bool inverse = false) {
  using L = Laurent<Int>;
  auto c = [](long long v) { return L::constant(Int(v)); };
  auto cq = [](long long v, int e) { return L::monomial(Int(v), e); };
  Mat3<Int> m;
  if (i == 1) {
    if (!inverse) {
      m.at(1, 1) = cq(1, 1);
      m.at(2, 1) = cq(-1, 1);
      m.at(2, 2) = c(1);
      m.at(3, 3) = c(1);
    } else {
      m.at(1, 1) = cq(1, -1);
      m.at(2, 1) = c(1);
      m.at(2, 2) = c(1);
      m.at(3, 3) = c(1);
    }
  } else if (i == 2) {
    if (!inverse) {
      m.at(1, 1) = c(1);
      m.at(1, 2) = c(1);
      m.at(2, 2) = cq(1, 1);
      m.at(3, 2) = cq(-1, 1);
      m.at(3, 3) = c(1);
    } else {
      m.at(1, 1) = c(1);
      m.at(1, 2) = cq(-1, -1);
      m.at(2, 2) = cq(1, -1);
      m.at(3, 2) = c(1);
      m.at(3, 3) = c(1);
    }
  } else if (i == 3) {
    if (!inverse) {
      m.at(1, 1) = c(1);
      m.at(2, 2) = c(1);
      m.at(2, 3) = c(1);
      m.at(3, 3) = cq(1, 1);
    } else {
      m.at(1, 1) = c(1);
      m.at(2, 2) = c(1);
      m.at(2, 3) = cq(-1, -1);
      m.at(3, 3) = cq(1, -1);
    }
  } else {
    throw std::invalid_argument("generator index out of range");
  }
  return m;
}

template <class Int>
Mat3<Int> burau_of_word(const BraidWord& w) {
  Mat3<Int> m = Mat3<Int>::identity();
  for (const auto& g : w) m = m * burau_generator<Int>(g.index, g.inverse);
  return m;
}

template <class Int>
Mat3<Int> burau_of_word(const PositiveWord& w) {
  Mat3<Int> m = Mat3<Int>::identity();
  for (uint8_t x : w) m = m * burau_generator<Int>(x, false);
  return m;
}

template <class Int>
Mat3<Int> burau_of_braid(const PositiveBraid& braid) {
  return burau_of_word<Int>(braid.word());
}

// Closed form for the Burau matrix of Delta^k.  The direct product of the
// generator matrices places the odd-k entries at (1,3), (2,2), (3,1).
template <class Int>
Mat3<Int> burau_delta_power(int k) {
  using L = Laurent<Int>;
  Mat3<Int> m;
  if (k % 2 == 0) {
    for (int i = 1; i <= 3; ++i) m.at(i, i) = L::monomial(Int(1), 2 * k);
  } else {
    m.at(1, 3) = L::monomial(Int(1), 2 * k - 1);
    m.at(2, 2) = L::monomial(Int(-1), 2 * k);
    m.at(3, 1) = L::monomial(Int(1), 2 * k + 1);
  }
  return m;
}

inline bool is_prime(long long t) {
  if (t < 2) return false;
  for (long long d = 2; d * d <= t; ++d)
    if (t % d == 0) return false;
  return true;
}

template <class Int>
Mat3<Int> reduce_mod(const Mat3<Int>& m, long long t) {
  if (!is_prime(t)) throw std::invalid_argument("modulus must be prime");
  Mat3<Int> r;
  for (int i = 0; i < 9; ++i) r.e[static_cast<size_t>(i)] = m.e[static_cast<size_t>(i)].reduced_mod(t);
  return r;
}

// exact rational specialization at q = a/b (gcd(a,b) = 1, b != 0)
template <class Int>
std::array<BigRational, 9> specialize_rational(const Mat3<Int>& m, const BigInt& a,
                                               const BigInt& b) {
  if (b == 0) throw std::invalid_argument("zero denominator");
  if (boost::multiprecision::gcd(a, b) != 1 && !(a == 0 && (b == 1 || b == -1)))
    throw std::invalid_argument("a/b not in lowest terms");
  std::array<BigRational, 9> out;
  for (int i = 0; i < 9; ++i) {
    Poly p;
    for (const auto& t : m.e[static_cast<size_t>(i)].terms())
      p += Poly::monomial(BigInt(t.second), t.first);
    out[static_cast<size_t>(i)] = p.at_rational(a, b);
  }
  return out;
}

// >= 2 entries in row r are nonzero with leading coefficient nonzero mod t
template <class Int>
bool row_multiple_leading_nonzero(const Mat3<Int>& m, int r, long long t) {
  if (!is_prime(t)) throw std::invalid_argument("modulus must be prime");
  int good = 0;
  for (int s = 1; s <= 3; ++s) {
    auto lead = m.at(r, s).leading();
    if (lead && lead->coefficient % t != 0) ++good;
  }
  return good >= 2;
}

}  // namespace burau4
