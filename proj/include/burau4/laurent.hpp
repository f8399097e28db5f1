#pragma once

// Exact Laurent polynomials in q with integer coefficients, stored as a
// sorted term list (ascending exponent, no zero coefficients).

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace burau4 {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

template <class Int>
struct LeadingTerm {
  int degree = 0;
  Int coefficient{};
};

template <class Int>
class Laurent {
 public:
  using Term = std::pair<int, Int>;

  Laurent() = default;

  static Laurent zero() { return Laurent{}; }

  static Laurent constant(Int c) { return monomial(std::move(c), 0); }

  static Laurent monomial(Int c, int e) {
    Laurent p;
    if (c != 0) p.terms_.emplace_back(e, std::move(c));
    return p;
  }

  static Laurent q(int e = 1) { return monomial(Int(1), e); }

  bool is_zero() const { return terms_.empty(); }

  const std::vector<Term>& terms() const { return terms_; }

  std::optional<int> degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.back().first;
  }

  std::optional<int> low_degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.front().first;
  }

  std::optional<LeadingTerm<Int>> leading() const {
    if (terms_.empty()) return std::nullopt;
    return LeadingTerm<Int>{terms_.back().first, terms_.back().second};
  }

  Int coeff(int e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, int x) { return t.first < x; });
    if (it != terms_.end() && it->first == e) return it->second;
    return Int(0);
  }

  Laurent& operator+=(const Laurent& o) {
    *this = *this + o;
    return *this;
  }

  Laurent& operator-=(const Laurent& o) {
    *this = *this - o;
    return *this;
  }

  friend Laurent operator+(const Laurent& x, const Laurent& y) { return merge(x, y, false); }
  friend Laurent operator-(const Laurent& x, const Laurent& y) { return merge(x, y, true); }

  Laurent operator-() const {
    Laurent r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  friend Laurent operator*(const Laurent& x, const Laurent& y) {
    if (x.is_zero() || y.is_zero()) return Laurent{};
    // accumulate into a dense window [lo, hi]
    const int lo = x.terms_.front().first + y.terms_.front().first;
    const int hi = x.terms_.back().first + y.terms_.back().first;
    std::vector<Int> acc(static_cast<size_t>(hi - lo + 1), Int(0));
    for (const auto& a : x.terms_)
      for (const auto& b : y.terms_) acc[static_cast<size_t>(a.first + b.first - lo)] += a.second * b.second;
    Laurent r;
    for (size_t i = 0; i < acc.size(); ++i)
      if (acc[i] != 0) r.terms_.emplace_back(lo + static_cast<int>(i), std::move(acc[i]));
    return r;
  }

  Laurent& operator*=(const Laurent& o) {
    *this = *this * o;
    return *this;
  }

  Laurent times(const Int& c) const {
    if (c == 0) return Laurent{};
    Laurent r = *this;
    for (auto& t : r.terms_) t.second *= c;
    return r;
  }

  // multiply by q^k
  Laurent shifted(int k) const {
    Laurent r = *this;
    for (auto& t : r.terms_) t.first += k;
    return r;
  }

  friend bool operator==(const Laurent& x, const Laurent& y) { return x.terms_ == y.terms_; }
  friend bool operator!=(const Laurent& x, const Laurent& y) { return !(x == y); }

  // coefficients normalized into [0, t)
  Laurent reduced_mod(long long t) const {
    Laurent r;
    for (const auto& term : terms_) {
      Int c = term.second % t;
      if (c < 0) c += t;
      if (c != 0) r.terms_.emplace_back(term.first, std::move(c));
    }
    return r;
  }

  // canonical text form, descending exponents
  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      Int c = it->second;
      const int e = it->first;
      if (it == terms_.rbegin()) {
        if (c < 0) {
          os << "-";
          c = -c;
        }
      } else {
        if (c < 0) {
          os << " - ";
          c = -c;
        } else {
          os << " + ";
        }
      }
      if (e == 0) {
        os << c;
      } else {
        if (c != 1) os << c << "*";
        os << "q";
        if (e != 1) os << "^" << e;
      }
    }
    return os.str();
  }

  // exact evaluation at q = a/b (lowest terms); negative exponents need a != 0
  BigRational at_rational(const BigInt& a, const BigInt& b) const {
    if (b == 0) throw std::invalid_argument("at_rational: zero denominator");
    BigRational sum(0);
    for (const auto& t : terms_) {
      BigRational qe;
      if (t.first >= 0) {
        qe = BigRational(boost::multiprecision::pow(a, static_cast<unsigned>(t.first)),
                         boost::multiprecision::pow(b, static_cast<unsigned>(t.first)));
      } else {
        if (a == 0) throw std::domain_error("at_rational: q=0 with negative exponent");
        qe = BigRational(boost::multiprecision::pow(b, static_cast<unsigned>(-t.first)),
                         boost::multiprecision::pow(a, static_cast<unsigned>(-t.first)));
      }
      sum += BigRational(BigInt(t.second)) * qe;
    }
    return sum;
  }

 private:
  static Laurent merge(const Laurent& x, const Laurent& y, bool subtract) {
    Laurent r;
    r.terms_.reserve(x.terms_.size() + y.terms_.size());
    auto a = x.terms_.begin();
    auto b = y.terms_.begin();
    while (a != x.terms_.end() || b != y.terms_.end()) {
      if (b == y.terms_.end() || (a != x.terms_.end() && a->first < b->first)) {
        r.terms_.push_back(*a++);
      } else if (a == x.terms_.end() || b->first < a->first) {
        r.terms_.emplace_back(b->first, subtract ? Int(-b->second) : b->second);
        ++b;
      } else {
        Int c = subtract ? Int(a->second - b->second) : Int(a->second + b->second);
        if (c != 0) r.terms_.emplace_back(a->first, std::move(c));
        ++a;
        ++b;
      }
    }
    return r;
  }

  std::vector<Term> terms_;
};

using Poly = Laurent<BigInt>;
using PolyI64 = Laurent<long long>;

}  // namespace burau4
