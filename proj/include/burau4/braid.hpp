#pragma once

// Positive braids in minimal form, packed into syllables s1^a s3^b s2^c.
// Packing convention: a leading s2 power is stored as syllable (0,0,c1);
// the trailing syllable may have c_n = 0; interior syllables have a+b > 0
// and all but the last have c > 0.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "burau4/rewrite.hpp"
#include "burau4/word.hpp"

namespace burau4 {

struct Syllable {
  int a = 0;
  int b = 0;
  int c = 0;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

// A subproduct boundary of a minimal form: syllables 1..p-1 plus, when
// after_ab is set, the s1^{a_p} s3^{b_p} part of syllable p.  after_ab
// boundaries are the {1,3}-subproducts, the others the 2-subproducts.
struct Boundary {
  int p = 1;
  bool after_ab = false;

  friend bool operator==(const Boundary&, const Boundary&) = default;
};

class PositiveBraid {
 public:
  PositiveBraid() = default;

  explicit PositiveBraid(std::vector<Syllable> syllables) : syl_(std::move(syllables)) {
    validate_packing();
    index();
  }

  // packs a word; within every maximal {1,3}-run the 1s must precede the 3s
  static PositiveBraid pack(const PositiveWord& w) {
    std::vector<Syllable> syl;
    size_t i = 0;
    const size_t n = w.size();
    bool first = true;
    while (i < n) {
      Syllable s;
      while (i < n && w[i] == 1) {
        ++s.a;
        ++i;
      }
      while (i < n && w[i] == 3) {
        ++s.b;
        ++i;
      }
      if (i < n && w[i] == 1)
        throw std::invalid_argument("pack: sigma1 after sigma3 inside a run");
      while (i < n && w[i] == 2) {
        ++s.c;
        ++i;
      }
      if (!first && s.a + s.b == 0 && s.c == 0) break;
      if (!first && s.a + s.b == 0)
        throw std::invalid_argument("pack: unreachable syllable state");
      syl.push_back(s);
      first = false;
    }
    if (syl.empty()) return PositiveBraid{};
    return PositiveBraid(std::move(syl));
  }

  const std::vector<Syllable>& syllables() const { return syl_; }

  int count() const { return static_cast<int>(syl_.size()); }  // n

  int length() const { return len_; }

  bool empty() const { return syl_.empty(); }

  const Syllable& syl(int p) const { return syl_.at(static_cast<size_t>(p - 1)); }

  int a(int p) const { return in_range(p) ? syl(p).a : 0; }
  int b(int p) const { return in_range(p) ? syl(p).b : 0; }
  int c(int p) const { return in_range(p) ? syl(p).c : 0; }

  PositiveWord word() const {
    PositiveWord w;
    w.reserve(static_cast<size_t>(len_));
    for (const auto& s : syl_) {
      w.insert(w.end(), static_cast<size_t>(s.a), uint8_t{1});
      w.insert(w.end(), static_cast<size_t>(s.b), uint8_t{3});
      w.insert(w.end(), static_cast<size_t>(s.c), uint8_t{2});
    }
    return w;
  }

  // 1-based generator positions; position 0 is "before the word"
  int a_begin(int p) const { return start_.at(static_cast<size_t>(p - 1)) + 1; }
  int a_end(int p) const { return start_.at(static_cast<size_t>(p - 1)) + syl(p).a; }
  int b_begin(int p) const { return a_end(p) + 1; }
  int b_end(int p) const { return a_end(p) + syl(p).b; }
  int c_begin(int p) const { return b_end(p) + 1; }
  int c_end(int p) const { return b_end(p) + syl(p).c; }

  int last_sigma2_pos(int p) const {
    if (syl(p).c < 1) throw std::logic_error("syllable has no sigma2");
    return c_end(p);
  }

  // prefix length of a boundary
  int prefix_length(Boundary bnd) const {
    if (bnd.after_ab) return b_end(bnd.p);
    return bnd.p >= 2 ? c_end(bnd.p - 1) : 0;
  }

  // the prefix at a boundary, as a braid in its own right
  PositiveBraid prefix(Boundary bnd) const {
    std::vector<Syllable> out;
    for (int i = 1; i < bnd.p; ++i) out.push_back(syl(i));
    if (bnd.after_ab) {
      Syllable s = syl(bnd.p);
      s.c = 0;
      if (s.a + s.b > 0 || bnd.p == 1) out.push_back(s);
    }
    while (!out.empty() && out.back().a == 0 && out.back().b == 0 && out.back().c == 0)
      out.pop_back();
    return PositiveBraid(std::move(out));
  }

 private:
  bool in_range(int p) const { return p >= 1 && p <= count(); }

  void validate_packing() const {
    const int n = static_cast<int>(syl_.size());
    for (int p = 1; p <= n; ++p) {
      const auto& s = syl_[static_cast<size_t>(p - 1)];
      if (s.a < 0 || s.b < 0 || s.c < 0) throw std::invalid_argument("negative exponent");
      if (p >= 2 && s.a + s.b == 0) throw std::invalid_argument("interior syllable without a+b");
      if (p <= n - 1 && s.c == 0) throw std::invalid_argument("interior syllable without c");
      if (s.a + s.b + s.c == 0) throw std::invalid_argument("empty syllable");
    }
  }

  void index() {
    start_.clear();
    int pos = 0;
    for (const auto& s : syl_) {
      start_.push_back(pos);
      pos += s.a + s.b + s.c;
    }
    len_ = pos;
  }

  std::vector<Syllable> syl_;
  std::vector<int> start_;  // generator count before each syllable
  int len_ = 0;
};

// the unique minimal-form representative, packed into syllables
inline PositiveBraid minimal_form(const PositiveWord& w, size_t max_states = kDefaultBfsBudget) {
  return PositiveBraid::pack(minimal_word(w, max_states));
}

inline PositiveBraid minimal_form(const BraidWord& w, size_t max_states = kDefaultBfsBudget) {
  return minimal_form(positive_word(w), max_states);
}

struct ConstraintViolation {
  std::string clause;  // "i".."iv"
  int p = 0;
  std::string message;
};

// Checks the four minimal-form constraint families on a packed braid.
// An empty result is necessary (not sufficient) for minimality.
inline std::vector<ConstraintViolation> verify_minimal_constraints(const PositiveBraid& braid) {
  std::vector<ConstraintViolation> out;
  const int n = braid.count();
  auto a = [&](int p) { return braid.a(p); };
  auto b = [&](int p) { return braid.b(p); };
  auto c = [&](int p) { return braid.c(p); };
  for (int p = 1; p <= n; ++p) {
    const bool at_end = (p == n && c(p) == 0);
    if (a(p) == 1 && p > 1 && !at_end && b(p) == 0)
      out.push_back({"i", p, "isolated sigma1: a_p=1 with b_p=0"});
    if (c(p) == 1) {
      if (b(p) > 0 && b(p + 1) > 0)
        out.push_back({"ii", p, "isolated sigma2: b_p>0 and b_{p+1}>0"});
      if (p > 1 && b(p) == 0 && a(p + 1) != 0)
        out.push_back({"ii", p, "isolated sigma2: b_p=0 but a_{p+1}>0"});
    }
    if (a(p) == 0 && b(p) == 1 && p > 1 && !at_end) {
      if (b(p - 1) != 0) out.push_back({"iii", p, "isolated sigma3: b_{p-1}>0"});
      if (p > 2 && c(p - 2) == 1 && !(p == 3 && b(1) == 0))
        out.push_back({"iii", p, "isolated sigma3 after isolated sigma2 run"});
    }
    if (b(p) == 1 && c(p) == 1 && p != n) {
      for (int i = 1; i < p; ++i)
        if (b(i) != 0) {
          out.push_back({"iv", p, "b_p=c_p=1 with an earlier sigma3"});
          break;
        }
    }
  }
  return out;
}

// --- isolated sigma2 subproducts (maximal runs of c_i = 1) ---------------

enum class IsolatedType { I, II, III, NonIsolated };

struct IsolatedSegment {
  IsolatedType type = IsolatedType::NonIsolated;
  int p = 0;       // first syllable of the run (isolated) / segment start
  int p_end = 0;   // p' for isolated segments: the run is p..p'-1 plus a,b of p'
  int gen_begin = 0;  // 1-based inclusive
  int gen_end = 0;    // inclusive; gen_begin > gen_end means empty
};

inline std::vector<IsolatedSegment> isolated_sigma2_decomposition(const PositiveBraid& braid) {
  std::vector<IsolatedSegment> out;
  const int n = braid.count();
  int p = 1;
  int cursor = 1;  // next unassigned generator position
  while (p <= n) {
    if (braid.c(p) == 1) {
      int pe = p;
      while (pe <= n && braid.c(pe) == 1) ++pe;  // run is p..pe-1
      IsolatedSegment seg;
      seg.p = p;
      seg.p_end = pe;
      seg.gen_begin = braid.a_begin(p);
      seg.gen_end = pe <= n ? braid.b_end(pe) : braid.length();
      if (braid.b(p) > 0)
        seg.type = IsolatedType::I;
      else if (p == 1 && braid.a(2) > 0 && n >= 2)
        seg.type = IsolatedType::III;
      else
        seg.type = IsolatedType::II;
      if (seg.gen_begin > cursor)
        out.push_back({IsolatedType::NonIsolated, 0, 0, cursor, seg.gen_begin - 1});
      out.push_back(seg);
      cursor = seg.gen_end + 1;
      p = pe;
      if (p <= n && braid.c(p) == 0) ++p;  // trailing a,b-only syllable was consumed
    } else {
      ++p;
    }
  }
  if (cursor <= braid.length())
    out.push_back({IsolatedType::NonIsolated, 0, 0, cursor, braid.length()});
  return out;
}

// is the sigma2 at 1-based position pos part of an isolated sigma2 subproduct
// (i.e. inside a syllable with c_p = 1)?
inline bool is_isolated_sigma2(const PositiveBraid& braid, int pos) {
  for (int p = 1; p <= braid.count(); ++p) {
    if (braid.c(p) >= 1 && pos >= braid.c_begin(p) && pos <= braid.c_end(p))
      return braid.c(p) == 1;
  }
  return false;
}

// --- s-subproducts --------------------------------------------------------

enum class SubproductKind { OneThree, Two };

struct Subproduct {
  Boundary boundary;
  SubproductKind kind = SubproductKind::Two;
  int length = 0;
};

// every s-subproduct boundary in increasing length; the empty prefix is only
// reported for the empty braid unless include_empty is set
inline std::vector<Subproduct> s_subproducts(const PositiveBraid& braid,
                                             bool include_empty = false) {
  std::vector<Subproduct> out;
  const int n = braid.count();
  if (n == 0) {
    out.push_back({Boundary{1, false}, SubproductKind::Two, 0});
    return out;
  }
  for (int p = 1; p <= n; ++p) {
    const int ab_len = braid.b_end(p);
    const Subproduct one_three{Boundary{p, true}, SubproductKind::OneThree, ab_len};
    const Subproduct two{Boundary{p, false}, SubproductKind::Two,
                         p >= 2 ? braid.c_end(p - 1) : 0};
    if (two.length > 0 || include_empty) out.push_back(two);
    if (one_three.length > 0 || include_empty) out.push_back(one_three);
  }
  if (braid.c(n) > 0)
    out.push_back({Boundary{n + 1, false}, SubproductKind::Two, braid.length()});
  return out;
}

}  // namespace burau4
