#pragma once

// Elementary subroads, bad subroads with their weights and increments, and
// singular subroads with their singular weights.  Spans are part-aligned
// generator ranges inside the ambient minimal form.

#include <optional>
#include <stdexcept>
#include <vector>

#include "burau4/blocks.hpp"
#include "burau4/braid.hpp"

namespace burau4 {

struct Span {
  int begin = 1;  // 1-based inclusive
  int end = 0;

  bool empty() const { return begin > end; }
  int length() const { return empty() ? 0 : end - begin + 1; }
  bool contains(int pos) const { return pos >= begin && pos <= end; }

  friend bool operator==(const Span&, const Span&) = default;
};

// a maximal power of one generator clipped to a span
struct Part {
  int letter = 0;  // 1, 2 or 3
  int exp = 0;
  int p = 0;  // ambient syllable
  Span span;
};

inline std::vector<Part> parts_in_span(const PositiveBraid& braid, Span s) {
  std::vector<Part> out;
  if (s.empty()) return out;
  for (int p = 1; p <= braid.count(); ++p) {
    const auto add = [&](int letter, int begin, int end) {
      if (begin > end) return;
      const int lo = std::max(begin, s.begin);
      const int hi = std::min(end, s.end);
      if (lo > hi) return;
      if (lo != begin || hi != end)
        throw std::logic_error("span is not part-aligned");
      out.push_back(Part{letter, hi - lo + 1, p, Span{lo, hi}});
    };
    add(1, braid.a_begin(p), braid.a_end(p));
    add(3, braid.b_begin(p), braid.b_end(p));
    add(2, braid.c_begin(p), braid.c_end(p));
  }
  return out;
}

// a {1,3} group (adjacent sigma1/sigma3 parts of one syllable) or a sigma2 power
struct RoadUnit {
  bool is_two = false;
  int a = 0;
  int b = 0;
  int c = 0;
  int p = 0;
  Span span;
};

inline std::vector<RoadUnit> units_in_span(const PositiveBraid& braid, Span s) {
  std::vector<RoadUnit> out;
  for (const Part& part : parts_in_span(braid, s)) {
    if (part.letter == 2) {
      out.push_back(RoadUnit{true, 0, 0, part.exp, part.p, part.span});
    } else if (!out.empty() && !out.back().is_two && out.back().p == part.p &&
               part.letter == 3) {
      out.back().b = part.exp;
      out.back().span.end = part.span.end;
    } else {
      RoadUnit u{false, 0, 0, 0, part.p, part.span};
      (part.letter == 1 ? u.a : u.b) = part.exp;
      out.push_back(u);
    }
  }
  return out;
}

// --- elementary subroads ---------------------------------------------------

enum class FactorKind { Constant, Alternating, IsoOneInitial, IsoThreeInitial, IsoEnd };

struct ElementarySubroad {
  FactorKind kind = FactorKind::Constant;
  int i = 0;  // the constrained generator: Constant/Iso* factors; 0 for a bare sigma2 power
  Span span;
  std::vector<RoadUnit> units;

  int sigma2_count() const {
    int m = 0;
    for (const auto& u : units)
      if (u.is_two) m += u.c;
    return m;
  }
  int pair_group_count() const {  // sigma1 sigma3 groups
    int m = 0;
    for (const auto& u : units)
      if (!u.is_two && u.a > 0 && u.b > 0) ++m;
    return m;
  }
  const RoadUnit& last_unit() const { return units.back(); }
};

namespace detail {

inline int group_type(const RoadUnit& u) {  // 1, 3, or 0 for a mixed group
  if (u.a > 0 && u.b > 0) return 0;
  return u.a > 0 ? 1 : 3;
}

}  // namespace detail

// unique factorization of a road span into elementary subroads
inline std::vector<ElementarySubroad> elementary_decomposition(const PositiveBraid& braid,
                                                               Span road) {
  std::vector<ElementarySubroad> out;
  if (road.empty()) return out;
  const auto segments = isolated_sigma2_decomposition(braid);
  for (const auto& seg : segments) {
    const Span inter{std::max(road.begin, seg.gen_begin), std::min(road.end, seg.gen_end)};
    if (inter.empty()) continue;
    if (seg.type != IsolatedType::NonIsolated) {
      ElementarySubroad f;
      f.span = inter;
      f.units = units_in_span(braid, inter);
      const bool whole = inter.begin == seg.gen_begin && inter.end == seg.gen_end;
      const int a_p = braid.a(seg.p);
      if (seg.type == IsolatedType::I && a_p == 0) {
        f.kind = FactorKind::IsoThreeInitial;
        f.i = 3;
      } else if (seg.type == IsolatedType::I && whole) {
        f.kind = FactorKind::IsoEnd;
        f.i = 1;
      } else {
        f.kind = FactorKind::IsoOneInitial;
        f.i = 1;
      }
      out.push_back(std::move(f));
      continue;
    }
    // non-isolated piece: split into i-constant and alternating factors; a
    // factor ends with its {1,3} group unless it is at the end of the piece,
    // so the sigma2 power between two factors opens the second one
    const auto units = units_in_span(braid, inter);
    std::vector<ElementarySubroad> factors;
    std::vector<RoadUnit> curr;
    int curr_type = -1;  // -1 undecided; 0 alternating; 1 or 3 constant
    auto close = [&]() {
      if (curr.empty()) return;
      ElementarySubroad f;
      f.span = Span{curr.front().span.begin, curr.back().span.end};
      f.units = std::move(curr);
      if (curr_type == 0) {
        f.kind = FactorKind::Alternating;
        f.i = 0;
      } else {
        f.kind = FactorKind::Constant;
        f.i = curr_type == -1 ? 0 : curr_type;
      }
      factors.push_back(std::move(f));
      curr.clear();
      curr_type = -1;
    };
    for (const auto& u : units) {
      if (u.is_two) {
        curr.push_back(u);
        continue;
      }
      const int t = detail::group_type(u);
      if (curr_type != -1 && t != curr_type) {
        // the trailing sigma2 power belongs to the new factor
        RoadUnit carried{};
        bool has_carried = false;
        if (!curr.empty() && curr.back().is_two) {
          carried = curr.back();
          has_carried = true;
          curr.pop_back();
        }
        close();
        if (has_carried) curr.push_back(carried);
      }
      curr.push_back(u);
      curr_type = t;
    }
    close();
    for (auto& f : factors) out.push_back(std::move(f));
  }
  return out;
}

// --- elementary bad subroads ----------------------------------------------

inline bool is_elementary_bad(const PositiveBraid& braid, const ElementarySubroad& f) {
  switch (f.kind) {
    case FactorKind::Constant:
      for (const auto& u : f.units) {
        if (u.is_two && u.c > 2) return false;
        if (!u.is_two && u.a + u.b > 2) return false;
      }
      return true;
    case FactorKind::Alternating:
      for (const auto& u : f.units) {
        if (u.is_two && u.c != 2) return false;
        if (!u.is_two && (u.a != 1 || u.b != 1)) return false;
      }
      return true;
    case FactorKind::IsoOneInitial:
    case FactorKind::IsoThreeInitial: {
      const int i = f.i;
      for (const auto& u : f.units) {
        if (u.is_two) continue;
        const int own = i == 1 ? u.a : u.b;
        if (own > 2) return false;
      }
      // index of the first generator that is not sigma2 (or the first, when
      // the factor starts with sigma1/sigma3)
      if (!f.units.empty()) {
        if (f.units.front().is_two) {
          for (const auto& u : f.units)
            if (!u.is_two) {
              const int first_letter = u.a > 0 ? 1 : 3;
              if (first_letter != 4 - i) return false;
              break;
            }
        } else {
          const auto& u = f.units.front();
          const int first_letter = u.a > 0 ? 1 : 3;
          if (first_letter != i) return false;
        }
      }
      return true;
    }
    case FactorKind::IsoEnd: {
      // must equal sigma1 sigma3 sigma2
      (void)braid;
      if (f.units.size() != 2) return false;
      return !f.units[0].is_two && f.units[0].a == 1 && f.units[0].b == 1 &&
             f.units[1].is_two && f.units[1].c == 1;
    }
  }
  return false;
}

// --- bad subroads ----------------------------------------------------------

struct BadSubroad {
  Span span;
  std::vector<ElementarySubroad> factors;
  int switch_mask = 0;       // bit 1: 1-switch, bit 2: 3-switch
  int pair_groups = 0;       // sigma1 sigma3 units in alternating factors
  int omega = 0;             // Def 5.14 weight
  int last_exponent = 0;
  bool ends_pair_group = false;  // span ends with a sigma1 sigma3 group

  bool is_i_switch(int i) const { return (switch_mask & (i == 1 ? 1 : 2)) != 0; }

  int i_switch() const {  // smallest qualifying i, for reporting
    if (switch_mask & 1) return 1;
    if (switch_mask & 2) return 3;
    return 0;
  }

  // parity law: even number of sigma1 sigma3 units preserves the side
  int terminal_for(int incoming_i) const {
    return pair_groups % 2 == 0 ? incoming_i : 4 - incoming_i;
  }

  std::optional<int> i_terminal() const {
    if (last_exponent <= 1) return std::nullopt;
    const int i = i_switch();
    if (i == 0) return std::nullopt;
    return terminal_for(i);
  }

  // Def 5.14/increment table
  int increment(int incoming_i) const {
    if (factors.empty()) return 0;
    const auto& last = factors.back();
    if (last.kind == FactorKind::Constant || last.kind == FactorKind::Alternating) {
      if (ends_pair_group && terminal_for(incoming_i) == 1) return 1;
      return 0;
    }
    if (last.kind == FactorKind::IsoOneInitial || last.kind == FactorKind::IsoThreeInitial) {
      const auto& u = last.last_unit();
      if (!u.is_two) {
        const int last_letter = u.b > 0 ? 3 : 1;
        if (last_letter == 4 - last.i) return -2;
      }
      return 0;
    }
    return 0;  // end isolated subroad: no clause applies
  }
};

namespace detail {

inline int omega_of_factors(const std::vector<ElementarySubroad>& factors, int after_pos) {
  int w = 0;
  for (const auto& f : factors) {
    if (f.kind == FactorKind::Constant || f.kind == FactorKind::Alternating) {
      for (const auto& u : f.units) {
        if (u.span.begin <= after_pos) continue;
        if (u.is_two && u.c == 2) ++w;
        if (!u.is_two && u.a == 2) ++w;
        if (!u.is_two && u.b == 2) ++w;
      }
    } else if (f.kind == FactorKind::IsoOneInitial || f.kind == FactorKind::IsoThreeInitial) {
      for (const auto& u : f.units) {
        if (u.is_two || u.span.begin <= after_pos) continue;
        const int own = f.i == 1 ? u.a : u.b;
        const int other = f.i == 1 ? u.b : u.a;
        if (own == 2) ++w;
        w += other;
      }
    }
  }
  return w;
}

inline int first_non2_letter(const ElementarySubroad& f) {
  for (const auto& u : f.units)
    if (!u.is_two) return u.a > 0 ? 1 : 3;
  return 0;
}

inline int last_letter_of(const ElementarySubroad& f) {
  const auto& u = f.units.back();
  if (u.is_two) return 2;
  return u.b > 0 ? 3 : 1;
}

}  // namespace detail

// Def 5.8: every factor elementary-bad plus the six ordering clauses.
inline std::optional<BadSubroad> is_bad_subroad(const PositiveBraid& braid, Span road) {
  if (road.empty()) return std::nullopt;
  BadSubroad b;
  b.span = road;
  b.factors = elementary_decomposition(braid, road);
  if (b.factors.empty()) return std::nullopt;
  for (const auto& f : b.factors)
    if (!is_elementary_bad(braid, f)) return std::nullopt;  // (i)
  const auto& fs = b.factors;
  auto is_iso = [](const ElementarySubroad& f) {
    return f.kind == FactorKind::IsoOneInitial || f.kind == FactorKind::IsoThreeInitial ||
           f.kind == FactorKind::IsoEnd;
  };
  for (size_t j = 0; j + 1 < fs.size(); ++j) {
    const auto& f = fs[j];
    const auto& g = fs[j + 1];
    if (f.kind == FactorKind::Constant && g.kind == FactorKind::Constant) {  // (ii)
      if (f.i != 0 && g.i != 0 && f.i != g.i) return std::nullopt;
    }
    if (f.kind == FactorKind::Constant &&
        (g.kind == FactorKind::IsoOneInitial || g.kind == FactorKind::IsoThreeInitial)) {  // (iii)
      if (f.i != 0 && g.i != f.i) return std::nullopt;
    }
    if (g.kind == FactorKind::Alternating && j + 2 < fs.size()) {  // (iv) with both neighbors
      const int i = detail::last_letter_of(f);
      const int ip = detail::first_non2_letter(fs[j + 2]);
      if ((i == 1 || i == 3) && (ip == 1 || ip == 3)) {
        const int N = g.pair_group_count();
        if (N % 2 == 0 && ip != i) return std::nullopt;
        if (N % 2 == 1 && ip == i) return std::nullopt;
      }
    }
    if (is_iso(f) && !is_iso(g)) {
      if (f.sigma2_count() % 2 != 0) return std::nullopt;  // (v)
      const int i = detail::last_letter_of(f);             // (vi)
      if ((i == 1 || i == 3) && g.kind == FactorKind::Constant && g.i != 0 && g.i != i)
        return std::nullopt;
    }
  }
  // Def 5.9: switch mask from the first non-alternating constraint
  size_t j1 = 0;
  int lead_pairs = 0;
  if (fs[0].kind == FactorKind::Alternating) {
    lead_pairs = fs[0].pair_group_count();
    j1 = 1;
  }
  auto accept = [&](int i) {
    if (j1 >= fs.size()) return true;  // a single alternating factor constrains nothing
    const int i0 = lead_pairs % 2 == 0 ? i : 4 - i;
    const auto& f = fs[j1];
    switch (f.kind) {
      case FactorKind::Constant: return f.i == 0 || f.i == i0;
      case FactorKind::IsoOneInitial: return i0 == 1;
      case FactorKind::IsoThreeInitial: return i0 == 3;
      case FactorKind::IsoEnd: return true;
      case FactorKind::Alternating: return false;  // cannot happen: maximality
    }
    return false;
  };
  if (accept(1)) b.switch_mask |= 1;
  if (accept(3)) b.switch_mask |= 2;
  if (b.switch_mask == 0) return std::nullopt;
  for (const auto& f : fs)
    if (f.kind == FactorKind::Alternating) b.pair_groups += f.pair_group_count();
  b.omega = detail::omega_of_factors(b.factors, 0);
  const auto& lastu = fs.back().units.back();
  b.last_exponent = lastu.is_two ? lastu.c : (lastu.b > 0 ? lastu.b : lastu.a);
  b.ends_pair_group = !lastu.is_two && lastu.a == 1 && lastu.b == 1 &&
                      fs.back().kind == FactorKind::Alternating;
  return b;
}

inline int omega_after(const BadSubroad& b, int cut_pos) {
  return detail::omega_of_factors(b.factors, cut_pos);
}

// --- singular subroads ------------------------------------------------------

enum class SingularFollower { IsolatedSigma2, NonIsolatedSigma2, EndOfBraid };

struct SingularSubroad {
  Span span;        // possibly empty
  int M = 1;        // one more than the number of sigma2s
  int omega_sing = 0;
  SingularFollower follower = SingularFollower::EndOfBraid;
};

// is the {1,3} group of syllable p contained in an isolated sigma2 subproduct?
inline bool group_in_isolated(const PositiveBraid& braid, int p) {
  return braid.c(p) == 1 || (p >= 2 && braid.c(p - 1) == 1);
}

// maximal prefix of the road after the block, inside an isolated sigma2
// subproduct, all sigma1/sigma3 exponents equal to 2, not ending with sigma2
inline SingularSubroad singular_subroad(const Block& blk, const PositiveBraid& braid,
                                        Span road_after) {
  SingularSubroad out;
  out.span = Span{blk.gen_end + 1, blk.gen_end};
  const auto units = units_in_span(braid, road_after);
  int last_good_end = out.span.end;
  for (const auto& u : units) {
    if (u.is_two) {
      if (u.c != 1) break;  // left the isolated subproduct
      out.span.end = u.span.end;
      continue;  // a trailing sigma2 is trimmed below
    }
    if ((u.a != 0 && u.a != 2) || (u.b != 0 && u.b != 2)) break;
    if (!group_in_isolated(braid, u.p)) break;
    out.span.end = u.span.end;
    last_good_end = u.span.end;
  }
  out.span.end = last_good_end;  // do not end with sigma2
  int m = 0;
  for (const auto& u : units_in_span(braid, out.span))
    if (u.is_two) m += u.c;
  out.M = m + 1;
  const int next = out.span.empty() ? blk.gen_end + 1 : out.span.end + 1;
  if (next > braid.length()) {
    out.follower = SingularFollower::EndOfBraid;
  } else {
    // the follower position is the next sigma2 (the walk stopped at one, or
    // the block/span boundary is followed by letters leading to one)
    int pos = next;
    const PositiveWord w = braid.word();
    while (pos <= braid.length() && w[static_cast<size_t>(pos - 1)] != 2) ++pos;
    if (pos > braid.length())
      out.follower = SingularFollower::EndOfBraid;
    else
      out.follower = is_isolated_sigma2(braid, pos) ? SingularFollower::IsolatedSigma2
                                                    : SingularFollower::NonIsolatedSigma2;
  }
  const bool even = out.M % 2 == 0;
  if (blk.kind == BlockKind::Two)
    out.omega_sing = even ? (3 * out.M - 2) / 2 : (3 * out.M - 5) / 2;
  else
    out.omega_sing = even ? (3 * out.M) / 2 : (3 * out.M - 1) / 2;
  return out;
}

}  // namespace burau4
