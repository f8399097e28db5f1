#pragma once

// Abnormal strings: chains of blocks and bad subroads with adjusted widths,
// running discrepancies and a sign; terminal abnormal strings; the
// weakly-normal predicate.

#include <optional>
#include <vector>

#include "burau4/blocks.hpp"
#include "burau4/braid.hpp"
#include "burau4/subroads.hpp"

namespace burau4 {

// Def 5.17 width; defined only for the block shapes the definition lists
inline std::optional<int> block_width(const Block& blk, const PositiveBraid& braid) {
  if (blk.kind == BlockKind::Two) {
    if (blk.cls == BlockClass::Initial) return std::nullopt;
    if (braid.a(blk.p + 1) != 2) return std::nullopt;
    if (blk.cls == BlockClass::Singular) return braid.a(blk.p);
    return braid.a(blk.p) - braid.b(blk.p) - 1;
  }
  const int c0 = braid.c(blk.p - 1);
  const int c1 = braid.c(blk.p);
  if (blk.cls == BlockClass::Singular) return c0;
  if (c0 > 1 && c1 == 2) return c0 - 1;
  if (c0 == 1 && c1 > 1) return braid.a(blk.p - 1) - c1;
  return std::nullopt;
}

struct StringBlock {
  Block block;
  char clause = '?';              // Def 5.18 clause: 'a'..'e', '?' when none matched
  int i_j = 1;                    // Def 5.16 switch index of the block
  std::optional<int> switch_type; // 1/3-switch 2-block (terminal type of the previous road)
  std::optional<int> omega_cap;   // adjusted width Omega(B_j)
  Span road;                      // R_j (for j = k: the maximal bad prefix)
  Span road0;                     // R_{j,0}
  Span singular;                  // R_j' (empty span when none)
  std::optional<SingularSubroad> singular_data;
  std::optional<BadSubroad> bad;  // analysis of road0 (nullopt only for the empty road)
  int omega_beyond = 0;           // omega(R_{j,0} \ R_j')
  std::optional<int> xi;          // Xi_j = Omega(B_j) - omega_beyond
};

struct AbnormalString {
  std::vector<StringBlock> blocks;
  int end_pos = 0;                 // end of R_k = end of P
  std::optional<int> sign;         // +1 / -1
  bool nu_switch = false;          // of the enclosing subproduct P
  std::optional<int> terminal_side;  // i'_k: P is an i'_k-switch subproduct
  std::optional<char> terminal_clause;
};

namespace detail {

inline int block_i_index(const Block& blk, const PositiveBraid& braid, bool first_in_string) {
  if (blk.kind == BlockKind::Two) return 1;
  const int c0 = braid.c(blk.p - 1);
  if (blk.cls != BlockClass::Singular) {
    if (c0 == 1) return 1;
    if (!first_in_string && c0 == 2) return 1;
  }
  return 3;
}

// the road after blocks[bi] in the decomposition, or to the end of the braid
inline Span road_after(const BlockRoadDecomposition& d, size_t bi, const PositiveBraid& braid) {
  const int begin = d.blocks[bi].gen_end + 1;
  const int end = bi + 1 < d.blocks.size() ? d.blocks[bi + 1].gen_begin - 1 : braid.length();
  (void)braid;
  return Span{begin, end};
}

// trim a road to its maximal (s,2)-subroad: drop a trailing {1,3} group
inline Span trim_to_two_boundary(const PositiveBraid& braid, Span road) {
  const auto parts = parts_in_span(braid, road);
  int end = road.begin - 1;
  for (const auto& part : parts)
    if (part.letter == 2) end = part.span.end;
  return Span{road.begin, end};
}

// longest boundary-aligned prefix of `road` that is an i-switch bad subroad
inline std::pair<Span, std::optional<BadSubroad>> maximal_bad_prefix(const PositiveBraid& braid,
                                                                     Span road, int i) {
  const auto parts = parts_in_span(braid, road);
  // candidate prefix ends: after each sigma2 part and after each {1,3} group
  std::vector<int> ends;
  for (size_t j = 0; j < parts.size(); ++j) {
    const auto& part = parts[j];
    if (part.letter == 2) {
      ends.push_back(part.span.end);
    } else {
      const bool group_end = j + 1 >= parts.size() || parts[j + 1].letter == 2 ||
                             parts[j + 1].p != part.p;
      if (group_end) ends.push_back(part.span.end);
    }
  }
  Span best{road.begin, road.begin - 1};
  std::optional<BadSubroad> best_bad;
  for (int end : ends) {
    const Span candidate{road.begin, end};
    auto bs = is_bad_subroad(braid, candidate);
    if (bs && bs->is_i_switch(i)) {
      best = candidate;
      best_bad = std::move(bs);
    }
  }
  return {best, std::move(best_bad)};
}

struct ClauseResult {
  bool matched = false;
  char clause = '?';
  std::optional<int> omega_cap;
  Span singular{1, 0};
  std::optional<SingularSubroad> singular_data;
  bool force_final = false;
};

inline ClauseResult select_clause(const PositiveBraid& braid, const Block& blk, bool first,
                                  std::optional<int> switch_type, std::optional<int> xi_prev,
                                  Span road_after_block) {
  ClauseResult res;
  const auto width = block_width(blk, braid);
  if (first) {
    if (blk.cls == BlockClass::Generic) {
      if (blk.kind == BlockKind::Three && braid.c(blk.p - 1) == 1 &&
          !(braid.a(blk.p - 1) > braid.c(blk.p) + 1))
        return res;
      if (!width) return res;
      res.matched = true;
      res.clause = 'a';
      res.omega_cap = *width;
      return res;
    }
    if (blk.cls == BlockClass::Singular) {
      if (!width) return res;
      const auto sing = singular_subroad(blk, braid, road_after_block);
      if (sing.follower == SingularFollower::EndOfBraid) return res;
      res.matched = true;
      res.clause = 'b';
      res.singular = sing.span;
      res.singular_data = sing;
      res.omega_cap = *width + (sing.follower == SingularFollower::IsolatedSigma2 ? 1 : 0);
      return res;
    }
    return res;  // initial blocks never head a string
  }
  if (blk.kind == BlockKind::Two) {
    if (braid.a(blk.p + 1) != 2 || !switch_type) return res;
    const int ap = braid.a(blk.p);
    const int bp = braid.b(blk.p);
    if (bp == 2 && *switch_type == 3) {
      // clause (d): widths from the singular subroad tables
      res.clause = 'd';
      const auto sing = singular_subroad(blk, braid, road_after_block);
      res.singular = sing.span;
      res.singular_data = sing;
      const int xi = xi_prev.value_or(0);
      if (sing.M % 2 == 1 && sing.follower != SingularFollower::EndOfBraid) {
        const bool iso = sing.follower == SingularFollower::IsolatedSigma2;
        const int slack = xi - (iso ? 5 : 4);
        if (slack > sing.omega_sing)
          res.omega_cap = iso ? ap + 1 : ap;
        else if (slack < sing.omega_sing)
          res.omega_cap = ap + xi - 4 - sing.omega_sing;
      }
      res.matched = true;
      res.force_final = !res.omega_cap.has_value();
      return res;
    }
    res.clause = 'c';
    if (*switch_type == 3 && bp <= 2) return res;  // b=2 handled by (d); b<2 matches nothing
    if (*switch_type == 1 && ap >= bp + 2)
      res.omega_cap = ap - bp - 2;
    else if (*switch_type == 3 && ap >= bp)
      res.omega_cap = ap - bp;
    else
      return res;
    res.matched = true;
    return res;
  }
  // clause (e): 3-blocks after the first
  res.clause = 'e';
  const int c0 = braid.c(blk.p - 1);
  const int c1 = braid.c(blk.p);
  const int xi = xi_prev.value_or(0);
  if (c0 > 2 && c1 == 2) {
    res.matched = true;
    res.omega_cap = c0 - 2;
    return res;
  }
  if (c0 == 1 && braid.a(blk.p - 1) > c1 + 2) {
    res.matched = true;
    res.omega_cap = braid.a(blk.p - 1) - c1 - 1;
    res.force_final = true;
    return res;
  }
  if (c0 == 2 && c1 > 2 && xi > c1 + 1) {
    res.matched = true;
    res.omega_cap = xi - c1;
    res.force_final = true;
    return res;
  }
  if (c0 == 2 && c1 == 2) {
    res.matched = true;
    res.omega_cap = xi - 2;
    res.force_final = true;
    return res;
  }
  return res;  // no subcase: the string ends before this block
}

}  // namespace detail

// Def 5.19: sign of an abnormal string (nullopt when the parity formula is
// inapplicable, which the terminal clauses treat as "not that sign")
inline std::optional<int> string_sign(const AbnormalString& s, const PositiveBraid& braid) {
  const int k = static_cast<int>(s.blocks.size());
  auto xi_before = [&](int j) {  // Xi_{j-1}, 1-based j
    if (j <= 1) return 0;
    return s.blocks[static_cast<size_t>(j - 2)].xi.value_or(0);
  };
  auto is_d_shape = [&](const StringBlock& e) {  // 3-switch 2-block s1^a s3^2 s2 s1^2
    return e.block.kind == BlockKind::Two && e.switch_type == 3 && braid.b(e.block.p) == 2 &&
           braid.a(e.block.p + 1) == 2;
  };
  auto d_shape_changes_sign = [&](const StringBlock& e, int j) {
    if (!e.singular_data || e.singular_data->M % 2 == 0) return false;
    const bool iso = e.singular_data->follower == SingularFollower::IsolatedSigma2;
    return xi_before(j) - (iso ? 5 : 4) > e.singular_data->omega_sing;
  };
  int jprime = 0;
  for (int j = k; j >= 1; --j) {
    const StringBlock& e = s.blocks[static_cast<size_t>(j - 1)];
    if (e.block.cls != BlockClass::Generic) continue;
    if (e.block.kind == BlockKind::Two) {
      if (braid.a(e.block.p + 1) != 2) continue;
      if (e.switch_type == 3 && braid.b(e.block.p) <= 2) continue;
      jprime = j;
      break;
    }
    if (braid.c(e.block.p - 1) != 2) {
      jprime = j;
      break;
    }
  }
  int changes = 0;
  if (jprime >= 1 && s.blocks[static_cast<size_t>(jprime - 1)].i_j == 3) ++changes;
  for (int j = jprime + 1; j <= k; ++j) {
    const StringBlock& e = s.blocks[static_cast<size_t>(j - 1)];
    if (e.block.cls == BlockClass::Singular) {
      ++changes;
    } else if (is_d_shape(e)) {
      if (d_shape_changes_sign(e, j)) ++changes;
    } else if (j == k && e.block.kind == BlockKind::Three && braid.c(e.block.p - 1) == 2) {
      ++changes;
    }
  }
  const PositiveWord w = braid.word();
  auto isolated_twos_in = [&](Span span, int after) {
    int m = 0;
    for (int pos = std::max(span.begin, after + 1); pos <= span.end; ++pos)
      if (w[static_cast<size_t>(pos - 1)] == 2 && is_isolated_sigma2(braid, pos)) ++m;
    return m;
  };
  int m1 = 0;
  for (int j = std::max(jprime, 1); j <= k; ++j) {
    const StringBlock& e = s.blocks[static_cast<size_t>(j - 1)];
    m1 += isolated_twos_in(e.road, e.singular.empty() ? 0 : e.singular.end);
  }
  int m2 = 0;
  for (int j = 1; j <= k; ++j) {
    const StringBlock& e = s.blocks[static_cast<size_t>(j - 1)];
    if (is_d_shape(e) && !d_shape_changes_sign(e, j)) m2 += isolated_twos_in(e.singular, 0);
  }
  const int m = m1 + m2;
  const int val = m - (s.nu_switch ? 3 : 0);
  if (val % 2 != 0) return std::nullopt;
  return (val / 2 + changes) % 2 == 0 ? 1 : -1;
}

inline std::vector<AbnormalString> abnormal_strings(const PositiveBraid& braid) {
  std::vector<AbnormalString> out;
  const auto decomp = block_road_decomposition(braid);
  const size_t nblocks = decomp.blocks.size();
  size_t scan = 0;
  while (scan < nblocks) {
    // B1: the first abnormal block at or after scan
    size_t b1 = scan;
    while (b1 < nblocks && (decomp.blocks[b1].cls == BlockClass::Initial ||
                            is_normal_block(decomp.blocks[b1], braid)))
      ++b1;
    if (b1 >= nblocks) break;
    AbnormalString s;
    size_t bi = b1;
    std::optional<int> switch_type;  // of the block about to be added
    std::optional<int> xi_prev;
    bool done = false;
    while (!done) {
      StringBlock entry;
      entry.block = decomp.blocks[bi];
      entry.i_j = detail::block_i_index(entry.block, braid, s.blocks.empty());
      entry.switch_type = switch_type;
      const Span road = detail::road_after(decomp, bi, braid);
      const auto clause = detail::select_clause(braid, entry.block, s.blocks.empty(),
                                                switch_type, xi_prev, road);
      if (!clause.matched) {
        if (s.blocks.empty()) {
          // the head block matches no clause: no string starts here
          scan = b1 + 1;
          goto next_string;
        }
        // close the string before this block: recompute the final road below
        bi -= 1;
        break;
      }
      entry.clause = clause.clause;
      entry.omega_cap = clause.omega_cap;
      entry.singular = clause.singular;
      entry.singular_data = clause.singular_data;
      entry.road = road;
      // may we continue to the next block?
      bool can_continue = !clause.force_final && entry.omega_cap.has_value() &&
                          bi + 1 < nblocks;
      if (can_continue) {
        const Block& next = decomp.blocks[bi + 1];
        if (next.gen_begin != road.end + 1) can_continue = false;  // must be adjacent
        const int i_next = detail::block_i_index(next, braid, false);
        Span road0 = road;
        if (can_continue && next.kind == BlockKind::Three && i_next == 1)
          road0 = detail::trim_to_two_boundary(braid, road);
        if (can_continue) {
          std::optional<BadSubroad> bs;
          if (road0.empty()) {
            BadSubroad empty;
            empty.span = road0;
            empty.switch_mask = 3;
            bs = empty;
          } else {
            bs = is_bad_subroad(braid, road0);
          }
          if (!bs || !bs->is_i_switch(entry.i_j)) can_continue = false;
          if (can_continue && road0 != road && bs->terminal_for(entry.i_j) != 1)
            can_continue = false;
          if (can_continue) {
            const int cut = clause.singular.empty() ? 0 : clause.singular.end;
            const int beyond = omega_after(*bs, cut);
            if (!(beyond + 1 < *entry.omega_cap)) can_continue = false;
            if (can_continue) {
              entry.road0 = road0;
              entry.bad = std::move(bs);
              entry.omega_beyond = beyond;
              entry.xi = *entry.omega_cap - beyond;
              switch_type = entry.bad->terminal_for(entry.i_j);
              xi_prev = entry.xi;
              s.blocks.push_back(std::move(entry));
              ++bi;
              continue;
            }
          }
        }
      }
      // final block: R_k is the maximal i_k-switch bad prefix of the road
      auto [rk, bad] = detail::maximal_bad_prefix(braid, road, entry.i_j);
      entry.road = rk;
      entry.road0 = rk;
      entry.bad = std::move(bad);
      if (!entry.bad) {
        BadSubroad empty;
        empty.span = rk;
        empty.switch_mask = 3;
        entry.bad = empty;
      }
      const int cut = entry.singular.empty() ? 0 : entry.singular.end;
      entry.omega_beyond = omega_after(*entry.bad, cut);
      if (entry.omega_cap) entry.xi = *entry.omega_cap - entry.omega_beyond;
      s.blocks.push_back(std::move(entry));
      done = true;
    }
    {
      // trailing data of the string
      StringBlock& last = s.blocks.back();
      if (!done) {
        // closed because the next block matched no clause; recompute R_k
        auto [rk, bad] = detail::maximal_bad_prefix(braid, last.road, last.i_j);
        last.road = rk;
        last.road0 = rk;
        if (bad) last.bad = std::move(bad);
        const int cut = last.singular.empty() ? 0 : last.singular.end;
        last.omega_beyond = omega_after(*last.bad, cut);
        if (last.omega_cap) last.xi = *last.omega_cap - last.omega_beyond;
      }
      s.end_pos = last.road.empty() ? last.block.gen_end : last.road.end;
      if (last.bad && last.bad->is_i_switch(last.i_j))
        s.terminal_side = last.bad->terminal_for(last.i_j);
      // mu/nu switch of the enclosing subproduct
      s.nu_switch = false;
      for (const auto& seg : isolated_sigma2_decomposition(braid)) {
        if (seg.type == IsolatedType::NonIsolated) continue;
        if (s.end_pos >= seg.gen_begin && s.end_pos <= seg.gen_end) {
          int twos = 0;
          const PositiveWord w = braid.word();
          for (int pos = seg.gen_begin; pos <= s.end_pos; ++pos)
            if (w[static_cast<size_t>(pos - 1)] == 2) ++twos;
          s.nu_switch = twos % 2 == 1;
        }
      }
      out.push_back(std::move(s));
      scan = bi + 1;
    }
  next_string:;
  }
  for (auto& s : out) s.sign = string_sign(s, braid);
  return out;
}

// Def 5.20: is the final block long-cancelling?
inline bool is_long_cancelling(const AbnormalString& s, const PositiveBraid& braid) {
  const StringBlock& last = s.blocks.back();
  if (last.block.kind == BlockKind::Two) {
    if (last.switch_type == 3 && braid.b(last.block.p) == 2)
      return last.omega_cap.has_value();  // one of 5.18(d)(i)-(iv) held
    return true;
  }
  return last.i_j == 3;
}

namespace detail {

inline bool is_e_shaped(const Block& blk, const PositiveBraid& braid) {
  if (blk.kind != BlockKind::Three || blk.cls != BlockClass::Generic) return false;
  if (braid.c(blk.p - 1) != 1) return false;
  const int a = braid.a(blk.p - 1);
  const int c = braid.c(blk.p);
  return a == c - 1 || a == c || a == c + 1;
}

// the boundary at 1-based position end (which ends a c-part or a {1,3} group)
struct EndBoundary {
  bool is_two = true;
  int p = 1;  // 2-boundary: syllables 1..p-1; {1,3}: plus a_p, b_p
};

inline EndBoundary end_boundary(const PositiveBraid& braid, int end) {
  for (int p = 1; p <= braid.count(); ++p) {
    if (braid.c(p) >= 1 && braid.c_end(p) == end) return {true, p + 1};
    if (braid.b_end(p) == end && braid.a(p) + braid.b(p) > 0) return {false, p};
  }
  throw std::logic_error("string end is not at a subproduct boundary");
}

}  // namespace detail

// Def 5.21, clauses tested (a) through (g); first match reported
inline std::optional<char> terminal_clause(const PositiveBraid& braid,
                                           const std::vector<AbnormalString>& strings,
                                           size_t idx) {
  const AbnormalString& s = strings[idx];
  const auto decomp = block_road_decomposition(braid);
  const StringBlock& last = s.blocks.back();
  const int k = static_cast<int>(s.blocks.size());
  const bool negative = s.sign && *s.sign == -1;
  const bool positive = s.sign && *s.sign == 1;
  const bool lc = is_long_cancelling(s, braid);
  const std::optional<int> cap = last.omega_cap;
  const int omega_k = last.omega_beyond;
  const int xi_prev = k >= 2 ? s.blocks[static_cast<size_t>(k - 2)].xi.value_or(0) : 0;
  const int q = s.end_pos + 1;
  const Block* next_block = nullptr;
  for (const auto& blk : decomp.blocks)
    if (blk.gen_begin == q) next_block = &blk;

  if (lc && negative && q <= braid.length() && next_block == nullptr && cap) {
    const auto bnd = detail::end_boundary(braid, s.end_pos);
    const int gap = *cap - omega_k;
    if (bnd.is_two) {  // (a): followed by the subroad s1^{a_p} s3^{b_p}
      const int ap = braid.a(bnd.p);
      const int bp = braid.b(bnd.p);
      if (ap + bp > 0) {
        if (ap == 0 || bp == 0) {
          const int i = ap == 0 ? 3 : 1;
          if (s.terminal_side == i && gap == 1) return 'a';
          if (s.terminal_side == 4 - i && gap == 0) return 'a';
        } else if (ap > 1) {
          if (s.terminal_side == 1 &&
              ((gap == 0 && ap <= bp - 1) || (gap == 1 && bp <= ap - 1)))
            return 'a';
          if (s.terminal_side == 3 &&
              ((gap == 0 && bp <= ap - 1) || (gap == 1 && ap <= bp - 2)))
            return 'a';
        } else if (ap == 1 && bp > 0) {
          if (gap == 0 || gap == 1) return 'a';
        }
      }
    } else {  // (b): followed by the subroad s2^{c_p}
      const int p = bnd.p;
      if (braid.c(p) >= 1) {
        const int ap = braid.a(p);
        const int bp = braid.b(p);
        if ((ap == 0 || bp == 0) && !s.nu_switch && gap == 1) return 'b';
        if ((ap == 0 || bp == 0) && s.nu_switch && gap == 0) return 'b';
        if (ap > 0 && bp > 0 && gap == 1) return 'b';
      }
    }
  }
  if (lc && negative && next_block != nullptr && cap) {
    const int gap = *cap - omega_k;
    if (next_block->kind == BlockKind::Two) {  // (c)
      if (gap == 0 || gap == 1) return 'c';
    } else {  // (d)
      const int c0 = braid.c(next_block->p - 1);
      const int c1 = braid.c(next_block->p);
      const int a0 = braid.a(next_block->p - 1);
      if (c0 > 2 && (gap == 0 || gap == 1)) return 'd';
      if (c0 == 1 && gap == 0) return 'd';
      if (c0 == 1 && gap > 0 && (a0 == c1 || a0 == c1 + 1 || a0 == c1 + 2)) return 'd';
      if (c0 == 2 && c1 > 2 && (xi_prev == c1 - 1 || xi_prev == c1 || xi_prev == c1 + 1))
        return 'd';
      if (c0 == 2 && c1 == 2 && (gap == 0 || gap == 1)) return 'd';
    }
  }
  {  // (e): an e-shaped 3-block in the gap around s
    const int gap_begin = s.end_pos;
    const int gap_end =
        idx + 1 < strings.size() ? strings[idx + 1].blocks.front().block.gen_begin
                                 : braid.length() + 1;
    const int first_begin = s.blocks.front().block.gen_begin;
    for (const auto& blk : decomp.blocks) {
      if (!detail::is_e_shaped(blk, braid)) continue;
      if (blk.gen_begin > gap_begin && blk.gen_end < gap_end) return 'e';
      if (idx == 0 && blk.gen_end < first_begin) return 'e';
    }
  }
  if (last.block.kind == BlockKind::Two && last.switch_type == 3 &&
      braid.b(last.block.p) == 2 && last.singular_data) {  // (f)
    const auto& sing = *last.singular_data;
    const int Mk = sing.M;
    const int ap = braid.a(last.block.p);
    const bool iso = sing.follower == SingularFollower::IsolatedSigma2;
    const bool noniso = sing.follower == SingularFollower::NonIsolatedSigma2;
    const bool odd_sign_ok =
        (positive && Mk % 4 == 1) || (negative && Mk % 4 == 3);
    const bool even_sign_ok =
        (positive && Mk % 4 == 2) || (negative && Mk % 4 == 0);
    if (iso && Mk % 2 == 1 && xi_prev - 5 == sing.omega_sing && odd_sign_ok) return 'f';
    if (noniso && Mk % 2 == 1 && xi_prev - 4 == sing.omega_sing && odd_sign_ok) return 'f';
    if (iso && Mk % 2 == 0 && ap + xi_prev - 4 == sing.omega_sing && even_sign_ok) return 'f';
    if (noniso && Mk % 2 == 0 && ap + xi_prev - 3 == sing.omega_sing && even_sign_ok) return 'f';
  }
  if (last.block.kind == BlockKind::Three && last.i_j == 1) {  // (g)
    // (g) defines its own singular subroad after B_k
    Span road{last.block.gen_end + 1, braid.length()};
    for (const auto& blk : decomp.blocks)
      if (blk.gen_begin > last.block.gen_end) {
        road.end = blk.gen_begin - 1;
        break;
      }
    const auto sing = singular_subroad(last.block, braid, road);
    const int Mk = sing.M;
    const bool iso = sing.follower == SingularFollower::IsolatedSigma2;
    const bool noniso = sing.follower == SingularFollower::NonIsolatedSigma2;
    const bool sign_ok = (positive && (Mk % 4 == 2 || Mk % 4 == 3)) ||
                         (negative && (Mk % 4 == 0 || Mk % 4 == 1));
    if (cap) {
      if (iso && *cap - sing.omega_sing == 1 && sign_ok) return 'g';
      if (noniso && Mk % 2 == 1 && *cap - sing.omega_sing == 0 && sign_ok) return 'g';
      if (noniso && Mk % 2 == 0 && *cap - sing.omega_sing >= 0) return 'g';
    }
    if (sing.span.empty()) {  // (g)(iv)
      const auto parts = parts_in_span(braid, road);
      const bool single_sigma1 = parts.size() == 1 && parts[0].letter == 1;
      const Block* after = nullptr;
      for (const auto& blk : decomp.blocks)
        if (blk.gen_begin == road.end + 1) after = &blk;
      if (single_sigma1 && after && after->kind == BlockKind::Three) return 'g';
      if (parts.size() == 2 && parts[0].letter == 1 && parts[1].letter == 3 &&
          parts[0].p == parts[1].p && parts[0].exp - 2 == parts[1].exp && parts[1].exp > 0 &&
          negative)
        return 'g';
    }
  }
  return std::nullopt;
}

struct WeakNormalityReport {
  bool weakly_normal = true;
  std::vector<AbnormalString> strings;  // with sign and terminal clause filled in
};

inline WeakNormalityReport is_weakly_normal(const PositiveBraid& braid) {
  WeakNormalityReport rep;
  rep.strings = abnormal_strings(braid);
  for (size_t i = 0; i < rep.strings.size(); ++i) {
    rep.strings[i].terminal_clause = terminal_clause(braid, rep.strings, i);
    if (rep.strings[i].terminal_clause) rep.weakly_normal = false;
  }
  return rep;
}

}  // namespace burau4
