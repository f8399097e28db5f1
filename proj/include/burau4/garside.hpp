#pragma once

// Garside normal form Delta^k sigma with sigma positive and Delta-indivisible.
// Inverse letters are cleared with s_i^{-1} = Delta^{-1} (Delta s_i^{-1}) and
// the flip automorphism; maximal Delta power is then extracted by the BFS
// oracle.

#include <array>
#include <optional>
#include <stdexcept>

#include "burau4/braid.hpp"
#include "burau4/rewrite.hpp"
#include "burau4/word.hpp"

namespace burau4 {

struct GarsideNormalForm {
  int k = 0;
  PositiveBraid tail;
};

namespace detail {

// positive word for Delta s_i^{-1}: a word of Delta ending with letter i,
// with that letter dropped
inline const std::array<PositiveWord, 4>& delta_over_generator() {
  static const std::array<PositiveWord, 4> table = [] {
    std::array<PositiveWord, 4> t{};
    for (int i = 1; i <= 3; ++i) {
      for (const auto& w : delta_words()) {
        if (w.back() == i) {
          t[static_cast<size_t>(i)] = PositiveWord(w.begin(), w.end() - 1);
          break;
        }
      }
    }
    return t;
  }();
  return table;
}

}  // namespace detail

// expresses w as Delta^k * (positive word); k <= 0
inline std::pair<int, PositiveWord> clear_inverses(const BraidWord& w) {
  int k = 0;
  PositiveWord tail;
  for (const auto& g : w) {
    if (!g.inverse) {
      tail.push_back(static_cast<uint8_t>(g.index));
    } else {
      // tail * s_i^{-1} = Delta^{-1} * flip(tail) * (Delta s_i^{-1})
      tail = flipped(tail);
      const auto& d = detail::delta_over_generator()[static_cast<size_t>(g.index)];
      tail.insert(tail.end(), d.begin(), d.end());
      k -= 1;
    }
  }
  return {k, std::move(tail)};
}

inline bool delta_divides(const PositiveBraid& p, size_t max_states = kDefaultBfsBudget) {
  return delta_divides_word(p.word(), max_states);
}

inline GarsideNormalForm garside_normal_form(const BraidWord& input,
                                             size_t max_states = kDefaultBfsBudget) {
  auto [k, w] = clear_inverses(free_reduce(input));
  PositiveWord m = minimal_word(w, max_states);
  while (true) {
    auto rest = strip_delta(m, max_states);
    if (!rest) break;
    k += 1;
    m = minimal_word(*rest, max_states);
  }
  return GarsideNormalForm{k, PositiveBraid::pack(m)};
}

inline GarsideNormalForm garside_normal_form(const PositiveWord& w,
                                             size_t max_states = kDefaultBfsBudget) {
  return garside_normal_form(as_braid_word(w), max_states);
}

// reassemble Delta^k * tail as a braid word (k of either sign)
inline BraidWord garside_word(const GarsideNormalForm& g) {
  BraidWord w;
  const auto& d = delta_word();
  if (g.k >= 0) {
    for (int i = 0; i < g.k; ++i)
      for (uint8_t x : d) w.push_back(Generator{x, false});
  } else {
    for (int i = 0; i < -g.k; ++i)
      for (auto it = d.rbegin(); it != d.rend(); ++it) w.push_back(Generator{*it, true});
  }
  for (uint8_t x : g.tail.word()) w.push_back(Generator{x, false});
  return w;
}

}  // namespace burau4
