#pragma once

// Breadth-first closure over the same-length rewrite graph of positive words
// (relations 121=212, 232=323, 13=31). This is the desk-scale oracle used for
// positive equivalence, minimal forms and Delta-divisibility.

#include <algorithm>
#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "burau4/word.hpp"

namespace burau4 {

struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

constexpr size_t kDefaultBfsBudget = 5'000'000;

namespace detail {

inline std::string key_of(const PositiveWord& w) {
  return std::string(w.begin(), w.end());
}

inline PositiveWord word_of(const std::string& k) {
  return PositiveWord(k.begin(), k.end());
}

template <class F>
inline void for_each_neighbor(const PositiveWord& w, F&& f) {
  const size_t n = w.size();
  for (size_t i = 0; i + 1 < n; ++i) {
    const int d = static_cast<int>(w[i]) - static_cast<int>(w[i + 1]);
    if (d == 2 || d == -2) {  // 13 <-> 31
      PositiveWord v = w;
      std::swap(v[i], v[i + 1]);
      f(std::move(v));
    }
  }
  for (size_t i = 0; i + 2 < n; ++i) {
    const int d = static_cast<int>(w[i]) - static_cast<int>(w[i + 1]);
    if ((d == 1 || d == -1) && w[i] == w[i + 2]) {  // aba <-> bab
      PositiveWord v = w;
      v[i] = w[i + 1];
      v[i + 1] = w[i];
      v[i + 2] = w[i + 1];
      f(std::move(v));
    }
  }
}

}  // namespace detail

// Visits every word in the equivalence class of `start` exactly once.
// `visit` may return false to stop early (in which case bfs_class returns
// true).  Returns false if the state budget was hit before exhaustion.
template <class F>
inline bool bfs_class(const PositiveWord& start, size_t max_states, F&& visit) {
  std::unordered_set<std::string> seen;
  std::deque<std::string> queue;
  seen.insert(detail::key_of(start));
  queue.push_back(detail::key_of(start));
  if (!visit(start)) return true;
  while (!queue.empty()) {
    const PositiveWord w = detail::word_of(queue.front());
    queue.pop_front();
    bool stop = false;
    detail::for_each_neighbor(w, [&](PositiveWord v) {
      if (stop) return;
      auto [it, inserted] = seen.insert(detail::key_of(v));
      if (!inserted) return;
      if (seen.size() > max_states) throw BudgetExceeded("rewrite closure exceeded state budget");
      queue.push_back(*it);
      if (!visit(v)) stop = true;
    });
    if (stop) return true;
  }
  return true;
}

inline bool positive_equivalent(const PositiveWord& w1, const PositiveWord& w2,
                                size_t max_states = kDefaultBfsBudget) {
  if (w1.size() != w2.size()) return false;
  bool found = false;
  bfs_class(w1, max_states, [&](const PositiveWord& w) {
    if (w == w2) {
      found = true;
      return false;
    }
    return true;
  });
  return found;
}

inline bool positive_equivalent(const BraidWord& w1, const BraidWord& w2,
                                size_t max_states = kDefaultBfsBudget) {
  return positive_equivalent(positive_word(w1), positive_word(w2), max_states);
}

// lexicographically minimal representative of the class of w
inline PositiveWord minimal_word(const PositiveWord& w, size_t max_states = kDefaultBfsBudget) {
  PositiveWord best = w;
  bfs_class(w, max_states, [&](const PositiveWord& x) {
    if (x < best) best = x;
    return true;
  });
  return best;
}

// all words of Delta (computed once; 16 words)
inline const std::vector<PositiveWord>& delta_words() {
  static const std::vector<PositiveWord> words = [] {
    std::vector<PositiveWord> out;
    bfs_class(delta_word(), 100000, [&](const PositiveWord& w) {
      out.push_back(w);
      return true;
    });
    std::sort(out.begin(), out.end());
    return out;
  }();
  return words;
}

inline bool is_delta_prefix(const PositiveWord& w) {
  if (w.size() < 6) return false;
  PositiveWord p(w.begin(), w.begin() + 6);
  const auto& dw = delta_words();
  return std::binary_search(dw.begin(), dw.end(), p);
}

// true iff some same-length rewrite of w begins with a word of Delta
inline bool delta_divides_word(const PositiveWord& w, size_t max_states = kDefaultBfsBudget) {
  if (w.size() < 6) return false;
  bool found = false;
  bfs_class(w, max_states, [&](const PositiveWord& x) {
    if (is_delta_prefix(x)) {
      found = true;
      return false;
    }
    return true;
  });
  return found;
}

// if Delta divides w, returns a word for Delta^{-1} w; otherwise nullopt
inline std::optional<PositiveWord> strip_delta(const PositiveWord& w,
                                               size_t max_states = kDefaultBfsBudget) {
  if (w.size() < 6) return std::nullopt;
  std::optional<PositiveWord> rest;
  bfs_class(w, max_states, [&](const PositiveWord& x) {
    if (is_delta_prefix(x)) {
      rest = PositiveWord(x.begin() + 6, x.end());
      return false;
    }
    return true;
  });
  return rest;
}

}  // namespace burau4
