#pragma once

// Exhaustive enumeration of the positive braids of a fixed length: a
// union-find over all 3^L words joined by single rewrite moves.  Class
// minima are the minimal forms; Delta-divisibility is read off per class.

#include <cstdint>
#include <numeric>
#include <unordered_set>
#include <vector>

#include "burau4/rewrite.hpp"
#include "burau4/word.hpp"

namespace burau4 {

class LengthClasses {
 public:
  explicit LengthClasses(int length) : len_(length) {
    uint64_t n = 1;
    for (int i = 0; i < len_; ++i) n *= 3;
    total_ = n;
    parent_.resize(total_);
    std::iota(parent_.begin(), parent_.end(), uint32_t{0});
    join_all();
    collect();
  }

  int length() const { return len_; }
  uint64_t word_count() const { return total_; }
  size_t class_count() const { return min_code_.size(); }

  // lexicographically minimal representative of each class
  const std::vector<uint32_t>& minima() const { return min_code_; }
  const std::vector<bool>& delta_divisible() const { return delta_div_; }

  PositiveWord decode(uint32_t code) const {
    PositiveWord w(static_cast<size_t>(len_));
    for (int i = len_ - 1; i >= 0; --i) {
      w[static_cast<size_t>(i)] = static_cast<uint8_t>(code % 3 + 1);
      code /= 3;
    }
    return w;
  }

  uint32_t encode(const PositiveWord& w) const {
    uint32_t code = 0;
    for (uint8_t x : w) code = code * 3 + (x - 1);
    return code;
  }

  uint32_t find_root(uint32_t x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  // minimal representative of the class of an arbitrary length-L word
  uint32_t class_minimum(const PositiveWord& w) const { return root_min_.at(find_root(encode(w))); }

  template <class F>
  void for_each_class(F&& f) const {  // f(min_word, delta_divisible)
    for (size_t i = 0; i < min_code_.size(); ++i) f(decode(min_code_[i]), delta_div_[i]);
  }

 private:
  uint32_t find(uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(uint32_t a, uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[a] = b;
  }

  void join_all() {
    std::vector<uint32_t> pw(static_cast<size_t>(len_) + 1);
    pw[0] = 1;
    for (int i = 1; i <= len_; ++i) pw[static_cast<size_t>(i)] = pw[static_cast<size_t>(i - 1)] * 3;
    std::vector<uint8_t> d(static_cast<size_t>(len_));
    for (uint64_t code = 0; code < total_; ++code) {
      uint32_t c = static_cast<uint32_t>(code);
      uint32_t x = c;
      for (int i = len_ - 1; i >= 0; --i) {
        d[static_cast<size_t>(i)] = static_cast<uint8_t>(x % 3);  // 0..2, first letter at d[0]
        x /= 3;
      }
      auto place = [&](int i) { return pw[static_cast<size_t>(len_ - 1 - i)]; };
      for (int i = 0; i + 1 < len_; ++i) {
        const int delta = static_cast<int>(d[static_cast<size_t>(i)]) -
                          static_cast<int>(d[static_cast<size_t>(i + 1)]);
        if (delta == 2 || delta == -2) {
          const uint32_t other =
              c - d[static_cast<size_t>(i)] * place(i) - d[static_cast<size_t>(i + 1)] * place(i + 1) +
              d[static_cast<size_t>(i + 1)] * place(i) + d[static_cast<size_t>(i)] * place(i + 1);
          unite(c, other);
        }
      }
      for (int i = 0; i + 2 < len_; ++i) {
        const int delta = static_cast<int>(d[static_cast<size_t>(i)]) -
                          static_cast<int>(d[static_cast<size_t>(i + 1)]);
        if ((delta == 1 || delta == -1) && d[static_cast<size_t>(i)] == d[static_cast<size_t>(i + 2)]) {
          // aba -> bab
          const uint32_t a = d[static_cast<size_t>(i)];
          const uint32_t b = d[static_cast<size_t>(i + 1)];
          const uint32_t other = c + (b - a) * place(i) + (a - b) * place(i + 1) + (b - a) * place(i + 2);
          unite(c, other);
        }
      }
    }
  }

  void collect() {
    std::vector<uint32_t> root_min(total_, UINT32_MAX);
    std::vector<uint8_t> root_delta(total_, 0);
    // Delta prefix codes (6 leading letters)
    std::unordered_set<uint32_t> delta_codes;
    if (len_ >= 6) {
      for (const auto& w : delta_words()) {
        uint32_t code = 0;
        for (uint8_t x : w) code = code * 3 + (x - 1);
        delta_codes.insert(code);
      }
    }
    uint32_t tail = 1;
    for (int i = 0; i < len_ - 6; ++i) tail *= 3;
    for (uint64_t code = 0; code < total_; ++code) {
      const uint32_t c = static_cast<uint32_t>(code);
      const uint32_t r = find(c);
      if (c < root_min[r]) root_min[r] = c;
      if (len_ >= 6 && delta_codes.count(c / tail)) root_delta[r] = 1;
    }
    for (uint64_t code = 0; code < total_; ++code) {
      const uint32_t c = static_cast<uint32_t>(code);
      if (find(c) == c) {
        min_code_.push_back(root_min[c]);
        delta_div_.push_back(root_delta[c] != 0);
      }
    }
    std::sort(min_code_.begin(), min_code_.end());
    // re-align delta flags with the sorted minima
    std::vector<bool> flags(min_code_.size());
    for (size_t i = 0; i < min_code_.size(); ++i)
      flags[i] = root_delta[find(min_code_[i])] != 0;
    delta_div_ = std::move(flags);
    root_min_.assign(root_min.begin(), root_min.end());
  }

  int len_;
  uint64_t total_ = 1;
  std::vector<uint32_t> parent_;
  std::vector<uint32_t> min_code_;
  std::vector<bool> delta_div_;
  std::vector<uint32_t> root_min_;
};

}  // namespace burau4
