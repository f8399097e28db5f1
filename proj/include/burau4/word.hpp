#pragma once

// Braid words in the Artin generators of B4 and the text grammar for them.
// Tokens are optional-signed integers 1..3 with optional ^n repetition,
// whitespace-separated; -i means the inverse of generator i.

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace burau4 {

struct Generator {
  int index = 1;  // in {1,2,3}
  bool inverse = false;

  friend bool operator==(const Generator&, const Generator&) = default;
};

using BraidWord = std::vector<Generator>;
using PositiveWord = std::vector<uint8_t>;  // letters in {1,2,3}

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, size_t offset)
      : std::runtime_error(msg + " at byte " + std::to_string(offset)), offset_(offset) {}
  size_t offset() const { return offset_; }

 private:
  size_t offset_;
};

inline BraidWord parse_braid_word(const std::string& text) {
  BraidWord out;
  size_t i = 0;
  const size_t n = text.size();
  while (i < n) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    const size_t tok = i;
    bool inverse = false;
    if (text[i] == '-') {
      inverse = true;
      ++i;
    }
    if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw ParseError("expected generator index", tok);
    long idx = 0;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
      idx = idx * 10 + (text[i] - '0');
      if (idx > 1000) throw ParseError("generator index out of range", tok);
      ++i;
    }
    if (idx < 1 || idx > 3) throw ParseError("generator index out of range", tok);
    long rep = 1;
    if (i < n && text[i] == '^') {
      const size_t caret = i++;
      if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("expected exponent after ^", caret);
      rep = 0;
      while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
        rep = rep * 10 + (text[i] - '0');
        if (rep > 100000) throw ParseError("exponent too large", caret);
        ++i;
      }
      if (rep < 1) throw ParseError("exponent must be positive", caret);
    }
    if (i < n && !std::isspace(static_cast<unsigned char>(text[i])))
      throw ParseError("malformed token", i);
    for (long r = 0; r < rep; ++r) out.push_back(Generator{static_cast<int>(idx), inverse});
  }
  return out;
}

inline std::string word_str(const BraidWord& w) {
  std::string s;
  for (const auto& g : w) {
    if (!s.empty()) s += ' ';
    if (g.inverse) s += '-';
    s += static_cast<char>('0' + g.index);
  }
  return s;
}

inline std::string word_str(const PositiveWord& w) {
  std::string s;
  for (uint8_t x : w) {
    if (!s.empty()) s += ' ';
    s += static_cast<char>('0' + x);
  }
  return s;
}

inline bool is_positive(const BraidWord& w) {
  for (const auto& g : w)
    if (g.inverse) return false;
  return true;
}

inline PositiveWord positive_word(const BraidWord& w) {
  PositiveWord out;
  out.reserve(w.size());
  for (const auto& g : w) {
    if (g.inverse) throw std::invalid_argument("word contains inverse letters");
    out.push_back(static_cast<uint8_t>(g.index));
  }
  return out;
}

inline BraidWord as_braid_word(const PositiveWord& w) {
  BraidWord out;
  out.reserve(w.size());
  for (uint8_t x : w) out.push_back(Generator{x, false});
  return out;
}

inline BraidWord free_reduce(const BraidWord& w) {
  BraidWord out;
  for (const auto& g : w) {
    if (!out.empty() && out.back().index == g.index && out.back().inverse != g.inverse)
      out.pop_back();
    else
      out.push_back(g);
  }
  return out;
}

inline int exponent_sum(const BraidWord& w) {
  int e = 0;
  for (const auto& g : w) e += g.inverse ? -1 : 1;
  return e;
}

// the index-flip automorphism i -> 4-i (conjugation by Delta)
inline PositiveWord flipped(const PositiveWord& w) {
  PositiveWord out;
  out.reserve(w.size());
  for (uint8_t x : w) out.push_back(static_cast<uint8_t>(4 - x));
  return out;
}

inline const PositiveWord& delta_word() {
  static const PositiveWord d{1, 2, 3, 1, 2, 1};
  return d;
}

}  // namespace burau4
