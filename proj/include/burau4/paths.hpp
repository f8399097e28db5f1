#pragma once

// Sigma-paths: walks on the line graph 1-2-3 compatible with a minimal form,
// their signed monomial weights, the five kinds of distinguished pairs with
// the cancelling involution, good/bad classification at subproduct
// boundaries, and the weighted-count summaries.

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "burau4/braid.hpp"
#include "burau4/laurent.hpp"
#include "burau4/rewrite.hpp"

namespace burau4 {

struct SigmaPath {
  std::vector<uint8_t> v;  // vertices v[0..L]

  int start() const { return v.front(); }
  int end() const { return v.back(); }
  friend bool operator==(const SigmaPath&, const SigmaPath&) = default;
};

struct PathWeight {
  int sign = 1;
  int degree = 0;

  friend bool operator==(const PathWeight&, const PathWeight&) = default;
};

enum class Endpoint { One = 1, Two = 2, Three = 3, OneOrThree = 13 };

inline bool endpoint_matches(Endpoint s, int vertex) {
  switch (s) {
    case Endpoint::One: return vertex == 1;
    case Endpoint::Two: return vertex == 2;
    case Endpoint::Three: return vertex == 3;
    case Endpoint::OneOrThree: return vertex == 1 || vertex == 3;
  }
  return false;
}

constexpr size_t kDefaultPathBudget = 20'000'000;

inline PathWeight path_weight(const PositiveBraid& braid, const SigmaPath& x) {
  const PositiveWord w = braid.word();
  if (x.v.size() != w.size() + 1) throw std::invalid_argument("path length mismatch");
  PathWeight out;
  for (size_t k = 1; k <= w.size(); ++k) {
    const int i = w[k - 1];
    const int prev = x.v[k - 1];
    const int cur = x.v[k];
    if (cur == prev) {
      if (cur == i) ++out.degree;
    } else {
      if (cur != i || (prev != i - 1 && prev != i + 1))
        throw std::invalid_argument("invalid vertex change");
      if (prev == i + 1) {
        ++out.degree;
        out.sign = -out.sign;
      }
    }
  }
  return out;
}

template <class Int>
Laurent<Int> weight_poly(const PathWeight& w) {
  return Laurent<Int>::monomial(Int(w.sign), w.degree);
}

// visit every (r, s)-type path of the braid; the visitor may return false to
// stop enumeration
template <class F>
void for_each_path(const PositiveBraid& braid, int r, Endpoint s, F&& visit,
                   size_t budget = kDefaultPathBudget) {
  const PositiveWord w = braid.word();
  const size_t L = w.size();
  std::vector<uint8_t> v(L + 1);
  v[0] = static_cast<uint8_t>(r);
  size_t count = 0;
  bool stop = false;
  std::function<void(size_t)> rec = [&](size_t k) {
    if (stop) return;
    if (k == L) {
      if (endpoint_matches(s, v[L])) {
        if (++count > budget) throw BudgetExceeded("path enumeration exceeded budget");
        SigmaPath p{v};
        if (!visit(p)) stop = true;
      }
      return;
    }
    const int i = w[k];
    v[k + 1] = v[k];  // stay
    rec(k + 1);
    if (v[k] == i - 1 || v[k] == i + 1) {  // vertex change into i
      v[k + 1] = static_cast<uint8_t>(i);
      rec(k + 1);
    }
  };
  rec(0);
}

inline std::vector<SigmaPath> enumerate_paths(const PositiveBraid& braid, int r, Endpoint s,
                                              size_t budget = kDefaultPathBudget) {
  std::vector<SigmaPath> out;
  for_each_path(
      braid, r, s,
      [&](const SigmaPath& p) {
        out.push_back(p);
        return true;
      },
      budget);
  return out;
}

// weighted number of (r,s)-type paths, by dynamic programming over
// (position, vertex) with the step weights of the path model
template <class Int>
Laurent<Int> weighted_count(const PositiveBraid& braid, int r, Endpoint s) {
  using L = Laurent<Int>;
  const PositiveWord w = braid.word();
  std::array<L, 4> dp{};  // dp[v] over v in 1..3
  dp[static_cast<size_t>(r)] = L::constant(Int(1));
  for (uint8_t gi : w) {
    const int i = gi;
    std::array<L, 4> next{};
    for (int v = 1; v <= 3; ++v) {
      L stay = dp[static_cast<size_t>(v)];
      if (v == i) stay = stay.shifted(1);  // q
      next[static_cast<size_t>(v)] += stay;
    }
    if (i - 1 >= 1) next[static_cast<size_t>(i)] += dp[static_cast<size_t>(i - 1)];
    if (i + 1 <= 3) next[static_cast<size_t>(i)] += dp[static_cast<size_t>(i + 1)].times(Int(-1)).shifted(1);
    dp = std::move(next);
  }
  L out;
  for (int v = 1; v <= 3; ++v)
    if (endpoint_matches(s, v)) out += dp[static_cast<size_t>(v)];
  return out;
}

// --- distinguished pairs ---------------------------------------------------

enum class PairKind { Delta, Epsilon, Zeta, Eta, Theta };

struct DistinguishedPair {
  PairKind kind;
  SigmaPath partner;
  int k = 0;  // 1-based position of the anchoring last sigma2
  int p = 0;  // syllable index of the anchor
};

namespace detail {

// anchors: for each syllable p with c_p >= 1, the position of the last
// sigma2 plus the exponents needed by the pair frames
struct Anchor {
  int p;
  int k;
  int b_p;
  int c_p;
  int a_next;
  int b_next;
  int c_next;
};

inline std::vector<Anchor> pair_anchors(const PositiveBraid& braid) {
  std::vector<Anchor> out;
  // virtual anchor before the word: eta/theta pairs at the start of the braid
  // (Example 3.5 pairs the (2,s)-type paths of s1 s2 s1 this way)
  if (!braid.empty()) out.push_back(Anchor{0, 0, 0, 0, braid.a(1), braid.b(1), braid.c(1)});
  for (int p = 1; p <= braid.count(); ++p) {
    if (braid.c(p) < 1) continue;
    out.push_back(Anchor{p, braid.last_sigma2_pos(p), braid.b(p), braid.c(p), braid.a(p + 1),
                         braid.b(p + 1), braid.c(p + 1)});
  }
  return out;
}

inline bool run_equals(const SigmaPath& x, int from, int to, int value) {
  for (int j = from; j <= to; ++j)
    if (x.v[static_cast<size_t>(j)] != value) return false;
  return true;
}

}  // namespace detail

// the earliest distinguished pair containing x, if any
inline std::optional<DistinguishedPair> distinguished_partner(const PositiveBraid& braid,
                                                              const SigmaPath& x) {
  const int L = braid.length();
  auto at = [&](int j) { return static_cast<int>(x.v[static_cast<size_t>(j)]); };
  for (const auto& an : detail::pair_anchors(braid)) {
    const int k = an.k;
    const int a1 = an.a_next;
    const int b1 = an.b_next;
    // delta: v_{k-1} = 1 = v_{k+1}, members differ at v_k in {1,2}
    if (an.a_next > 0 && k + 1 <= L && at(k - 1) == 1 && at(k + 1) == 1 &&
        (at(k) == 1 || at(k) == 2)) {
      const int back = k - an.b_p - 2;
      const bool exception = an.c_p == 1 && back >= 0 && at(back) == 2;
      if (!exception) {
        SigmaPath partner = x;
        partner.v[static_cast<size_t>(k)] = static_cast<uint8_t>(at(k) == 1 ? 2 : 1);
        return DistinguishedPair{PairKind::Delta, std::move(partner), k, an.p};
      }
    }
    // epsilon: v_{k-1} = 3 = v_{k+a1+1}, run v_{k..k+a1} constant 2 or 3
    if (an.b_next > 0 && k + a1 + 1 <= L && at(k - 1) == 3 && at(k + a1 + 1) == 3) {
      for (int val : {2, 3}) {
        if (detail::run_equals(x, k, k + a1, val)) {
          SigmaPath partner = x;
          for (int j = k; j <= k + a1; ++j)
            partner.v[static_cast<size_t>(j)] = static_cast<uint8_t>(val == 2 ? 3 : 2);
          return DistinguishedPair{PairKind::Epsilon, std::move(partner), k, an.p};
        }
      }
    }
    // zeta: a_{p+1} = 1 with a 1->2 change at k; members differ at k+a1+b1
    if (an.c_next > 0 && a1 == 1 && at(k - 1) == 1 && at(k) == 2 && k + a1 + b1 + 1 <= L &&
        detail::run_equals(x, k, k + a1 + b1 - 1, 2) && at(k + a1 + b1 + 1) == 2 &&
        (at(k + a1 + b1) == 2 || at(k + a1 + b1) == 3)) {
      SigmaPath partner = x;
      partner.v[static_cast<size_t>(k + a1 + b1)] =
          static_cast<uint8_t>(at(k + a1 + b1) == 2 ? 3 : 2);
      return DistinguishedPair{PairKind::Zeta, std::move(partner), k, an.p};
    }
    // eta: run v_{k+a1..k+a1+b1} constant 1 or 2
    if (an.c_next > 0 && a1 >= 1 && (a1 > 1 || !(at(k - 1) == 1 && at(k) == 2)) &&
        k + a1 + b1 + 1 <= L && detail::run_equals(x, k, k + a1 - 1, 2) &&
        at(k + a1 + b1 + 1) == 2) {
      for (int val : {1, 2}) {
        if (detail::run_equals(x, k + a1, k + a1 + b1, val)) {
          SigmaPath partner = x;
          for (int j = k + a1; j <= k + a1 + b1; ++j)
            partner.v[static_cast<size_t>(j)] = static_cast<uint8_t>(val == 1 ? 2 : 1);
          return DistinguishedPair{PairKind::Eta, std::move(partner), k, an.p};
        }
      }
    }
    // theta: a_{p+1} = 0; members differ at k+b1
    if (an.c_next > 0 && a1 == 0 && b1 >= 1 && (b1 > 1 || !(at(k - 1) == 3 && at(k) == 2)) &&
        k + b1 + 1 <= L && detail::run_equals(x, k, k + b1 - 1, 2) && at(k + b1 + 1) == 2 &&
        (at(k + b1) == 2 || at(k + b1) == 3)) {
      SigmaPath partner = x;
      partner.v[static_cast<size_t>(k + b1)] = static_cast<uint8_t>(at(k + b1) == 2 ? 3 : 2);
      return DistinguishedPair{PairKind::Theta, std::move(partner), k, an.p};
    }
  }
  return std::nullopt;
}

inline bool is_admissible(const PositiveBraid& braid, const SigmaPath& x) {
  return !distinguished_partner(braid, x).has_value();
}

// weighted number of admissible (r,s)-type paths, by enumeration and the
// distinguished-pair filter
template <class Int>
Laurent<Int> admissible_weighted_count(const PositiveBraid& braid, int r, Endpoint s,
                                       size_t budget = kDefaultPathBudget) {
  Laurent<Int> out;
  for_each_path(
      braid, r, s,
      [&](const SigmaPath& p) {
        if (is_admissible(braid, p)) out += weight_poly<Int>(path_weight(braid, p));
        return true;
      },
      budget);
  return out;
}

// --- good/bad classification at subproduct boundaries ----------------------

struct PathClass {
  bool good = true;
  std::optional<int> switch_vertex;  // 1 or 3, for paths at 2-boundaries
};

// classifies an admissible path at a boundary of sigma; the 2-boundary case
// reads the next-syllable exponents from sigma
inline PathClass classify_path(const PositiveBraid& sigma, Boundary bnd, const SigmaPath& x) {
  const int plen = sigma.prefix_length(bnd);
  if (static_cast<int>(x.v.size()) != plen + 1)
    throw std::invalid_argument("path does not end at the boundary");
  auto at = [&](int j) { return static_cast<int>(x.v[static_cast<size_t>(j)]); };
  auto change_at = [&](int pos, int from, int to) {
    return pos >= 1 && pos <= plen && at(pos - 1) == from && at(pos) == to;
  };
  const int endv = at(plen);
  PathClass out;
  if (bnd.after_ab) {
    const int p = bnd.p;
    const int ap = sigma.a(p);
    const int bp = sigma.b(p);
    if (endv == 1) {
      out.good = !(ap >= 1 && change_at(sigma.a_end(p), 2, 1));
    } else if (endv == 3) {
      if (bp == 0 || ap > 1) {
        out.good = true;
      } else if (ap == 0) {
        out.good = !change_at(sigma.b_end(p), 2, 3);
      } else {  // ap == 1
        const bool sw12 =
            p >= 2 && sigma.c(p - 1) >= 1 && change_at(sigma.c_end(p - 1), 1, 2);
        out.good = !(sw12 && change_at(sigma.b_end(p), 2, 3));
      }
    } else {
      throw std::invalid_argument("path at a {1,3}-boundary must end at 1 or 3");
    }
  } else {
    if (endv != 2) throw std::invalid_argument("path at a 2-boundary must end at 2");
    const int p = bnd.p;  // next syllable
    const int ap = sigma.a(p);
    const int bp = sigma.b(p);
    if (p >= 2 && sigma.c(p - 1) >= 1) {
      const int last2 = sigma.c_end(p - 1);
      if (change_at(last2, 1, 2)) out.switch_vertex = 1;
      if (change_at(last2, 3, 2)) out.switch_vertex = 3;
    }
    out.good = !((ap > 0 && out.switch_vertex == 1) || (bp > 0 && out.switch_vertex == 3));
  }
  return out;
}

// --- weighted-count summaries (per-case field population) ------------------

template <class Int>
struct WeightSummary {
  bool boundary_is_two = false;
  int p = 0;
  int c_prev = 0;  // c_{p-1}; 0 when there is no previous syllable
  int a_p = 0;     // next-syllable exponents at 2-boundaries, own at {1,3}
  int b_p = 0;
  std::optional<Laurent<Int>> w_lambda, w_mu1, w_mu3, w_mu, w_nu, w_lambda1, w_lambda3;
};

template <class Int>
WeightSummary<Int> weight_summary(const PositiveBraid& sigma, Boundary bnd, int r,
                                  size_t budget = kDefaultPathBudget) {
  using L = Laurent<Int>;
  WeightSummary<Int> ws;
  ws.boundary_is_two = !bnd.after_ab;
  ws.p = bnd.p;
  ws.c_prev = bnd.p >= 2 ? sigma.c(bnd.p - 1) : 0;
  ws.a_p = sigma.a(bnd.p);
  ws.b_p = sigma.b(bnd.p);
  const PositiveBraid prefix = sigma.prefix(bnd);
  if (ws.boundary_is_two) {
    L no_change, sw1, sw3, all1, all3;
    for_each_path(
        prefix, r, Endpoint::Two,
        [&](const SigmaPath& x) {
          if (!is_admissible(prefix, x)) return true;
          const L w = weight_poly<Int>(path_weight(prefix, x));
          const PathClass cls = classify_path(sigma, bnd, x);
          if (!cls.switch_vertex)
            no_change += w;
          else if (*cls.switch_vertex == 1)
            sw1 += w;
          else
            sw3 += w;
          return true;
        },
        budget);
    for_each_path(
        prefix, r, Endpoint::OneOrThree,
        [&](const SigmaPath& x) {
          if (!is_admissible(prefix, x)) return true;
          const L w = weight_poly<Int>(path_weight(prefix, x));
          (x.end() == 1 ? all1 : all3) += w;
          return true;
        },
        budget);
    ws.w_mu1 = sw1;
    ws.w_mu3 = sw3;
    if (ws.c_prev >= 2 || ws.p <= 1) {
      ws.w_lambda = no_change;
      ws.w_lambda1 = no_change + sw3;
      ws.w_lambda3 = no_change + sw1;
    } else {
      // c_{p-1} = 1: w_lambda is the good count
      L good = no_change;
      if (ws.a_p == 0) good += sw1;
      if (ws.b_p == 0) good += sw3;
      ws.w_lambda = good;
    }
    if (ws.a_p == 0) {
      ws.w_mu = sw3;
      ws.w_nu = all1;
    } else if (ws.b_p == 0) {
      ws.w_mu = sw1;
      ws.w_nu = all3;
    }
  } else {
    L good1, bad1, good3, bad3;
    for_each_path(
        prefix, r, Endpoint::OneOrThree,
        [&](const SigmaPath& x) {
          if (!is_admissible(prefix, x)) return true;
          const L w = weight_poly<Int>(path_weight(prefix, x));
          const PathClass cls = classify_path(sigma, bnd, x);
          if (x.end() == 1)
            (cls.good ? good1 : bad1) += w;
          else
            (cls.good ? good3 : bad3) += w;
          return true;
        },
        budget);
    if (ws.a_p > 0 && ws.b_p > 0) {
      ws.w_lambda1 = good1;
      ws.w_mu1 = bad1;
      ws.w_lambda3 = good3;
      ws.w_mu3 = bad3;
    } else if (ws.a_p == 0) {
      ws.w_lambda = good3;
      ws.w_mu = bad3;
      ws.w_nu = good1 + bad1;
    } else {
      ws.w_lambda = good1;
      ws.w_mu = bad1;
      ws.w_nu = good3 + bad3;
    }
  }
  return ws;
}

}  // namespace burau4
