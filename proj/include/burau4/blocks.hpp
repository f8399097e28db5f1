#pragma once

// Block-road decomposition of a minimal form: 2-blocks s1^a s3^b s2 s1^a',
// 3-blocks s2^c s3 s2^c', and the maximal block-free roads between them.
// Blocks are detected left to right; uniqueness is regression-tested, not
// assumed.

#include <optional>
#include <stdexcept>
#include <vector>

#include "burau4/braid.hpp"

namespace burau4 {

enum class BlockKind { Two, Three };
enum class BlockClass { Initial, Singular, Generic };

struct Block {
  BlockKind kind = BlockKind::Two;
  int p = 0;          // anchor syllable: s1^{a_p}..s2 s1^{a_{p+1}} or s2^{c_{p-1}} s3 s2^{c_p}
  int gen_begin = 0;  // 1-based inclusive generator span
  int gen_end = 0;
  BlockClass cls = BlockClass::Generic;

  friend bool operator==(const Block&, const Block&) = default;
};

struct Road {
  int gen_begin = 1;  // 1-based inclusive; empty when gen_begin > gen_end
  int gen_end = 0;

  bool empty() const { return gen_begin > gen_end; }
  int length() const { return empty() ? 0 : gen_end - gen_begin + 1; }

  friend bool operator==(const Road&, const Road&) = default;
};

// alternating B1 R1 B2 R2 ... Bk Rk with B1 and/or Rk possibly empty
struct BlockRoadDecomposition {
  std::vector<Block> blocks;
  std::vector<Road> roads;  // roads[0] precedes blocks[0]; roads[i] follows blocks[i-1]
};

inline BlockClass classify_block(const Block& blk, const PositiveBraid& braid) {
  if (blk.kind == BlockKind::Two) {
    const int p = blk.p;
    if (p == 1 && braid.b(1) == 0) return BlockClass::Initial;
    if (braid.b(p) == 1) return BlockClass::Singular;
    return BlockClass::Generic;
  }
  const int p = blk.p;
  if (braid.c(p) == 1 && braid.a(p + 1) > 0) return BlockClass::Singular;
  return BlockClass::Generic;
}

inline BlockRoadDecomposition block_road_decomposition(const PositiveBraid& braid) {
  BlockRoadDecomposition out;
  const int n = braid.count();
  int cursor = 1;  // next unconsumed generator position
  auto flush_road = [&](int upto) {  // road covering [cursor, upto]
    out.roads.push_back(Road{cursor, upto});
    cursor = upto + 1;
  };
  auto take_block = [&](Block blk) {
    flush_road(blk.gen_begin - 1);
    blk.cls = classify_block(blk, braid);
    out.blocks.push_back(blk);
    cursor = blk.gen_end + 1;
  };
  for (int p = 1; p <= n; ++p) {
    // 3-block anchored at p spans c_{p-1} .. c_p
    if (p >= 2 && braid.a(p) == 0 && braid.b(p) == 1 && braid.c(p - 1) >= 1 && braid.c(p) >= 1) {
      const int begin = braid.c_begin(p - 1);
      if (begin >= cursor) take_block(Block{BlockKind::Three, p, begin, braid.c_end(p)});
    }
    // 2-block anchored at p spans a_p .. a_{p+1}
    if (braid.c(p) == 1 && braid.a(p) > 0 && braid.a(p + 1) > 0) {
      const int begin = braid.a_begin(p);
      if (begin >= cursor) take_block(Block{BlockKind::Two, p, begin, braid.a_end(p + 1)});
    }
  }
  flush_road(braid.length());
  return out;
}

// Normality of a non-initial block (exponent constraints plus context).
inline bool is_normal_block(const Block& blk, const PositiveBraid& braid) {
  if (blk.cls == BlockClass::Initial) throw std::invalid_argument("initial block has no normality");
  if (blk.kind == BlockKind::Two) {
    const int p = blk.p;
    const int ap = braid.a(p);
    const int bp = braid.b(p);
    const bool constrained = (ap >= bp + 1) || (ap == 1 && bp == 1);
    return !(constrained && braid.a(p + 1) == 2);
  }
  const int p = blk.p;
  if (blk.cls == BlockClass::Singular) return false;
  if (braid.c(p) == 2) return false;
  if (braid.a(p - 1) + 1 >= braid.c(p) && braid.c(p - 1) == 1) return false;
  return true;
}

struct NormalityReport {
  bool normal = true;
  std::vector<Block> abnormal_blocks;
};

inline NormalityReport is_normal_braid(const PositiveBraid& braid) {
  NormalityReport out;
  for (const auto& blk : block_road_decomposition(braid).blocks) {
    if (blk.cls == BlockClass::Initial) continue;
    if (!is_normal_block(blk, braid)) {
      out.normal = false;
      out.abnormal_blocks.push_back(blk);
    }
  }
  return out;
}

}  // namespace burau4
