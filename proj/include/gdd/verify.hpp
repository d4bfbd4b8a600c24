#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gdd/design.hpp"

namespace gdd {

/// Per-pair coverage counters over all unordered point pairs, triangular
/// layout: pair {a,b} with a < b sits at b(b-1)/2 + a. Counters saturate
/// at 255.
class PairLedger {
 public:
  explicit PairLedger(Point v);

  Point points() const { return v_; }

  /// Returns the count after the increment.
  std::uint32_t add(Point a, Point b);
  /// Undo of a prior add. Must not be called on a saturated counter.
  void remove(Point a, Point b);
  std::uint32_t count(Point a, Point b) const;

  bool operator==(const PairLedger&) const = default;

 private:
  std::size_t index(Point a, Point b) const;

  Point v_ = 0;
  std::vector<std::uint8_t> counts_;
};

enum class ViolationKind {
  repeated_point,
  same_group_pair,
  pair_duplicated,
  pair_uncovered,
  block_count_mismatch,
};

const char* to_string(ViolationKind kind);

/// One rule violation. Field use depends on kind:
///   repeated_point       block = block index, a = the repeated point
///   same_group_pair      a,b = the pair, count = coverage count
///   pair_duplicated      a,b = the pair, count = coverage count (>= 2)
///   pair_uncovered       a,b = the pair
///   block_count_mismatch count = actual blocks, expected = required blocks
struct Violation {
  ViolationKind kind{};
  std::int64_t block = -1;
  Point a = -1;
  Point b = -1;
  std::int64_t count = 0;
  std::int64_t expected = -1;

  auto operator<=>(const Violation&) const = default;
};

std::string to_string(const Violation& violation);

struct Report {
  bool valid = false;
  std::vector<Violation> violations;
  std::int64_t block_count = 0;
};

/// Checks an explicit block list against the grouping given by group_ids
/// (one id per point). Reports every violation: repeated points per block,
/// then for each unordered pair in (a,b) order a same-group pair with
/// nonzero coverage, a duplicated cross-group pair, or an uncovered
/// cross-group pair. Throws std::out_of_range for block points outside
/// [0, v) -- malformed input, not a design violation.
Report verify_blocks(Point v, std::span<const std::int32_t> group_ids,
                     std::span<const Block> blocks);

/// Expands the design and checks the result; also cross-checks the block
/// count against expected_block_count.
Report verify(const DesignSpec& spec);

/// Independent oracle with the same verdict contract as verify, computed by
/// the plain O(v^2 b) scan: per unordered pair, count containing blocks by
/// direct membership tests. Shares no counting machinery with verify_blocks.
Report naive_verify(const DesignSpec& spec);

}  // namespace gdd
