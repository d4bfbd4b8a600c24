#include "gdd/verify.hpp"

#include <stdexcept>

#include "gdd/orbit.hpp"

namespace gdd {

PairLedger::PairLedger(Point v) : v_(v) {
  if (v < 0) throw std::invalid_argument("negative point count");
  counts_.assign(static_cast<std::size_t>(v) * (v - 1) / 2, 0);
}

std::size_t PairLedger::index(Point a, Point b) const {
  if (a > b) std::swap(a, b);
  if (a < 0 || b >= v_ || a == b) throw std::out_of_range("bad pair");
  return static_cast<std::size_t>(b) * (b - 1) / 2 + a;
}

std::uint32_t PairLedger::add(Point a, Point b) {
  auto& c = counts_[index(a, b)];
  if (c < 255) ++c;
  return c;
}

void PairLedger::remove(Point a, Point b) {
  auto& c = counts_[index(a, b)];
  if (c == 0 || c == 255) throw std::logic_error("ledger remove without matching add");
  --c;
}

std::uint32_t PairLedger::count(Point a, Point b) const {
  return counts_[index(a, b)];
}

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::repeated_point: return "RepeatedPoint";
    case ViolationKind::same_group_pair: return "SameGroupPair";
    case ViolationKind::pair_duplicated: return "PairDuplicated";
    case ViolationKind::pair_uncovered: return "PairUncovered";
    case ViolationKind::block_count_mismatch: return "BlockCountMismatch";
  }
  return "?";
}

std::string to_string(const Violation& violation) {
  std::string out = to_string(violation.kind);
  switch (violation.kind) {
    case ViolationKind::repeated_point:
      out += " point " + std::to_string(violation.a) + " in block " + std::to_string(violation.block);
      break;
    case ViolationKind::same_group_pair:
    case ViolationKind::pair_duplicated:
      out += " {" + std::to_string(violation.a) + ", " + std::to_string(violation.b) +
             "} covered " + std::to_string(violation.count) + "x";
      break;
    case ViolationKind::pair_uncovered:
      out += " {" + std::to_string(violation.a) + ", " + std::to_string(violation.b) + "}";
      break;
    case ViolationKind::block_count_mismatch:
      out += " " + std::to_string(violation.count) + " blocks, expected " +
             std::to_string(violation.expected);
      break;
  }
  return out;
}

namespace {

void check_points_in_range(Point v, std::span<const Block> blocks) {
  for (const auto& blk : blocks)
    for (Point p : blk.points)
      if (p < 0 || p >= v)
        throw std::out_of_range("block point " + std::to_string(p) + " outside [0, v)");
}

// Repeated-point violations for one block, in ascending point order.
void report_repeats(const Block& blk, std::int64_t block_index, std::vector<Violation>& out) {
  for (int i = 1; i < 5; ++i) {
    if (blk.points[i] == blk.points[i - 1] &&
        (i == 1 || blk.points[i] != blk.points[i - 2])) {
      Violation rv;
      rv.kind = ViolationKind::repeated_point;
      rv.block = block_index;
      rv.a = blk.points[i];
      out.push_back(rv);
    }
  }
}

void append_block_count_check(const DesignSpec& spec, Report& report) {
  auto expected = expected_block_count(spec);
  if (!expected || *expected != report.block_count) {
    Violation v;
    v.kind = ViolationKind::block_count_mismatch;
    v.count = report.block_count;
    v.expected = expected.value_or(-1);
    report.violations.push_back(v);
    report.valid = false;
  }
}

}  // namespace

Report verify_blocks(Point v, std::span<const std::int32_t> group_ids,
                     std::span<const Block> blocks) {
  if (static_cast<Point>(group_ids.size()) != v)
    throw std::invalid_argument("group id table size does not match point count");
  check_points_in_range(v, blocks);

  Report report;
  report.block_count = static_cast<std::int64_t>(blocks.size());

  PairLedger ledger(v);
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    const auto& blk = blocks[bi];
    report_repeats(blk, static_cast<std::int64_t>(bi), report.violations);
    // one increment per unordered pair of distinct points in the block
    for (int i = 0; i < 5; ++i) {
      if (i > 0 && blk.points[i] == blk.points[i - 1]) continue;
      for (int k = i + 1; k < 5; ++k) {
        if (blk.points[k] == blk.points[k - 1]) continue;
        ledger.add(blk.points[i], blk.points[k]);
      }
    }
  }

  for (Point a = 0; a < v; ++a) {
    for (Point b = a + 1; b < v; ++b) {
      std::uint32_t c = ledger.count(a, b);
      Violation viol;
      viol.a = a;
      viol.b = b;
      viol.count = c;
      if (group_ids[a] == group_ids[b]) {
        if (c == 0) continue;
        viol.kind = ViolationKind::same_group_pair;
      } else if (c == 1) {
        continue;
      } else {
        viol.kind = c == 0 ? ViolationKind::pair_uncovered : ViolationKind::pair_duplicated;
      }
      report.violations.push_back(viol);
    }
  }

  report.valid = report.violations.empty();
  return report;
}

Report verify(const DesignSpec& spec) {
  const auto blocks = expand_design(spec);
  const auto gid = group_id_table(spec);
  Report report = verify_blocks(spec.v, gid, blocks);
  append_block_count_check(spec, report);
  return report;
}

Report naive_verify(const DesignSpec& spec) {
  const auto blocks = expand_design(spec);
  check_points_in_range(spec.v, blocks);

  Report report;
  report.block_count = static_cast<std::int64_t>(blocks.size());

  for (std::size_t bi = 0; bi < blocks.size(); ++bi)
    report_repeats(blocks[bi], static_cast<std::int64_t>(bi), report.violations);

  for (Point a = 0; a < spec.v; ++a) {
    const std::int32_t group_a = group_of(spec, a);
    for (Point b = a + 1; b < spec.v; ++b) {
      std::int64_t c = 0;
      for (const auto& blk : blocks)
        if (blk.contains(a) && blk.contains(b)) ++c;
      Violation viol;
      viol.a = a;
      viol.b = b;
      viol.count = c;
      if (group_a == group_of(spec, b)) {
        if (c == 0) continue;
        viol.kind = ViolationKind::same_group_pair;
      } else if (c == 1) {
        continue;
      } else {
        viol.kind = c == 0 ? ViolationKind::pair_uncovered : ViolationKind::pair_duplicated;
      }
      report.violations.push_back(viol);
    }
  }

  report.valid = report.violations.empty();
  append_block_count_check(spec, report);
  return report;
}

}  // namespace gdd
