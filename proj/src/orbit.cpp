#include "gdd/orbit.hpp"

#include <stdexcept>

namespace gdd {

Point apply_action(std::span<const ActionSegment> actions, std::int64_t j, Point x) {
  for (const auto& act : actions) {
    if (act.lo <= x && x < act.lo + act.len) {
      std::int64_t offset = (x - act.lo + static_cast<std::int64_t>(act.step) * j) % act.len;
      return act.lo + static_cast<Point>(offset);
    }
  }
  throw std::invalid_argument("point " + std::to_string(x) + " not covered by any action segment");
}

Block map_block(std::span<const ActionSegment> actions, std::int64_t j, const Block& b) {
  std::array<Point, 5> image;
  for (int i = 0; i < 5; ++i) image[i] = apply_action(actions, j, b.points[i]);
  Block out = Block::of(image);

  int in_distinct = 1, out_distinct = 1;
  for (int i = 1; i < 5; ++i) {
    if (b.points[i] != b.points[i - 1]) ++in_distinct;
    if (out.points[i] != out.points[i - 1]) ++out_distinct;
  }
  if (out_distinct < in_distinct)
    throw std::runtime_error("mapping collapsed distinct block points at j=" + std::to_string(j));
  return out;
}

std::vector<Block> expand_design(const DesignSpec& spec) {
  std::size_t total = 0;
  for (const auto& orbit : spec.orbits)
    total += orbit.base_blocks.size() * static_cast<std::size_t>(orbit.j_max);

  std::vector<Block> blocks;
  blocks.reserve(total);
  for (const auto& orbit : spec.orbits)
    for (const auto& base : orbit.base_blocks)
      for (std::int32_t j = 0; j < orbit.j_max; ++j)
        blocks.push_back(map_block(orbit.actions, j, base));
  return blocks;
}

std::int32_t group_of(const DesignSpec& spec, Point x) {
  if (x < 0 || x >= spec.v) throw std::out_of_range("point " + std::to_string(x) + " outside [0, v)");
  std::int32_t base = 0;
  for (const auto& seg : spec.grouping) {
    if (seg.lo <= x && x < seg.lo + seg.len) {
      if (seg.scheme == Scheme::residues) return base + (x - seg.lo) % seg.modulus;
      return base;
    }
    base += seg.group_count();
  }
  throw std::out_of_range("point " + std::to_string(x) + " not covered by any grouping segment");
}

std::int32_t group_count(const DesignSpec& spec) {
  std::int32_t n = 0;
  for (const auto& seg : spec.grouping) n += seg.group_count();
  return n;
}

std::vector<std::int32_t> group_id_table(const DesignSpec& spec) {
  std::vector<std::int32_t> table(spec.v);
  for (Point x = 0; x < spec.v; ++x) table[x] = group_of(spec, x);
  return table;
}

std::vector<std::vector<Point>> group_members(const DesignSpec& spec) {
  std::vector<std::vector<Point>> groups(group_count(spec));
  for (Point x = 0; x < spec.v; ++x) groups[group_of(spec, x)].push_back(x);
  return groups;
}

}  // namespace gdd
