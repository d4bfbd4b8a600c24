#include "gdd/design.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "gdd/orbit.hpp"

namespace gdd {

Block Block::of(std::array<Point, 5> pts) {
  std::sort(pts.begin(), pts.end());
  return Block{pts};
}

std::string GddType::to_string() const {
  std::string out;
  for (const auto& [size, count] : parts) {
    if (!out.empty()) out += ' ';
    out += std::to_string(size) + '^' + std::to_string(count);
  }
  return out;
}

std::optional<GddType> GddType::parse(const std::string& name) {
  std::map<std::int32_t, std::int64_t> ms;
  std::size_t i = 0;
  while (i < name.size()) {
    while (i < name.size() && name[i] == ' ') ++i;
    if (i == name.size()) break;
    std::size_t caret = name.find('^', i);
    std::size_t end = name.find(' ', i);
    if (end == std::string::npos) end = name.size();
    if (caret == std::string::npos || caret >= end || caret == i || caret + 1 == end)
      return std::nullopt;
    for (std::size_t k = i; k < end; ++k)
      if (k != caret && !std::isdigit(static_cast<unsigned char>(name[k])))
        return std::nullopt;
    std::int32_t size = std::stoi(name.substr(i, caret - i));
    std::int32_t count = std::stoi(name.substr(caret + 1, end - caret - 1));
    if (size < 1 || count < 1) return std::nullopt;
    ms[size] += count;
    i = end;
  }
  if (ms.empty()) return std::nullopt;
  GddType type;
  for (auto it = ms.rbegin(); it != ms.rend(); ++it)
    type.parts.emplace_back(it->first, static_cast<std::int32_t>(it->second));
  return type;
}

GddType gdd_type_of(const DesignSpec& spec) {
  std::map<std::int32_t, std::int32_t> ms;
  for (const auto& seg : spec.grouping) ms[seg.group_size()] += seg.group_count();
  GddType type;
  for (auto it = ms.rbegin(); it != ms.rend(); ++it)
    type.parts.emplace_back(it->first, it->second);
  return type;
}

namespace {

std::int64_t pairs_of(std::int64_t n) { return n * (n - 1) / 2; }

// Cross-group pair count: all pairs minus within-group pairs.
std::int64_t cross_pair_count(Point v, const std::vector<GroupingSegment>& grouping) {
  std::int64_t cross = pairs_of(v);
  for (const auto& seg : grouping)
    cross -= static_cast<std::int64_t>(seg.group_count()) * pairs_of(seg.group_size());
  return cross;
}

}  // namespace

std::optional<std::int64_t> expected_block_count(Point v,
                                                 const std::vector<GroupingSegment>& grouping) {
  std::int64_t cross = cross_pair_count(v, grouping);
  if (cross % 10 != 0) return std::nullopt;
  return cross / 10;
}

std::optional<std::int64_t> expected_block_count(const DesignSpec& spec) {
  return expected_block_count(spec.v, spec.grouping);
}

std::optional<std::int64_t> replication_number(const DesignSpec& spec, Point p) {
  if (p < 0 || p >= spec.v) throw std::out_of_range("point " + std::to_string(p) + " outside [0, v)");
  std::int64_t group_size = 0;
  for (const auto& seg : spec.grouping)
    if (seg.lo <= p && p < seg.lo + seg.len) group_size = seg.group_size();
  std::int64_t cross = spec.v - group_size;
  if (cross % 4 != 0) return std::nullopt;
  return cross / 4;
}

namespace {

void check_grouping(const DesignSpec& spec, std::vector<Defect>& defects) {
  Point cursor = 0;
  for (std::size_t i = 0; i < spec.grouping.size(); ++i) {
    const auto& seg = spec.grouping[i];
    const auto idx = static_cast<std::int32_t>(i);
    if (seg.len < 1) {
      defects.push_back({"grouping segment has non-positive length", idx});
      return;
    }
    if (seg.lo != cursor) {
      defects.push_back({"grouping does not cover point " + std::to_string(cursor), idx});
      return;
    }
    if (seg.scheme == Scheme::residues) {
      if (seg.modulus < 1) {
        defects.push_back({"residue modulus must be positive", idx});
        return;
      }
      if (seg.len % seg.modulus != 0) {
        defects.push_back({std::to_string(seg.modulus) + " does not divide " +
                               std::to_string(seg.len),
                           idx});
        return;
      }
    }
    cursor += seg.len;
  }
  if (cursor != spec.v)
    defects.push_back({"grouping does not cover point " + std::to_string(std::min(cursor, spec.v - 1))});
}

void check_actions(const DesignSpec& spec, std::size_t orbit_idx, std::vector<Defect>& defects) {
  const auto& orbit = spec.orbits[orbit_idx];
  const auto oi = static_cast<std::int32_t>(orbit_idx);
  if (orbit.j_max < 1) {
    defects.push_back({"orbit j_max must be positive", -1, oi});
    return;
  }
  Point cursor = 0;
  for (const auto& act : orbit.actions) {
    if (act.len < 1) {
      defects.push_back({"action segment has non-positive length", -1, oi});
      return;
    }
    if (act.lo != cursor) {
      defects.push_back({"actions do not cover point " + std::to_string(cursor), -1, oi});
      return;
    }
    if (act.step == 0 && act.len != 1) {
      defects.push_back({"zero step on a segment longer than one point", -1, oi});
      return;
    }
    if (act.step < 0) {
      defects.push_back({"negative action step", -1, oi});
      return;
    }
    cursor += act.len;
  }
  if (cursor != spec.v)
    defects.push_back({"actions do not cover point " + std::to_string(std::min(cursor, spec.v - 1)), -1, oi});
}

void check_blocks(const DesignSpec& spec, std::size_t orbit_idx, std::vector<Defect>& defects) {
  const auto& orbit = spec.orbits[orbit_idx];
  const auto oi = static_cast<std::int32_t>(orbit_idx);
  for (std::size_t b = 0; b < orbit.base_blocks.size(); ++b) {
    const auto& blk = orbit.base_blocks[b];
    const auto bi = static_cast<std::int32_t>(b);
    for (Point p : blk.points)
      if (p < 0 || p >= spec.v) {
        defects.push_back({"block point " + std::to_string(p) + " outside [0, v)", -1, oi, bi});
        break;
      }
    for (int k = 0; k + 1 < 5; ++k)
      if (blk.points[k] == blk.points[k + 1]) {
        defects.push_back({"repeated point in base block", -1, oi, bi});
        break;
      }
  }
}

// The induced permutation at every j must map each group onto a group.
void check_partition_preservation(const DesignSpec& spec, std::size_t orbit_idx,
                                  std::vector<Defect>& defects) {
  const auto& orbit = spec.orbits[orbit_idx];
  const auto oi = static_cast<std::int32_t>(orbit_idx);
  const auto gid = group_id_table(spec);
  const auto n_groups = group_count(spec);
  std::vector<std::int32_t> group_size(n_groups, 0);
  for (Point x = 0; x < spec.v; ++x) ++group_size[gid[x]];

  std::vector<char> seen(spec.v);
  std::vector<std::int32_t> target(n_groups);
  for (std::int32_t j = 0; j < orbit.j_max; ++j) {
    std::fill(seen.begin(), seen.end(), 0);
    std::fill(target.begin(), target.end(), -1);
    for (Point x = 0; x < spec.v; ++x) {
      Point y = apply_action(orbit.actions, j, x);
      if (y < 0 || y >= spec.v || seen[y]) {
        defects.push_back({"mapping is not a bijection", -1, oi, -1, j});
        return;
      }
      seen[y] = 1;
      std::int32_t g = gid[x];
      if (target[g] == -1) {
        target[g] = gid[y];
      } else if (target[g] != gid[y]) {
        defects.push_back({"group " + std::to_string(g) + " is not mapped onto a group",
                           -1, oi, -1, j});
        return;
      }
    }
    for (std::int32_t g = 0; g < n_groups; ++g)
      if (group_size[g] != group_size[target[g]]) {
        defects.push_back({"group " + std::to_string(g) + " is not mapped onto a group",
                           -1, oi, -1, j});
        return;
      }
  }
}

}  // namespace

std::vector<Defect> validate_spec(const DesignSpec& spec) {
  std::vector<Defect> defects;
  if (spec.v < 1) {
    defects.push_back({"point count must be positive"});
    return defects;
  }
  check_grouping(spec, defects);
  if (!defects.empty()) return defects;  // later checks assume a sane grouping

  if (auto declared = GddType::parse(spec.name)) {
    if (*declared != gdd_type_of(spec))
      defects.push_back({"declared name \"" + spec.name + "\" does not match derived type " +
                         gdd_type_of(spec).to_string()});
  } else {
    defects.push_back({"design name \"" + spec.name + "\" is not a type label"});
  }

  for (std::size_t i = 0; i < spec.orbits.size(); ++i) {
    std::size_t before = defects.size();
    check_actions(spec, i, defects);
    check_blocks(spec, i, defects);
    if (defects.size() == before) check_partition_preservation(spec, i, defects);
  }
  return defects;
}

}  // namespace gdd
