#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gdd {

using Point = std::int32_t;

/// Five point labels, kept sorted ascending.
struct Block {
  std::array<Point, 5> points{};

  static Block of(std::array<Point, 5> pts);

  bool contains(Point p) const {
    for (Point q : points) {
      if (q == p) return true;
      if (q > p) return false;
    }
    return false;
  }

  auto operator<=>(const Block&) const = default;
};

enum class Scheme { residues, whole };

/// A contiguous point range [lo, lo+len), grouped either as the residue
/// classes modulo m (m groups of size len/m) or as one whole group.
struct GroupingSegment {
  Point lo = 0;
  std::int32_t len = 0;
  Scheme scheme = Scheme::whole;
  std::int32_t modulus = 0;  // set iff scheme == residues

  std::int32_t group_count() const {
    return scheme == Scheme::residues ? modulus : 1;
  }
  std::int32_t group_size() const {
    return scheme == Scheme::residues ? len / modulus : len;
  }

  auto operator<=>(const GroupingSegment&) const = default;
};

/// x -> ((x - lo + step*j) mod len) + lo for lo <= x < lo+len.
/// Fixed points are len == 1, step == 0.
struct ActionSegment {
  Point lo = 0;
  std::int32_t len = 0;
  std::int32_t step = 0;

  auto operator<=>(const ActionSegment&) const = default;
};

/// Base blocks plus the piecewise mapping that generates their orbit,
/// applied for j = 0 .. j_max-1.
struct OrbitSpec {
  std::vector<Block> base_blocks;
  std::vector<ActionSegment> actions;  // sorted by lo, tiling [0, v)
  std::int32_t j_max = 1;

  bool operator==(const OrbitSpec&) const = default;
};

/// One complete direct construction in generator form.
struct DesignSpec {
  std::string name;  // type label, e.g. "1^48 9^1"
  Point v = 0;
  std::vector<GroupingSegment> grouping;
  std::vector<OrbitSpec> orbits;

  bool operator==(const DesignSpec&) const = default;
};

/// Multiset of group sizes with multiplicities, ordered by decreasing size.
struct GddType {
  std::vector<std::pair<std::int32_t, std::int32_t>> parts;  // (size, count)

  std::string to_string() const;
  /// Parses caret notation ("1^48 9^1"); order-insensitive.
  static std::optional<GddType> parse(const std::string& name);

  bool operator==(const GddType&) const = default;
};

GddType gdd_type_of(const DesignSpec& spec);

/// Cross-group pair count divided by the 10 pairs a 5-block covers.
/// Empty when 10 does not divide the cross-group pair count.
std::optional<std::int64_t> expected_block_count(Point v,
                                                 const std::vector<GroupingSegment>& grouping);
std::optional<std::int64_t> expected_block_count(const DesignSpec& spec);

/// (v - |group containing p|) / 4, empty when not integral.
/// Throws std::out_of_range for p outside [0, v).
std::optional<std::int64_t> replication_number(const DesignSpec& spec, Point p);

/// One structural defect found by validate_spec. Indices are -1 when the
/// defect is not tied to that construct.
struct Defect {
  std::string message;
  std::int32_t segment = -1;
  std::int32_t orbit = -1;
  std::int32_t block = -1;
  std::int32_t j = -1;

  bool operator==(const Defect&) const = default;
};

/// Empty iff the spec is well formed: segments partition [0,v), residue
/// divisibility holds, the declared name matches the derived type, base
/// blocks are valid, and every orbit's j-map is a bijection carrying groups
/// onto groups for all j in [0, j_max).
std::vector<Defect> validate_spec(const DesignSpec& spec);

}  // namespace gdd
