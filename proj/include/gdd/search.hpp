#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gdd/design.hpp"

namespace gdd {

/// Orbit structure with the base blocks unknown: how many blocks to find,
/// under which mapping, for which j range.
struct OrbitShape {
  std::int32_t block_count = 0;
  std::vector<ActionSegment> actions;
  std::int32_t j_max = 1;

  bool operator==(const OrbitShape&) const = default;
};

/// A design spec with grouping and orbit shapes fixed but blocks unknown.
struct Skeleton {
  std::string name;
  Point v = 0;
  std::vector<GroupingSegment> grouping;
  std::vector<OrbitShape> orbits;

  bool operator==(const Skeleton&) const = default;
};

struct SearchBudget {
  std::uint64_t max_nodes = 20'000'000;
  std::chrono::duration<double> time_limit = std::chrono::seconds(60);
  std::uint64_t seed = 0;  // 0 keeps plain lexicographic candidate order
};

enum class SearchStatus { found, infeasible, budget_exhausted };

struct SearchResult {
  SearchStatus status = SearchStatus::budget_exhausted;
  std::optional<DesignSpec> spec;  // set iff status == found
  std::uint64_t nodes = 0;
};

/// Parses a .gdd file whose `block ?` placeholder lines give only the number
/// of blocks per orbit. Throws ParseError on malformed input.
Skeleton parse_skeleton(std::string_view text);

/// Depth-first base-block search over the skeleton. Returned designs always
/// verify as valid 5-GDDs; infeasible counting conditions are detected before
/// searching; exhausted budgets are not nonexistence proofs. Deterministic
/// for a fixed skeleton and budget (including seed).
SearchResult search_base_blocks(const Skeleton& skeleton, const SearchBudget& budget);

}  // namespace gdd
