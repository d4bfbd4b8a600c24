#pragma once

#include <span>
#include <vector>

#include "gdd/design.hpp"

namespace gdd {

/// Image of x under the piecewise mapping at shift j.
/// Throws std::invalid_argument if no segment covers x.
Point apply_action(std::span<const ActionSegment> actions, std::int64_t j, Point x);

/// Pointwise image of a block, re-sorted. Throws std::runtime_error if five
/// distinct inputs collide (impossible once validate_spec has passed).
Block map_block(std::span<const ActionSegment> actions, std::int64_t j, const Block& b);

/// All blocks of the design in canonical order: orbit-major, base-block-major,
/// then j ascending.
std::vector<Block> expand_design(const DesignSpec& spec);

/// Stable group id of x; ids enumerate groups segment by segment.
/// Throws std::out_of_range for x outside [0, v).
std::int32_t group_of(const DesignSpec& spec, Point x);

std::int32_t group_count(const DesignSpec& spec);

/// group_of precomputed for all of [0, v).
std::vector<std::int32_t> group_id_table(const DesignSpec& spec);

/// Point sets of all groups, in group-id order, points ascending.
std::vector<std::vector<Point>> group_members(const DesignSpec& spec);

}  // namespace gdd
