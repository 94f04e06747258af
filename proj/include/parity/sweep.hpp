#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "parity/geom.hpp"

namespace parity {

/// A straight-line segment between two indexed points.
struct IndexedSegment {
  std::size_t a = 0;
  std::size_t b = 0;
};

/// Shamos-Hoey sweep: returns some pair of segment positions whose relation is
/// ProperCross or Touching, or nullopt when the set is crossing-free (segments
/// may share endpoints). O(m log m) for m segments.
std::optional<std::pair<std::size_t, std::size_t>> find_conflict(
    std::span<const Point> points, std::span<const IndexedSegment> segments);

/// All conflicting pairs by exhaustive comparison; used to produce witnesses.
/// Stops after `limit` pairs.
std::vector<std::pair<std::size_t, std::size_t>> all_conflicts(
    std::span<const Point> points, std::span<const IndexedSegment> segments,
    std::size_t limit = 64);

}  // namespace parity
