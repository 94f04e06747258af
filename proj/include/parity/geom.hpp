#pragma once

// Exact predicates on integer points. Nothing in here touches floating point:
// determinants are evaluated in 128-bit integers and ray parameters are kept
// as 256-bit rationals.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace parity {

using Int128 = __int128;
using Int256 = boost::multiprecision::int256_t;

/// Largest admissible |coordinate|. Differences then stay below 2^63 and each
/// product in a 2x2 determinant below 2^126.
inline constexpr std::int64_t kMaxCoordinate = std::int64_t{1} << 62;

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend constexpr auto operator<=>(const Point&, const Point&) = default;
};

struct Segment {
  Point a;
  Point b;
};

enum class Orientation : int { CW = -1, Collinear = 0, CCW = 1 };

constexpr Orientation operator-(Orientation o) {
  return static_cast<Orientation>(-static_cast<int>(o));
}

/// Sign of (q - p) x (r - p).
Orientation orient(const Point& p, const Point& q, const Point& r);

/// Sign of the cross product u x v for integer vectors.
Orientation cross_sign(std::int64_t ux, std::int64_t uy, std::int64_t vx, std::int64_t vy);

/// True iff r lies in the open segment (p, q). Assumes nothing about p, q, r.
bool in_open_segment(const Point& p, const Point& q, const Point& r);

enum class SegmentRelation {
  Disjoint,
  SharedEndpoint,  // meet only in one common endpoint
  ProperCross,     // interiors cross in a single point
  Touching,        // endpoint in the other's interior, overlap, or identical
};

SegmentRelation classify(const Segment& s1, const Segment& s2);

/// True iff the segments cross at a point interior to both. Throws
/// DegeneracyError when an endpoint of one lies in the interior of the other.
bool properly_cross(const Segment& s1, const Segment& s2);

/// Hull vertex indices in CCW order, starting at the lexicographically
/// smallest point. Points strictly inside or on hull edges are excluded.
/// Throws SizeError for fewer than three points.
std::vector<std::size_t> convex_hull(std::span<const Point> points);

struct RayHit {
  std::size_t segment = 0;
  // Parameter t = t_num / t_den (t_den > 0) along origin + t * direction.
  Int256 t_num;
  Int256 t_den;
};

/// First segment hit by the open ray origin + t * direction, t > 0, scanning
/// the boundary linearly. Segments listed in `skip` are ignored. Throws
/// DegeneracyError if the ray meets a boundary vertex or runs along a segment.
std::optional<RayHit> ray_first_hit(const Point& origin, std::int64_t dx, std::int64_t dy,
                                    std::span<const Segment> boundary,
                                    std::span<const std::size_t> skip = {});

/// Closed point-in-polygon test for `p` given with coordinates scaled by
/// `scale` relative to the polygon (scale = 2 admits segment midpoints).
/// Returns +1 strictly inside, 0 on the boundary, -1 outside.
int locate_point(const Point& scaled_p, std::int64_t scale, std::span<const Point> polygon);

}  // namespace parity
