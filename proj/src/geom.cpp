#include "parity/geom.hpp"

#include <algorithm>
#include <numeric>

#include "parity/errors.hpp"

namespace parity {
namespace {

// Compares a*d against b*c without forming the difference, so every product
// stays within 2^126 for inputs bounded by 2^63.
Orientation sign_of_det(Int128 a, Int128 b, Int128 c, Int128 d) {
  const Int128 lhs = a * d;
  const Int128 rhs = b * c;
  if (lhs > rhs) return Orientation::CCW;
  if (lhs < rhs) return Orientation::CW;
  return Orientation::Collinear;
}

bool same_point(const Point& a, const Point& b) { return a == b; }

}  // namespace

Orientation orient(const Point& p, const Point& q, const Point& r) {
  return sign_of_det(Int128{q.x} - p.x, Int128{q.y} - p.y, Int128{r.x} - p.x, Int128{r.y} - p.y);
}

Orientation cross_sign(std::int64_t ux, std::int64_t uy, std::int64_t vx, std::int64_t vy) {
  return sign_of_det(ux, uy, vx, vy);
}

bool in_open_segment(const Point& p, const Point& q, const Point& r) {
  if (orient(p, q, r) != Orientation::Collinear) return false;
  if (p.x != q.x) {
    return std::min(p.x, q.x) < r.x && r.x < std::max(p.x, q.x);
  }
  return p.x == r.x && std::min(p.y, q.y) < r.y && r.y < std::max(p.y, q.y);
}

SegmentRelation classify(const Segment& s1, const Segment& s2) {
  const bool aa = same_point(s1.a, s2.a);
  const bool ab = same_point(s1.a, s2.b);
  const bool ba = same_point(s1.b, s2.a);
  const bool bb = same_point(s1.b, s2.b);
  if ((aa && bb) || (ab && ba)) return SegmentRelation::Touching;

  if (aa || ab || ba || bb) {
    const Point& shared = (aa || ab) ? s1.a : s1.b;
    const Point& other1 = (aa || ab) ? s1.b : s1.a;
    const Point& other2 = (aa || ba) ? s2.b : s2.a;
    if (in_open_segment(shared, other1, other2) || in_open_segment(shared, other2, other1)) {
      return SegmentRelation::Touching;
    }
    return SegmentRelation::SharedEndpoint;
  }

  if (in_open_segment(s1.a, s1.b, s2.a) || in_open_segment(s1.a, s1.b, s2.b) ||
      in_open_segment(s2.a, s2.b, s1.a) || in_open_segment(s2.a, s2.b, s1.b)) {
    return SegmentRelation::Touching;
  }
  const int o1 = static_cast<int>(orient(s1.a, s1.b, s2.a));
  const int o2 = static_cast<int>(orient(s1.a, s1.b, s2.b));
  const int o3 = static_cast<int>(orient(s2.a, s2.b, s1.a));
  const int o4 = static_cast<int>(orient(s2.a, s2.b, s1.b));
  if (o1 * o2 < 0 && o3 * o4 < 0) return SegmentRelation::ProperCross;
  return SegmentRelation::Disjoint;
}

bool properly_cross(const Segment& s1, const Segment& s2) {
  switch (classify(s1, s2)) {
    case SegmentRelation::ProperCross:
      return true;
    case SegmentRelation::Touching:
      throw DegeneracyError("segment endpoint lies in the interior of another segment");
    default:
      return false;
  }
}

std::vector<std::size_t> convex_hull(std::span<const Point> points) {
  const std::size_t n = points.size();
  if (n < 3) throw SizeError("convex hull needs at least 3 points");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return points[a] < points[b]; });

  std::vector<std::size_t> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && orient(points[hull[k - 2]], points[hull[k - 1]], points[order[i]]) !=
                         Orientation::CCW) {
      --k;
    }
    hull[k++] = order[i];
  }
  for (std::size_t i = n - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && orient(points[hull[k - 2]], points[hull[k - 1]], points[order[i]]) !=
                             Orientation::CCW) {
      --k;
    }
    hull[k++] = order[i];
  }
  hull.resize(k - 1);
  if (hull.size() < 3) throw DegeneracyError("all points are collinear");
  return hull;
}

std::optional<RayHit> ray_first_hit(const Point& origin, std::int64_t dx, std::int64_t dy,
                                    std::span<const Segment> boundary,
                                    std::span<const std::size_t> skip) {
  if (dx == 0 && dy == 0) throw DomainError("ray direction must be non-zero");

  const Int256 ddx = dx;
  const Int256 ddy = dy;
  std::optional<RayHit> best;
  for (std::size_t i = 0; i < boundary.size(); ++i) {
    if (std::find(skip.begin(), skip.end(), i) != skip.end()) continue;
    const Segment& seg = boundary[i];
    const Int256 ex = Int256(seg.b.x) - seg.a.x;
    const Int256 ey = Int256(seg.b.y) - seg.a.y;
    const Int256 wx = Int256(seg.a.x) - origin.x;
    const Int256 wy = Int256(seg.a.y) - origin.y;

    Int256 den = ddx * ey - ddy * ex;
    Int256 t_num = wx * ey - wy * ex;
    Int256 s_num = wx * ddy - wy * ddx;
    if (den == 0) {
      if (s_num != 0) continue;  // parallel, off the ray's line
      const Int256 dot_a = wx * ddx + wy * ddy;
      const Int256 dot_b = (Int256(seg.b.x) - origin.x) * ddx + (Int256(seg.b.y) - origin.y) * ddy;
      if (dot_a >= 0 || dot_b >= 0) {
        throw DegeneracyError("ray runs along a boundary segment");
      }
      continue;
    }
    if (den < 0) {
      den = -den;
      t_num = -t_num;
      s_num = -s_num;
    }
    if (s_num < 0 || s_num > den || t_num < 0) continue;
    if (t_num == 0) throw DegeneracyError("ray origin lies on a boundary segment");
    if (s_num == 0 || s_num == den) throw DegeneracyError("ray passes through a boundary vertex");
    if (!best || t_num * best->t_den < best->t_num * den) {
      best = RayHit{i, t_num, den};
    }
  }
  return best;
}

int locate_point(const Point& scaled_p, std::int64_t scale, std::span<const Point> polygon) {
  // Crossing-number test in exact 256-bit arithmetic.
  const Int256 px = scaled_p.x;
  const Int256 py = scaled_p.y;
  bool inside = false;
  const std::size_t n = polygon.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Int256 ax = Int256(polygon[j].x) * scale;
    const Int256 ay = Int256(polygon[j].y) * scale;
    const Int256 bx = Int256(polygon[i].x) * scale;
    const Int256 by = Int256(polygon[i].y) * scale;
    const Int256 cross = (bx - ax) * (py - ay) - (by - ay) * (px - ax);
    if (cross == 0 && std::min(ax, bx) <= px && px <= std::max(ax, bx) &&
        std::min(ay, by) <= py && py <= std::max(ay, by)) {
      return 0;
    }
    if ((ay > py) != (by > py)) {
      // x-coordinate of the edge at height py compared against px.
      const bool upward = by > ay;
      if ((cross > 0) == upward) inside = !inside;
    }
  }
  return inside ? 1 : -1;
}

}  // namespace parity
