#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "parity/dual_dp.hpp"
#include "parity/face_solver.hpp"
#include "parity/geom.hpp"
#include "parity/graph.hpp"
#include "parity/oracle.hpp"

namespace parity::testing {

using RawEdges = std::vector<std::pair<std::int64_t, std::int64_t>>;

inline Instance make_instance(std::vector<Point> pts, RawEdges edges,
                              std::vector<std::int64_t> r = {}) {
  return validate_instance(pts, edges, r);
}

inline Instance with_unhappy(Instance inst, std::vector<Vertex> r) {
  std::sort(r.begin(), r.end());
  inst.unhappy = std::move(r);
  return inst;
}

inline std::vector<Vertex> from_mask(std::uint64_t mask) {
  std::vector<Vertex> out;
  for (Vertex v = 0; mask >> v; ++v) {
    if (mask >> v & 1) out.push_back(v);
  }
  return out;
}

/// Every subset of {0..n-1} with even size, as bit masks.
inline std::vector<std::uint64_t> even_masks(std::size_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    if (__builtin_popcountll(m) % 2 == 0) out.push_back(m);
  }
  return out;
}

inline Instance square_path(std::vector<std::int64_t> r = {}) {
  return make_instance({{0, 0}, {10, 0}, {10, 10}, {0, 10}}, {{0, 1}, {1, 2}, {2, 3}}, r);
}

/// Not pseudoconvex: the ray from v2 away from v3 hits edge v0v1.
inline Instance quad_path(std::vector<std::int64_t> r = {}) {
  return make_instance({{0, 0}, {10, 0}, {5, 2}, {5, 8}}, {{0, 1}, {1, 2}, {2, 3}}, r);
}

inline Instance triangle_path(std::vector<std::int64_t> r = {}) {
  return make_instance({{0, 0}, {10, 0}, {5, 10}}, {{0, 1}, {1, 2}}, r);
}

/// k points in strictly convex position, listed counter-clockwise.
inline std::vector<Point> convex_points(std::size_t k) {
  std::vector<Point> pts;
  for (std::size_t i = 0; i < k; ++i) {
    const auto x = static_cast<std::int64_t>(i);
    pts.push_back({x, x * x});
  }
  return pts;
}

/// A convex k-gon whose boundary edge i -> i+1 is in G iff bit i of pattern is set.
inline Instance convex_ring(std::size_t k, std::uint64_t pattern, std::uint64_t r_mask) {
  RawEdges edges;
  for (std::size_t i = 0; i < k; ++i) {
    if (pattern >> i & 1) {
      edges.emplace_back(static_cast<std::int64_t>(i), static_cast<std::int64_t>((i + 1) % k));
    }
  }
  std::vector<std::int64_t> r;
  for (Vertex v : from_mask(r_mask)) r.push_back(static_cast<std::int64_t>(v));
  return make_instance(convex_points(k), edges, r);
}

inline FaceInstance ring_face(std::size_t k, std::uint64_t pattern, std::uint64_t r_mask) {
  FaceInstance f;
  for (std::size_t i = 0; i < k; ++i) {
    f.ring.push_back(i);
    f.unhappy.push_back(static_cast<std::uint8_t>(r_mask >> i & 1));
    f.edge_in_g.push_back(static_cast<std::uint8_t>(pattern >> i & 1));
  }
  return f;
}

/// Visibility recomputed pair by pair from segment classification only.
inline EdgeSet naive_visibility(const PlaneGraph& g) {
  std::vector<Edge> out;
  const std::size_t n = g.vertex_count();
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (g.edges.contains(Edge(a, b))) continue;
      const Segment s{g.points[a], g.points[b]};
      bool ok = true;
      for (Vertex c = 0; c < n && ok; ++c) {
        if (c != a && c != b && in_open_segment(g.points[a], g.points[b], g.points[c])) ok = false;
      }
      for (const Edge& e : g.edges) {
        if (!ok) break;
        const SegmentRelation rel = classify(s, g.segment(e));
        if (rel == SegmentRelation::ProperCross || rel == SegmentRelation::Touching) ok = false;
      }
      if (ok) out.emplace_back(a, b);
    }
  }
  return EdgeSet(std::move(out));
}

/// Unpruned enumeration of all subsets of the candidates.
inline std::optional<EdgeSet> naive_search(const Instance& inst, const EdgeSet& candidates) {
  const std::size_t m = candidates.size();
  if (m > 20) throw SizeError("naive_search is limited to 20 candidates");
  std::vector<std::uint64_t> clash(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i != j && properly_cross(inst.graph.segment(candidates[i]), inst.graph.segment(candidates[j]))) {
        clash[i] |= std::uint64_t{1} << j;
      }
    }
  }
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
    std::vector<Edge> pick;
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i) {
      if (s >> i & 1) {
        if (clash[i] & s) ok = false;
        pick.push_back(candidates[i]);
      }
    }
    if (ok && odd_degree_vertices(std::span<const Edge>(pick)) == inst.unhappy) {
      return EdgeSet(std::move(pick));
    }
  }
  return std::nullopt;
}

/// Hull vertices by the all-triples test: p is extreme iff no triangle of
/// other points contains it.
inline std::set<std::size_t> brute_hull(const std::vector<Point>& pts) {
  std::set<std::size_t> out;
  const std::size_t n = pts.size();
  for (std::size_t p = 0; p < n; ++p) {
    bool inside = false;
    for (std::size_t a = 0; a < n && !inside; ++a) {
      for (std::size_t b = a + 1; b < n && !inside; ++b) {
        for (std::size_t c = b + 1; c < n && !inside; ++c) {
          if (p == a || p == b || p == c) continue;
          const Orientation o1 = orient(pts[a], pts[b], pts[p]);
          const Orientation o2 = orient(pts[b], pts[c], pts[p]);
          const Orientation o3 = orient(pts[c], pts[a], pts[p]);
          inside = o1 == o2 && o2 == o3;
        }
      }
    }
    if (!inside) out.insert(p);
  }
  return out;
}

/// The instance induced on a vertex subset, relabelled in ascending order.
/// `flags` gives the unhappy bit for every kept global vertex.
inline Instance induced(const Instance& inst, const std::vector<Vertex>& keep,
                        const std::vector<std::uint8_t>& flags) {
  std::vector<std::int64_t> local(inst.graph.vertex_count(), -1);
  std::vector<Point> pts;
  for (Vertex v : keep) {
    local[v] = static_cast<std::int64_t>(pts.size());
    pts.push_back(inst.graph.points[v]);
  }
  RawEdges edges;
  for (const Edge& e : inst.graph.edges) {
    if (local[e.u] >= 0 && local[e.v] >= 0) edges.emplace_back(local[e.u], local[e.v]);
  }
  std::vector<std::int64_t> r;
  for (Vertex v : keep) {
    if (flags[v]) r.push_back(local[v]);
  }
  return make_instance(pts, edges, r);
}

inline bool oracle_feasible(const Instance& inst, const OracleLimits& limits = {}) {
  const OracleResult res = brute_force(inst, limits);
  if (res.status == OracleStatus::OutOfBudget) throw SizeError("oracle budget: " + res.reason);
  return res.status == OracleStatus::Feasible;
}

inline OracleLimits wide_limits() {
  OracleLimits l;
  l.max_vertices = 16;
  l.max_vis_edges = 64;
  return l;
}

}  // namespace parity::testing
