#include "parity/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "parity/sweep.hpp"

namespace parity {

EdgeSet::EdgeSet(std::vector<Edge> edges) : edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool EdgeSet::contains(const Edge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

EdgeSet set_union(const EdgeSet& a, const EdgeSet& b) {
  std::vector<Edge> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return EdgeSet(std::move(out));
}

EdgeSet symmetric_difference(const EdgeSet& a, const EdgeSet& b) {
  std::vector<Edge> out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return EdgeSet(std::move(out));
}

std::vector<std::vector<Vertex>> PlaneGraph::adjacency() const {
  std::vector<std::vector<Vertex>> adj(points.size());
  for (const Edge& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

std::vector<std::uint8_t> Instance::unhappy_mask() const {
  std::vector<std::uint8_t> mask(graph.vertex_count(), 0);
  for (Vertex r : unhappy) mask[r] = 1;
  return mask;
}

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::CoordinateRange: return "coordinate-range";
    case ViolationKind::DuplicatePoint: return "duplicate-point";
    case ViolationKind::BadIndex: return "bad-index";
    case ViolationKind::SelfLoop: return "self-loop";
    case ViolationKind::DuplicateEdge: return "duplicate-edge";
    case ViolationKind::Crossing: return "crossing";
    case ViolationKind::VertexOnEdge: return "vertex-on-edge";
    case ViolationKind::Collinear: return "collinear";
    case ViolationKind::DuplicateUnhappy: return "duplicate-unhappy";
  }
  return "unknown";
}

namespace {

std::string describe(const std::vector<Violation>& violations) {
  std::ostringstream out;
  out << violations.size() << " violation(s):";
  for (const auto& v : violations) {
    out << ' ' << to_string(v.kind) << '[';
    for (std::size_t i = 0; i < v.witnesses.size(); ++i) {
      if (i) out << ',';
      out << v.witnesses[i];
    }
    out << ']';
  }
  return out.str();
}

}  // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
    : Error(describe(violations)), violations_(std::move(violations)) {}

std::optional<std::array<std::size_t, 3>> find_collinear_triple(std::span<const Point> points) {
  const std::size_t n = points.size();
  struct Dir {
    std::int64_t dx, dy;
    std::size_t j;
  };
  std::vector<Dir> dirs;
  for (std::size_t i = 0; i < n; ++i) {
    dirs.clear();
    for (std::size_t j = i + 1; j < n; ++j) {
      std::int64_t dx = points[j].x - points[i].x;
      std::int64_t dy = points[j].y - points[i].y;
      if (dy < 0 || (dy == 0 && dx < 0)) {
        dx = -dx;
        dy = -dy;
      }
      dirs.push_back({dx, dy, j});
    }
    // All directions lie in the half-open upper half-plane, so the cross
    // product is a strict weak order on angle.
    std::sort(dirs.begin(), dirs.end(), [](const Dir& a, const Dir& b) {
      return cross_sign(a.dx, a.dy, b.dx, b.dy) == Orientation::CCW;
    });
    for (std::size_t k = 1; k < dirs.size(); ++k) {
      if (cross_sign(dirs[k - 1].dx, dirs[k - 1].dy, dirs[k].dx, dirs[k].dy) ==
          Orientation::Collinear) {
        std::array<std::size_t, 3> t{i, dirs[k - 1].j, dirs[k].j};
        std::sort(t.begin(), t.end());
        return t;
      }
    }
  }
  return std::nullopt;
}

Instance validate_instance(const std::vector<Point>& points,
                           const std::vector<std::pair<std::int64_t, std::int64_t>>& edges,
                           const std::vector<std::int64_t>& unhappy,
                           const ValidationOptions& options) {
  std::vector<Violation> violations;
  const auto n = static_cast<std::int64_t>(points.size());

  bool geometry_ok = true;
  for (std::int64_t i = 0; i < n; ++i) {
    const Point& p = points[static_cast<std::size_t>(i)];
    if (p.x > kMaxCoordinate || p.x < -kMaxCoordinate || p.y > kMaxCoordinate ||
        p.y < -kMaxCoordinate) {
      violations.push_back({ViolationKind::CoordinateRange, {i}, "coordinate exceeds 2^62"});
      geometry_ok = false;
    }
  }

  {
    std::vector<std::size_t> order(points.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return points[a] != points[b] ? points[a] < points[b] : a < b;
    });
    for (std::size_t k = 1; k < order.size(); ++k) {
      if (points[order[k]] == points[order[k - 1]]) {
        violations.push_back({ViolationKind::DuplicatePoint,
                              {static_cast<std::int64_t>(order[k - 1]),
                               static_cast<std::int64_t>(order[k])},
                              "two vertices share coordinates"});
        geometry_ok = false;
      }
    }
  }

  std::vector<Edge> clean;
  clean.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n) {
      violations.push_back({ViolationKind::BadIndex, {a, b}, "edge endpoint out of range"});
      continue;
    }
    if (a == b) {
      violations.push_back({ViolationKind::SelfLoop, {a, b}, "self-loop"});
      continue;
    }
    clean.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  {
    std::vector<Edge> sorted = clean;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 1; k < sorted.size(); ++k) {
      if (sorted[k] == sorted[k - 1]) {
        violations.push_back({ViolationKind::DuplicateEdge,
                              {static_cast<std::int64_t>(sorted[k].u),
                               static_cast<std::int64_t>(sorted[k].v)},
                              "edge listed twice"});
      }
    }
  }

  std::vector<Vertex> r;
  for (std::int64_t x : unhappy) {
    if (x < 0 || x >= n) {
      violations.push_back({ViolationKind::BadIndex, {x}, "unhappy vertex out of range"});
      continue;
    }
    r.push_back(static_cast<Vertex>(x));
  }
  std::sort(r.begin(), r.end());
  for (std::size_t k = 1; k < r.size(); ++k) {
    if (r[k] == r[k - 1]) {
      violations.push_back({ViolationKind::DuplicateUnhappy, {static_cast<std::int64_t>(r[k])},
                            "unhappy vertex listed twice"});
    }
  }
  r.erase(std::unique(r.begin(), r.end()), r.end());

  EdgeSet edge_set(clean);
  if (geometry_ok) {
    std::vector<IndexedSegment> segs;
    segs.reserve(edge_set.size());
    for (const Edge& e : edge_set) segs.push_back({e.u, e.v});
    if (find_conflict(points, segs)) {
      for (const auto& [i, j] : all_conflicts(points, segs)) {
        const Edge& e1 = edge_set[i];
        const Edge& e2 = edge_set[j];
        const bool proper =
            classify(Segment{points[e1.u], points[e1.v]}, Segment{points[e2.u], points[e2.v]}) ==
            SegmentRelation::ProperCross;
        violations.push_back(
            {proper ? ViolationKind::Crossing : ViolationKind::VertexOnEdge,
             {static_cast<std::int64_t>(e1.u), static_cast<std::int64_t>(e1.v),
              static_cast<std::int64_t>(e2.u), static_cast<std::int64_t>(e2.v)},
             proper ? "edges cross" : "a vertex lies in the interior of an edge"});
      }
    }
    // The sweep only sees vertices through their edges.
    std::vector<std::uint8_t> touched(points.size(), 0);
    for (const Edge& e : edge_set) touched[e.u] = touched[e.v] = 1;
    for (std::size_t w = 0; w < points.size(); ++w) {
      if (touched[w]) continue;
      for (const Edge& e : edge_set) {
        if (in_open_segment(points[e.u], points[e.v], points[w])) {
          violations.push_back({ViolationKind::VertexOnEdge,
                                {static_cast<std::int64_t>(w), static_cast<std::int64_t>(e.u),
                                 static_cast<std::int64_t>(e.v)},
                                "a vertex lies in the interior of an edge"});
        }
      }
    }
    if (options.check_general_position) {
      if (auto t = find_collinear_triple(points)) {
        violations.push_back({ViolationKind::Collinear,
                              {static_cast<std::int64_t>((*t)[0]),
                               static_cast<std::int64_t>((*t)[1]),
                               static_cast<std::int64_t>((*t)[2])},
                              "three collinear vertices"});
      }
    }
  }

  if (!violations.empty()) throw ValidationError(std::move(violations));
  return Instance{PlaneGraph{points, std::move(edge_set)}, std::move(r)};
}

EdgeSet visibility_graph(const PlaneGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<Edge> vis;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const Edge uv(u, v);
      if (g.edges.contains(uv)) continue;
      const Segment s{g.points[u], g.points[v]};
      bool visible = true;
      for (Vertex w = 0; w < n && visible; ++w) {
        if (w != u && w != v && in_open_segment(s.a, s.b, g.points[w])) visible = false;
      }
      for (const Edge& e : g.edges) {
        if (!visible) break;
        const SegmentRelation rel = classify(s, g.segment(e));
        if (rel == SegmentRelation::ProperCross || rel == SegmentRelation::Touching) {
          visible = false;
        }
      }
      if (visible) vis.push_back(uv);
    }
  }
  return EdgeSet(std::move(vis));
}

std::vector<Vertex> odd_degree_vertices(std::span<const Edge> edges) {
  std::vector<Vertex> ends;
  ends.reserve(2 * edges.size());
  for (const Edge& e : edges) {
    ends.push_back(e.u);
    ends.push_back(e.v);
  }
  std::sort(ends.begin(), ends.end());
  std::vector<Vertex> odd;
  for (std::size_t i = 0; i < ends.size();) {
    std::size_t j = i;
    while (j < ends.size() && ends[j] == ends[i]) ++j;
    if ((j - i) % 2 == 1) odd.push_back(ends[i]);
    i = j;
  }
  return odd;
}

VerificationReport verify_happy_set(const Instance& inst, const EdgeSet& h) {
  VerificationReport report;
  const PlaneGraph& g = inst.graph;
  const std::size_t n = g.vertex_count();

  std::vector<Edge> usable;
  usable.reserve(h.size());
  for (const Edge& e : h) {
    if (e.v >= n || e.u == e.v) {
      report.failures.push_back({FailureKind::BadEdge, {e}, {}, "edge endpoint out of range"});
    } else if (g.edges.contains(e)) {
      report.failures.push_back({FailureKind::NotVisible, {e}, {}, "edge already in G"});
    } else {
      usable.push_back(e);
    }
  }

  std::vector<IndexedSegment> segs;
  segs.reserve(usable.size() + g.edges.size());
  for (const Edge& e : usable) segs.push_back({e.u, e.v});
  for (const Edge& e : g.edges) segs.push_back({e.u, e.v});
  if (find_conflict(g.points, segs)) {
    for (const Edge& e : usable) {
      const Segment s = g.segment(e);
      for (Vertex w = 0; w < n; ++w) {
        if (w != e.u && w != e.v && in_open_segment(s.a, s.b, g.points[w])) {
          report.failures.push_back(
              {FailureKind::NotVisible, {e}, {w}, "edge passes through a vertex"});
        }
      }
      for (const Edge& f : g.edges) {
        const SegmentRelation rel = classify(s, g.segment(f));
        if (rel == SegmentRelation::ProperCross || rel == SegmentRelation::Touching) {
          report.failures.push_back({FailureKind::NotVisible, {e, f}, {}, "edge crosses G"});
        }
      }
    }
    for (std::size_t i = 0; i < usable.size(); ++i) {
      for (std::size_t j = i + 1; j < usable.size(); ++j) {
        const SegmentRelation rel = classify(g.segment(usable[i]), g.segment(usable[j]));
        if (rel == SegmentRelation::ProperCross || rel == SegmentRelation::Touching) {
          report.failures.push_back(
              {FailureKind::Crossing, {usable[i], usable[j]}, {}, "happy-set edges cross"});
        }
      }
    }
  }

  const std::vector<Vertex> odd = odd_degree_vertices(h);
  std::vector<Vertex> diff;
  std::set_symmetric_difference(odd.begin(), odd.end(), inst.unhappy.begin(), inst.unhappy.end(),
                                std::back_inserter(diff));
  if (!diff.empty()) {
    report.failures.push_back(
        {FailureKind::ParityMismatch, {}, std::move(diff), "odd-degree set differs from R"});
  }
  return report;
}

void require_simple_spanning_cycle(std::span<const Point> points, std::span<const Vertex> cycle) {
  const std::size_t n = points.size();
  if (n < 3 || cycle.size() != n) {
    throw StructureError("cycle must visit all " + std::to_string(n) + " vertices");
  }
  std::vector<std::uint8_t> seen(n, 0);
  for (Vertex v : cycle) {
    if (v >= n || seen[v]) throw StructureError("cycle is not a permutation of the vertices");
    seen[v] = 1;
  }
  std::vector<IndexedSegment> segs;
  segs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) segs.push_back({cycle[i], cycle[(i + 1) % n]});
  if (auto c = find_conflict(points, segs)) {
    throw StructureError("cycle is not simple: edges " + std::to_string(c->first) + " and " +
                         std::to_string(c->second) + " conflict");
  }
}

EdgeSet restrict_to_region(std::span<const Point> points, const EdgeSet& vis,
                           std::span<const Vertex> cycle) {
  require_simple_spanning_cycle(points, cycle);
  const std::size_t n = cycle.size();
  std::vector<Point> polygon;
  polygon.reserve(n);
  std::vector<Edge> ring;
  ring.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    polygon.push_back(points[cycle[i]]);
    ring.emplace_back(cycle[i], cycle[(i + 1) % n]);
  }
  const EdgeSet ring_edges(ring);

  std::vector<Edge> kept;
  for (const Edge& e : vis) {
    if (ring_edges.contains(e)) {
      kept.push_back(e);
      continue;
    }
    const Point mid{points[e.u].x + points[e.v].x, points[e.u].y + points[e.v].y};
    if (locate_point(mid, 2, polygon) < 0) continue;
    const Segment s{points[e.u], points[e.v]};
    bool crosses = false;
    for (const Edge& c : ring) {
      if (classify(s, Segment{points[c.u], points[c.v]}) == SegmentRelation::ProperCross) {
        crosses = true;
        break;
      }
    }
    if (!crosses) kept.push_back(e);
  }
  return EdgeSet(std::move(kept));
}

}  // namespace parity
