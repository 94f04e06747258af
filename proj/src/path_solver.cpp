#include "parity/path_solver.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "parity/oracle.hpp"

namespace parity {
namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
  std::vector<std::size_t> parent;
};

std::vector<Vertex> require_path(const PlaneGraph& g) {
  auto order = path_order(g);
  if (!order) throw DomainError("G is not a path");
  return *std::move(order);
}

std::vector<Vertex> hull_of(const PlaneGraph& g) {
  const auto h = convex_hull(g.points);
  return {h.begin(), h.end()};
}

std::vector<Pocket> pockets_of(const PlaneGraph& g, const std::vector<Vertex>& path,
                               const std::vector<Vertex>& hull) {
  const std::size_t n = path.size();
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[path[i]] = i;

  std::vector<Pocket> out;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Vertex a = hull[i];
    const Vertex b = hull[(i + 1) % hull.size()];
    if (g.edges.contains(Edge(a, b))) continue;
    Pocket p;
    p.hull_edge = Edge(a, b);
    p.hull_index = i;
    if (pos[a] < pos[b]) {
      for (std::size_t j = pos[a]; j <= pos[b]; ++j) p.chain.push_back(path[j]);
    } else {
      for (std::size_t j = pos[a] + 1; j-- > pos[b];) p.chain.push_back(path[j]);
    }
    for (std::size_t j = 1; j + 1 < p.chain.size(); ++j) {
      if (orient(g.points[p.chain[j - 1]], g.points[p.chain[j]], g.points[p.chain[j + 1]]) ==
          Orientation::CCW) {
        p.reflex.push_back(p.chain[j]);
      }
    }
    out.push_back(std::move(p));
  }
  return out;
}

PseudoconvexReport check_with(const PlaneGraph& g, const std::vector<Vertex>& path,
                              const std::vector<Vertex>& hull,
                              const std::vector<Pocket>& pocket_list) {
  PseudoconvexReport rep;
  std::vector<std::uint8_t> on_hull(g.vertex_count(), 0);
  for (Vertex q : hull) on_hull[q] = 1;
  for (Vertex end : {path.front(), path.back()}) {
    if (!on_hull[end]) {
      rep.reason = PseudoconvexReport::Reason::EndpointOffHull;
      rep.vertex = end;
      return rep;
    }
  }

  std::vector<Segment> boundary;
  for (std::size_t k = 0; k < pocket_list.size(); ++k) {
    const Pocket& p = pocket_list[k];
    if (p.reflex.empty()) continue;
    boundary.clear();
    for (std::size_t j = 0; j + 1 < p.chain.size(); ++j) {
      boundary.push_back({g.points[p.chain[j]], g.points[p.chain[j + 1]]});
    }
    const std::size_t lid = boundary.size();
    boundary.push_back({g.points[p.chain.back()], g.points[p.chain.front()]});

    for (std::size_t j = 1; j + 1 < p.chain.size(); ++j) {
      const Point& before = g.points[p.chain[j - 1]];
      const Point& at = g.points[p.chain[j]];
      const Point& after = g.points[p.chain[j + 1]];
      if (orient(before, at, after) != Orientation::CCW) continue;
      const std::array<std::size_t, 2> skip{j - 1, j};
      for (const Point* from : {&before, &after}) {
        const std::int64_t dx = at.x - from->x;
        const std::int64_t dy = at.y - from->y;
        const auto hit = ray_first_hit(at, dx, dy, boundary, skip);
        if (!hit || hit->segment != lid) {
          rep.reason = PseudoconvexReport::Reason::RayMissesHullEdge;
          rep.pocket = k;
          rep.vertex = p.chain[j];
          rep.dx = dx;
          rep.dy = dy;
          return rep;
        }
      }
    }
  }
  rep.pseudoconvex = true;
  return rep;
}

HuggingCycle tight_hull_from(const PlaneGraph& g, const std::vector<Vertex>& hull,
                             const std::vector<Pocket>& pocket_list) {
  const std::size_t n = g.vertex_count();
  std::vector<const Pocket*> at(hull.size(), nullptr);
  for (const Pocket& p : pocket_list) at[p.hull_index] = &p;
  std::vector<Vertex> order;
  order.reserve(n);
  for (std::size_t i = 0; i < hull.size(); ++i) {
    order.push_back(hull[i]);
    if (at[i]) order.insert(order.end(), at[i]->reflex.begin(), at[i]->reflex.end());
  }
  std::vector<std::uint8_t> seen(n, 0);
  for (Vertex v : order) {
    if (seen[v]) throw StructureError("tight hull visits vertex " + std::to_string(v) + " twice");
    seen[v] = 1;
  }
  if (order.size() != n) throw StructureError("tight hull misses a vertex");
  return make_hugging_cycle(g, std::move(order));
}

bool conflicts_with(const PlaneGraph& g, const Edge& e, const std::vector<Edge>& accepted) {
  const Segment s = g.segment(e);
  for (const Edge& f : accepted) {
    const SegmentRelation rel = classify(s, g.segment(f));
    if (rel == SegmentRelation::ProperCross || rel == SegmentRelation::Touching) return true;
  }
  return false;
}

std::optional<std::vector<Edge>> greedy_tree(const PlaneGraph& g, const std::vector<Edge>& order) {
  const std::size_t n = g.vertex_count();
  UnionFind uf(n);
  std::vector<Edge> accepted;
  for (const Edge& e : order) {
    if (uf.find(e.u) == uf.find(e.v) || conflicts_with(g, e, accepted)) continue;
    uf.unite(e.u, e.v);
    accepted.push_back(e);
    if (accepted.size() + 1 == n) return accepted;
  }
  return std::nullopt;
}

class TreeBacktrack {
 public:
  TreeBacktrack(const PlaneGraph& g, std::vector<Edge> edges) : g_(g), edges_(std::move(edges)) {}

  std::optional<std::vector<Edge>> run() {
    if (extend(0)) return chosen_;
    return std::nullopt;
  }

 private:
  bool connects(const Edge& e) const {
    UnionFind uf(g_.vertex_count());
    for (const Edge& f : chosen_) uf.unite(f.u, f.v);
    return uf.find(e.u) != uf.find(e.v);
  }

  bool extend(std::size_t i) {
    const std::size_t need = g_.vertex_count() - 1 - chosen_.size();
    if (need == 0) return true;
    if (edges_.size() - i < need) return false;
    const Edge& e = edges_[i];
    if (connects(e) && !conflicts_with(g_, e, chosen_)) {
      chosen_.push_back(e);
      if (extend(i + 1)) return true;
      chosen_.pop_back();
    }
    return extend(i + 1);
  }

  const PlaneGraph& g_;
  std::vector<Edge> edges_;
  std::vector<Edge> chosen_;
};

}  // namespace

std::optional<std::vector<Vertex>> path_order(const PlaneGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0 || g.edges.size() + 1 != n) return std::nullopt;
  if (n == 1) return std::vector<Vertex>{0};
  const auto adj = g.adjacency();
  std::optional<Vertex> start;
  for (Vertex v = 0; v < n; ++v) {
    if (adj[v].size() > 2 || adj[v].empty()) return std::nullopt;
    if (adj[v].size() == 1 && !start) start = v;
  }
  if (!start) return std::nullopt;
  std::vector<Vertex> order{*start};
  Vertex prev = *start;
  Vertex cur = adj[*start][0];
  order.push_back(cur);
  while (adj[cur].size() == 2) {
    const Vertex next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
    prev = cur;
    cur = next;
    order.push_back(cur);
    if (order.size() > n) return std::nullopt;
  }
  if (order.size() != n) return std::nullopt;
  return order;
}

std::vector<Pocket> pockets(const PlaneGraph& g) {
  const std::vector<Vertex> path = require_path(g);
  if (path.size() < 3) throw SizeError("pockets need at least 3 vertices");
  return pockets_of(g, path, hull_of(g));
}

std::string PseudoconvexReport::describe() const {
  std::ostringstream out;
  switch (reason) {
    case Reason::None:
      out << (pseudoconvex ? "pseudoconvex" : "not pseudoconvex");
      break;
    case Reason::SingleVertex:
      out << "a single vertex";
      break;
    case Reason::EndpointOffHull:
      out << "path endpoint " << vertex << " is not a hull vertex";
      break;
    case Reason::RayMissesHullEdge:
      out << "ray from reflex vertex " << vertex << " along (" << dx << "," << dy
          << ") in pocket " << pocket << " meets the chain before the hull edge";
      break;
  }
  return out.str();
}

PseudoconvexReport check_pseudoconvex(const PlaneGraph& g) {
  const std::vector<Vertex> path = require_path(g);
  PseudoconvexReport rep;
  if (path.size() == 1) {
    rep.reason = PseudoconvexReport::Reason::SingleVertex;
    return rep;
  }
  if (path.size() == 2) {
    rep.pseudoconvex = true;
    return rep;
  }
  const std::vector<Vertex> hull = hull_of(g);
  return check_with(g, path, hull, pockets_of(g, path, hull));
}

bool is_pseudoconvex(const PlaneGraph& g) { return check_pseudoconvex(g).pseudoconvex; }

HuggingCycle tight_hull(const PlaneGraph& g) {
  const std::vector<Vertex> path = require_path(g);
  if (path.size() < 3) throw SizeError("a tight hull needs at least 3 vertices");
  const std::vector<Vertex> hull = hull_of(g);
  const std::vector<Pocket> pocket_list = pockets_of(g, path, hull);
  const PseudoconvexReport rep = check_with(g, path, hull, pocket_list);
  if (!rep.pseudoconvex) throw DomainError("tight hull of a non-pseudoconvex path: " + rep.describe());
  HuggingCycle c = tight_hull_from(g, hull, pocket_list);
  build_dual(g, c);
  return c;
}

std::optional<EdgeSet> plane_spanning_tree(const PlaneGraph& g, std::uint64_t seed,
                                           std::string* diagnostic) {
  auto say = [&](std::string msg) {
    if (diagnostic) *diagnostic = std::move(msg);
    return std::nullopt;
  };
  const std::size_t n = g.vertex_count();
  if (n == 1) return EdgeSet{};
  if (is_pseudoconvex(g)) return say("path is pseudoconvex; Vis(G) has no plane spanning tree");
  if (n > kSpanningTreeLimit) {
    return say("spanning tree search skipped above " + std::to_string(kSpanningTreeLimit) +
               " vertices");
  }

  std::vector<Edge> vis = visibility_graph(g).edges();
  auto length2 = [&](const Edge& e) {
    const Int128 dx = Int128{g.points[e.u].x} - g.points[e.v].x;
    const Int128 dy = Int128{g.points[e.u].y} - g.points[e.v].y;
    return dx * dx + dy * dy;
  };
  std::stable_sort(vis.begin(), vis.end(),
                   [&](const Edge& a, const Edge& b) { return length2(a) < length2(b); });
  if (auto t = greedy_tree(g, vis)) return EdgeSet(*std::move(t));

  std::mt19937_64 rng(seed);
  std::vector<Edge> shuffled = vis;
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    if (auto t = greedy_tree(g, shuffled)) return EdgeSet(*std::move(t));
  }
  if (n <= 12) {
    if (auto t = TreeBacktrack(g, vis).run()) return EdgeSet(*std::move(t));
    return say("exhaustive search found no plane spanning tree");
  }
  return say("greedy search with restarts found no plane spanning tree");
}

EdgeSet tjoin_from_tree(std::size_t n, const EdgeSet& tree, const std::vector<Vertex>& r) {
  if (r.size() % 2 == 1) throw ParityError("a T-join needs an even number of terminals");
  if (n == 0 || tree.size() + 1 != n) throw StructureError("tree does not span the vertices");
  std::vector<std::vector<Vertex>> adj(n);
  for (const Edge& e : tree) {
    if (e.v >= n) throw StructureError("tree edge out of range");
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<Vertex> order{0};
  std::vector<Vertex> parent(n, n);
  parent[0] = 0;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (Vertex w : adj[order[head]]) {
      if (parent[w] != n) continue;
      parent[w] = order[head];
      order.push_back(w);
    }
  }
  if (order.size() != n) throw StructureError("tree is not connected");

  // An edge lies on an odd number of pair paths exactly when the subtree
  // below it holds an odd number of terminals.
  std::vector<std::uint8_t> odd(n, 0);
  for (Vertex v : r) odd[v] ^= 1;
  std::vector<Edge> out;
  for (std::size_t k = n; k-- > 1;) {
    const Vertex v = order[k];
    if (odd[v]) {
      out.emplace_back(v, parent[v]);
      odd[parent[v]] ^= 1;
    }
  }
  return EdgeSet(std::move(out));
}

Solution solve_path(const Instance& inst, std::uint64_t seed) {
  Solution out;
  if (inst.unhappy.size() % 2 == 1) {
    out.path = SolverPath::Handshake;
    return out;
  }
  const PlaneGraph& g = inst.graph;
  const std::vector<Vertex> path = require_path(g);
  const std::size_t n = path.size();

  if (n <= 3) {
    out.path = SolverPath::Oracle;
    const OracleResult r = brute_force(inst);
    out.feasible = r.status == OracleStatus::Feasible;
    out.happy = r.happy;
    return out;
  }

  const std::vector<Vertex> hull = hull_of(g);
  const std::vector<Pocket> pocket_list = pockets_of(g, path, hull);
  const PseudoconvexReport rep = check_with(g, path, hull, pocket_list);
  if (!rep.pseudoconvex) {
    out.path = SolverPath::SpanningTree;
    out.feasible = true;
    std::string why;
    if (auto tree = plane_spanning_tree(g, seed, &why)) {
      out.happy = tjoin_from_tree(n, *tree, inst.unhappy);
    } else {
      out.note = why;
    }
    return out;
  }

  out = solve_hugged(inst, tight_hull_from(g, hull, pocket_list));
  out.path = SolverPath::TightHullDp;
  return out;
}

bool is_universally_happy(const PlaneGraph& g) { return !is_pseudoconvex(g); }

std::vector<Vertex> adversarial_unhappy_set(const PlaneGraph& g) {
  const std::vector<Vertex> path = require_path(g);
  if (!is_pseudoconvex(g)) throw DomainError("adversarial set needs a pseudoconvex path");
  const std::size_t n = path.size();
  if (n == 2) return {0, 1};

  const std::vector<Vertex> hull = hull_of(g);
  const WeakDualTree tree = build_dual(g, tight_hull_from(g, hull, pockets_of(g, path, hull)));
  const std::size_t f_count = tree.faces.size();

  std::vector<std::vector<std::size_t>> nb(f_count);
  for (std::size_t f = 0; f < f_count; ++f) {
    for (std::size_t c : tree.faces[f].children) {
      nb[f].push_back(c);
      nb[c].push_back(f);
    }
    if (nb[f].size() > 2) throw StructureError("weak dual of the tight hull is not a path");
  }
  for (const auto& list : nb) {
    if (list.size() > 2) throw StructureError("weak dual of the tight hull is not a path");
  }

  auto contains = [&](std::size_t f, Vertex v) {
    const auto& r = tree.faces[f].skeleton.ring;
    return std::find(r.begin(), r.end(), v) != r.end();
  };
  const Vertex end_lo = std::min(path.front(), path.back());
  const Vertex end_hi = std::max(path.front(), path.back());
  std::size_t f0 = kNoFace;
  Vertex u0 = end_lo;
  for (Vertex end : {end_lo, end_hi}) {
    for (std::size_t f = 0; f < f_count && f0 == kNoFace; ++f) {
      if (nb[f].size() <= 1 && contains(f, end)) {
        f0 = f;
        u0 = end;
      }
    }
    if (f0 != kNoFace) break;
  }
  if (f0 == kNoFace) throw StructureError("no leaf face holds an endpoint of the path");

  std::vector<std::size_t> seq{f0};
  while (seq.size() < f_count) {
    const std::size_t last = seq.back();
    const std::size_t before = seq.size() > 1 ? seq[seq.size() - 2] : kNoFace;
    std::size_t next = kNoFace;
    for (std::size_t c : nb[last]) {
      if (c != before) next = c;
    }
    if (next == kNoFace) throw StructureError("weak dual of the tight hull is not a path");
    seq.push_back(next);
  }

  // Ring slot in face f of the edge shared with face other.
  auto shared_slot = [&](std::size_t f, std::size_t other) {
    const DualFace& face = tree.faces[f];
    if (face.parent == other) return face.connector;
    for (std::size_t j = 0; j < face.children.size(); ++j) {
      if (face.children[j] == other) return face.child_slot[j];
    }
    throw StructureError("faces are not adjacent");
  };

  std::vector<std::uint8_t> in_r(n, 0);
  std::vector<std::uint8_t> considered(n, 0);
  for (std::size_t i = seq.size(); i-- > 0;) {
    const std::size_t f = seq[i];
    const FaceInstance& s = tree.faces[f].skeleton;
    const std::size_t m = s.size();
    Vertex u = u0;
    if (i > 0) {
      const std::size_t slot = shared_slot(f, seq[i - 1]);
      const Vertex a = s.ring[slot];
      const Vertex b = s.ring[(slot + 1) % m];
      std::vector<Vertex> touching;
      for (std::size_t j = 0; j < m; ++j) {
        if (s.edge_in_g[j]) continue;
        for (Vertex x : {s.ring[j], s.ring[(j + 1) % m]}) {
          if (x == a || x == b) touching.push_back(x);
        }
      }
      std::sort(touching.begin(), touching.end());
      touching.erase(std::unique(touching.begin(), touching.end()), touching.end());
      if (touching.size() != 1) {
        throw StructureError("connector of a face does not meet its tight-hull edge once");
      }
      u = touching[0];
    }
    for (Vertex v : s.ring) {
      if (considered[v]) continue;
      if (m % 2 == 1 && v == u) continue;
      in_r[v] = 1;
    }
    for (Vertex v : s.ring) considered[v] = 1;
  }

  std::vector<Vertex> r;
  for (Vertex v = 0; v < n; ++v) {
    if (in_r[v]) r.push_back(v);
  }
  if (r.size() % 2 == 1) throw std::logic_error("adversarial set has odd size");
  return r;
}

}  // namespace parity
