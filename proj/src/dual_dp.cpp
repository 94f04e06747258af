#include "parity/dual_dp.hpp"

#include <algorithm>
#include <stdexcept>

#include "parity/sweep.hpp"

namespace parity {

std::string to_string(SolverPath path) {
  switch (path) {
    case SolverPath::Handshake: return "handshake";
    case SolverPath::ConvexDp: return "convex-dp";
    case SolverPath::HuggedDp: return "hugged-dp";
    case SolverPath::TightHullDp: return "tight-hull-dp";
    case SolverPath::SpanningTree: return "spanning-tree";
    case SolverPath::Oracle: return "oracle";
  }
  return "unknown";
}

HuggingCycle make_hugging_cycle(const PlaneGraph& g, std::vector<Vertex> order) {
  require_simple_spanning_cycle(g.points, order);
  HuggingCycle c;
  c.edge_in_g.resize(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    c.edge_in_g[i] = g.edges.contains(Edge(order[i], order[(i + 1) % order.size()])) ? 1 : 0;
  }
  c.order = std::move(order);
  return c;
}

std::pair<Vertex, Vertex> WeakDualTree::connector_ends(std::size_t f) const {
  const FaceInstance& s = faces[f].skeleton;
  const Vertex a = s.ring[faces[f].connector];
  const Vertex b = s.ring[(faces[f].connector + 1) % s.size()];
  return {std::min(a, b), std::max(a, b)};
}

namespace {

// Whether w leaves v into the interior of the CCW polygon, given v's cycle
// neighbours.
bool enters_interior(const Point& prev, const Point& v, const Point& next, const Point& w) {
  if (orient(prev, v, next) == Orientation::CCW) {
    return orient(v, next, w) == Orientation::CCW && orient(v, w, prev) == Orientation::CCW;
  }
  const bool outside =
      orient(v, prev, w) == Orientation::CCW && orient(v, w, next) == Orientation::CCW;
  return !outside;
}

}  // namespace

WeakDualTree build_dual(const PlaneGraph& g, const HuggingCycle& c) {
  const std::size_t n = g.vertex_count();
  require_simple_spanning_cycle(g.points, c.order);
  if (c.edge_in_g.size() != n) throw StructureError("cycle edge flags have the wrong length");
  for (std::size_t i = 0; i < n; ++i) {
    const bool in_g = g.edges.contains(Edge(c.order[i], c.order[(i + 1) % n]));
    if (in_g != static_cast<bool>(c.edge_in_g[i])) {
      throw StructureError("cycle edge flag disagrees with E at position " + std::to_string(i));
    }
  }

  WeakDualTree tree;
  std::vector<Vertex> order = c.order;
  {
    std::size_t low = 0;
    for (std::size_t i = 1; i < n; ++i) {
      if (g.points[order[i]] < g.points[order[low]]) low = i;
    }
    const Point& p = g.points[order[(low + n - 1) % n]];
    const Point& q = g.points[order[(low + 1) % n]];
    if (orient(p, g.points[order[low]], q) == Orientation::CW) {
      std::reverse(order.begin(), order.end());
      tree.reversed = true;
    }
  }
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;
  auto offset = [&](Vertex from, Vertex to) { return (pos[to] + n - pos[from]) % n; };

  std::vector<Edge> ring_edges;
  ring_edges.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ring_edges.emplace_back(order[i], order[(i + 1) % n]);
  const EdgeSet cycle_edges(ring_edges);
  {
    const EdgeSet all = set_union(cycle_edges, g.edges);
    std::vector<IndexedSegment> segs;
    segs.reserve(all.size());
    for (const Edge& e : all) segs.push_back({e.u, e.v});
    if (auto hit = find_conflict(g.points, segs)) {
      throw StructureError("cycle and G are not crossing-free together");
    }
  }

  std::vector<std::vector<Vertex>> adj(n);
  for (std::size_t i = 0; i < n; ++i) {
    adj[order[i]].push_back(order[(i + 1) % n]);
    adj[order[i]].push_back(order[(i + n - 1) % n]);
  }
  std::size_t diagonals = 0;
  for (const Edge& e : g.edges) {
    if (cycle_edges.contains(e)) continue;
    const std::size_t i = pos[e.u];
    if (!enters_interior(g.points[order[(i + n - 1) % n]], g.points[e.u],
                         g.points[order[(i + 1) % n]], g.points[e.v])) {
      throw StructureError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                           " lies outside the cycle");
    }
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
    ++diagonals;
  }
  for (Vertex v = 0; v < n; ++v) {
    std::sort(adj[v].begin(), adj[v].end(),
              [&](Vertex a, Vertex b) { return offset(v, a) < offset(v, b); });
  }

  // Half-edge v -> adj[v][k] is identified by (v, k).
  std::vector<std::size_t> first(n + 1, 0);
  for (Vertex v = 0; v < n; ++v) first[v + 1] = first[v] + adj[v].size();
  std::vector<std::size_t> face_of(first[n], kNoFace);
  std::vector<std::size_t> slot_of(first[n], 0);
  auto index_of = [&](Vertex v, Vertex w) {
    auto it = std::lower_bound(adj[v].begin(), adj[v].end(), w, [&](Vertex a, Vertex b) {
      return offset(v, a) < offset(v, b);
    });
    return static_cast<std::size_t>(it - adj[v].begin());
  };

  for (Vertex v0 = 0; v0 < n; ++v0) {
    for (std::size_t k0 = 0; k0 < adj[v0].size(); ++k0) {
      if (offset(v0, adj[v0][k0]) == n - 1) continue;  // outer face
      if (face_of[first[v0] + k0] != kNoFace) continue;
      const std::size_t id = tree.faces.size();
      DualFace face;
      Vertex v = v0;
      std::size_t k = k0;
      do {
        if (face.skeleton.ring.size() > n) throw StructureError("face walk does not close");
        face_of[first[v] + k] = id;
        slot_of[first[v] + k] = face.skeleton.ring.size();
        face.skeleton.ring.push_back(v);
        const Vertex w = adj[v][k];
        const std::size_t back = index_of(w, v);
        if (back == 0) throw StructureError("face walk reached the outer face");
        v = w;
        k = back - 1;
      } while (v != v0 || k != k0);

      FaceInstance& s = face.skeleton;
      const std::size_t m = s.ring.size();
      s.unhappy.assign(m, 0);
      s.edge_in_g.resize(m);
      for (std::size_t i = 0; i < m; ++i) {
        s.edge_in_g[i] = g.edges.contains(Edge(s.ring[i], s.ring[(i + 1) % m])) ? 1 : 0;
        if (orient(g.points[s.ring[(i + m - 1) % m]], g.points[s.ring[i]],
                   g.points[s.ring[(i + 1) % m]]) != Orientation::CCW) {
          throw StructureError("face through vertex " + std::to_string(s.ring[i]) +
                               " is not convex");
        }
      }
      tree.faces.push_back(std::move(face));
    }
  }

  const std::size_t f_count = tree.faces.size();
  if (f_count != diagonals + 1) throw StructureError("weak dual is not a tree");

  struct Link {
    std::size_t face, my_slot, their_slot;
  };
  std::vector<std::vector<Link>> links(f_count);
  for (const Edge& e : g.edges) {
    if (cycle_edges.contains(e)) continue;
    const std::size_t h1 = first[e.u] + index_of(e.u, e.v);
    const std::size_t h2 = first[e.v] + index_of(e.v, e.u);
    const std::size_t f1 = face_of[h1];
    const std::size_t f2 = face_of[h2];
    if (f1 == f2) throw StructureError("an edge has the same face on both sides");
    links[f1].push_back({f2, slot_of[h1], slot_of[h2]});
    links[f2].push_back({f1, slot_of[h2], slot_of[h1]});
  }

  auto min_vertex = [&](std::size_t f) {
    const auto& r = tree.faces[f].skeleton.ring;
    return *std::min_element(r.begin(), r.end());
  };
  std::size_t root = kNoFace;
  for (std::size_t f = 0; f < f_count; ++f) {
    if (links[f].size() > 1) continue;
    if (root == kNoFace || min_vertex(f) < min_vertex(root)) root = f;
  }
  if (root == kNoFace) throw StructureError("weak dual has no leaf");
  tree.root = root;

  {
    const FaceInstance& s = tree.faces[root].skeleton;
    const std::size_t m = s.size();
    std::optional<std::size_t> best;
    Edge best_edge;
    for (std::size_t i = 0; i < m; ++i) {
      const Edge e(s.ring[i], s.ring[(i + 1) % m]);
      if (!cycle_edges.contains(e)) continue;
      if (!best || e < best_edge) {
        best = i;
        best_edge = e;
      }
    }
    if (!best) throw StructureError("root face has no cycle edge");
    tree.faces[root].connector = *best;
  }

  tree.order.reserve(f_count);
  tree.order.push_back(root);
  std::vector<std::uint8_t> seen(f_count, 0);
  seen[root] = 1;
  for (std::size_t head = 0; head < tree.order.size(); ++head) {
    const std::size_t f = tree.order[head];
    for (const Link& l : links[f]) {
      if (l.face == tree.faces[f].parent) continue;
      if (seen[l.face]) throw StructureError("weak dual contains a cycle");
      seen[l.face] = 1;
      tree.faces[l.face].parent = f;
      tree.faces[l.face].connector = l.their_slot;
      tree.faces[f].children.push_back(l.face);
      tree.faces[f].child_slot.push_back(l.my_slot);
      tree.order.push_back(l.face);
    }
  }
  if (tree.order.size() != f_count) throw StructureError("weak dual is disconnected");
  return tree;
}

namespace {

struct FaceTable {
  std::uint8_t feasible = 0;
  std::array<std::uint8_t, 4> choice{};
  std::vector<std::size_t> flexible;  // positions in children
};

std::array<std::size_t, 2> feasible_pairs(std::uint8_t mask) {
  std::array<std::size_t, 2> out{4, 4};
  std::size_t j = 0;
  for (std::size_t p = 0; p < 4; ++p) {
    if (mask >> p & 1) out[j++] = p;
  }
  return out;
}

class HuggedDp {
 public:
  HuggedDp(const Instance& inst, WeakDualTree tree)
      : inst_(inst), tree_(std::move(tree)), table_(tree_.faces.size()) {
    mask_ = inst.unhappy_mask();
  }

  bool decide() {
    for (auto it = tree_.order.rbegin(); it != tree_.order.rend(); ++it) solve_face(*it);
    const auto [lo, hi] = tree_.connector_ends(tree_.root);
    root_pair_ = pair_index(mask_[lo], mask_[hi]);
    return table_[tree_.root].feasible >> root_pair_ & 1;
  }

  EdgeSet reconstruct() {
    std::vector<Edge> out;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{tree_.root, root_pair_}};
    while (!stack.empty()) {
      const auto [f, p] = stack.back();
      stack.pop_back();
      const std::vector<std::size_t> child_pairs = choose(f, table_[f].choice[p]);
      FaceInstance target = target_for(f, p, child_pairs);
      auto local = face_construct(target);
      if (!local) throw std::logic_error("recorded feasible pair failed to construct");
      out.insert(out.end(), local->begin(), local->end());
      const DualFace& face = tree_.faces[f];
      for (std::size_t j = 0; j < face.children.size(); ++j) {
        stack.emplace_back(face.children[j], child_pairs[j]);
      }
    }
    return EdgeSet(std::move(out));
  }

  void fill_trace(DpTrace& trace) const {
    trace.feasible.resize(table_.size());
    trace.flexible_children.resize(table_.size());
    for (std::size_t f = 0; f < table_.size(); ++f) {
      trace.feasible[f] = table_[f].feasible;
      trace.flexible_children[f] = table_[f].flexible.size();
    }
    trace.tree = tree_;
  }

 private:
  // Child pair per child for a given choice mask over the first three
  // flexible children.
  std::vector<std::size_t> choose(std::size_t f, std::uint8_t choice) const {
    const DualFace& face = tree_.faces[f];
    std::vector<std::size_t> pairs(face.children.size());
    for (std::size_t j = 0; j < face.children.size(); ++j) {
      pairs[j] = feasible_pairs(table_[face.children[j]].feasible)[0];
    }
    const auto& flex = table_[f].flexible;
    for (std::size_t b = 0; b < flex.size() && b < 3; ++b) {
      if (choice >> b & 1) {
        pairs[flex[b]] = feasible_pairs(table_[face.children[flex[b]]].feasible)[1];
      }
    }
    return pairs;
  }

  FaceInstance target_for(std::size_t f, std::size_t p,
                          const std::vector<std::size_t>& child_pairs) const {
    const DualFace& face = tree_.faces[f];
    FaceInstance t = face.skeleton;
    const std::size_t m = t.size();
    for (std::size_t i = 0; i < m; ++i) t.unhappy[i] = mask_[t.ring[i]];
    apply(t, face.connector, p, true);
    for (std::size_t j = 0; j < face.children.size(); ++j) {
      apply(t, face.child_slot[j], child_pairs[j], false);
    }
    return t;
  }

  // Sets (override) or toggles the parities of the edge at ring slot i.
  static void apply(FaceInstance& t, std::size_t i, std::size_t p, bool set) {
    const std::size_t m = t.size();
    const std::size_t a = i;
    const std::size_t b = (i + 1) % m;
    const std::size_t lo = t.ring[a] < t.ring[b] ? a : b;
    const std::size_t hi = lo == a ? b : a;
    const std::uint8_t p_lo = static_cast<std::uint8_t>(p >> 1 & 1);
    const std::uint8_t p_hi = static_cast<std::uint8_t>(p & 1);
    if (set) {
      t.unhappy[lo] = p_lo;
      t.unhappy[hi] = p_hi;
    } else {
      t.unhappy[lo] ^= p_lo;
      t.unhappy[hi] ^= p_hi;
    }
  }

  // A face with an infeasible child keeps an empty table.
  void solve_face(std::size_t f) {
    const DualFace& face = tree_.faces[f];
    FaceTable& row = table_[f];
    for (std::size_t j = 0; j < face.children.size(); ++j) {
      const std::uint8_t fm = table_[face.children[j]].feasible;
      if (fm == 0) return;
      if (__builtin_popcount(fm) == 2) row.flexible.push_back(j);
    }
    const std::size_t searched = std::min<std::size_t>(row.flexible.size(), 3);
    const std::uint8_t combos = static_cast<std::uint8_t>(1u << searched);
    const bool is_root = f == tree_.root;
    const auto [lo, hi] = tree_.connector_ends(f);

    for (std::size_t p = 0; p < 4; ++p) {
      if (is_root && p != pair_index(mask_[lo], mask_[hi])) continue;
      bool even = false;
      for (std::uint8_t choice = 0; choice < combos; ++choice) {
        const FaceInstance t = target_for(f, p, choose(f, choice));
        if (choice == 0) {
          even = std::count(t.unhappy.begin(), t.unhappy.end(), std::uint8_t{1}) % 2 == 0;
          if (!even) break;
        }
        if (face_feasible(t)) {
          row.feasible |= static_cast<std::uint8_t>(1u << p);
          row.choice[p] = choice;
          break;
        }
      }
      if (even && row.flexible.size() >= 3 && !(row.feasible >> p & 1)) {
        throw std::logic_error("three flexible children did not expose two free vertices");
      }
    }
  }

  const Instance& inst_;
  WeakDualTree tree_;
  std::vector<FaceTable> table_;
  std::vector<std::uint8_t> mask_;
  std::size_t root_pair_ = 0;
};

}  // namespace

Solution solve_hugged(const Instance& inst, const HuggingCycle& c, DpTrace* trace) {
  Solution out;
  if (inst.unhappy.size() % 2 == 1) {
    out.path = SolverPath::Handshake;
    return out;
  }
  if (inst.graph.vertex_count() < 3) throw SizeError("a hugging cycle needs at least 3 vertices");
  out.path = SolverPath::HuggedDp;
  HuggedDp dp(inst, build_dual(inst.graph, c));
  out.feasible = dp.decide();
  if (out.feasible) out.happy = dp.reconstruct();
  if (trace) dp.fill_trace(*trace);
  return out;
}

bool in_convex_position(std::span<const Point> points) {
  if (points.size() < 3) return true;
  return convex_hull(points).size() == points.size();
}

Solution convex_graph_solve(const Instance& inst) {
  Solution out;
  if (inst.unhappy.size() % 2 == 1) {
    out.path = SolverPath::Handshake;
    return out;
  }
  out.path = SolverPath::ConvexDp;
  const PlaneGraph& g = inst.graph;
  const std::size_t n = g.vertex_count();
  if (n < 3) {
    if (inst.unhappy.empty()) {
      out.feasible = true;
      out.happy = EdgeSet{};
    } else if (!g.edges.contains(Edge(0, 1))) {
      out.feasible = true;
      out.happy = EdgeSet({Edge(0, 1)});
    }
    return out;
  }
  std::vector<std::size_t> hull = convex_hull(g.points);
  if (hull.size() != n) {
    throw DomainError(
        "vertices are not in convex position; use the path solver or supply a hugging cycle");
  }
  out = solve_hugged(inst, make_hugging_cycle(g, std::vector<Vertex>(hull.begin(), hull.end())));
  out.path = SolverPath::ConvexDp;
  return out;
}

}  // namespace parity
