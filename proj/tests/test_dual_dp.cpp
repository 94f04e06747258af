#include "doctest.h"
#include "parity/dual_dp.hpp"
#include "parity/generators.hpp"
#include "parity/path_solver.hpp"
#include "support.hpp"

using namespace parity;
using testing::even_masks;
using testing::from_mask;
using testing::with_unhappy;

namespace {

HuggingCycle hull_cycle(const PlaneGraph& g) {
  const auto hull = convex_hull(g.points);
  return make_hugging_cycle(g, std::vector<Vertex>(hull.begin(), hull.end()));
}

std::size_t leaf_count(const WeakDualTree& t) {
  std::size_t leaves = 0;
  for (std::size_t f = 0; f < t.faces.size(); ++f) {
    const std::size_t degree = t.faces[f].children.size() + (t.faces[f].parent == kNoFace ? 0 : 1);
    if (degree <= 1) ++leaves;
  }
  return leaves;
}

std::size_t cycle_edges_outside_g(const PlaneGraph& g, const HuggingCycle& c) {
  std::size_t extra = 0;
  for (std::size_t i = 0; i < c.order.size(); ++i) {
    if (!g.edges.contains(Edge(c.order[i], c.order[(i + 1) % c.order.size()]))) ++extra;
  }
  return extra;
}

std::vector<Vertex> subtree_vertices(const WeakDualTree& t, std::size_t f, std::size_t n) {
  std::vector<std::uint8_t> in(n, 0);
  std::vector<std::size_t> stack{f};
  while (!stack.empty()) {
    const std::size_t x = stack.back();
    stack.pop_back();
    for (Vertex v : t.faces[x].skeleton.ring) in[v] = 1;
    for (std::size_t c : t.faces[x].children) stack.push_back(c);
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) {
    if (in[v]) out.push_back(v);
  }
  return out;
}

// The weak dual with G ∪ C connected and outerplanar has E - V + 1 bounded faces.
void check_face_count(const PlaneGraph& g, const HuggingCycle& c, const WeakDualTree& t) {
  const std::size_t edges = g.edges.size() + cycle_edges_outside_g(g, c);
  CHECK(t.faces.size() == edges - g.vertex_count() + 1);
  CHECK(t.order.size() == t.faces.size());
  for (const DualFace& f : t.faces) {
    for (std::size_t i = 0; i < f.skeleton.size(); ++i) {
      const Point& a = g.points[f.skeleton.ring[i]];
      const Point& b = g.points[f.skeleton.ring[(i + 1) % f.skeleton.size()]];
      const Point& d = g.points[f.skeleton.ring[(i + 2) % f.skeleton.size()]];
      CHECK(orient(a, b, d) == Orientation::CCW);
    }
  }
}

// Convex instance: the subtree below face f, with the connector parities
// overridden by pair p, judged by the oracle.
bool subtree_feasible(const Instance& inst, const WeakDualTree& t, std::size_t f, std::size_t p) {
  const auto [lo, hi] = t.connector_ends(f);
  std::vector<std::uint8_t> flags = inst.unhappy_mask();
  flags[lo] = static_cast<std::uint8_t>(p >> 1 & 1);
  flags[hi] = static_cast<std::uint8_t>(p & 1);
  const Instance sub = testing::induced(inst, subtree_vertices(t, f, inst.graph.vertex_count()), flags);
  return testing::oracle_feasible(sub, testing::wide_limits());
}

}  // namespace

TEST_CASE("build_dual examples") {
  SUBCASE("square path closed by its hull edge") {
    const Instance inst = testing::square_path();
    const HuggingCycle c = make_hugging_cycle(inst.graph, {0, 1, 2, 3});
    CHECK(c.edge_in_g == std::vector<std::uint8_t>{1, 1, 1, 0});
    const WeakDualTree t = build_dual(inst.graph, c);
    CHECK(t.faces.size() == 1);
    CHECK(t.root == 0);
    CHECK(t.faces[0].parent == kNoFace);
  }
  SUBCASE("convex hexagon path across the polygon") {
    const Instance inst = testing::make_instance(testing::convex_points(6),
                                                 {{0, 5}, {5, 1}, {1, 4}, {4, 2}, {2, 3}});
    const HuggingCycle c = hull_cycle(inst.graph);
    const WeakDualTree t = build_dual(inst.graph, c);
    check_face_count(inst.graph, c, t);
    CHECK(t.faces.size() == 4);
    CHECK(leaf_count(t) == 2);
    for (const DualFace& f : t.faces) CHECK(f.children.size() <= 1);
  }
  SUBCASE("tree of chords gives a branching dual") {
    const Instance inst = testing::make_instance(
        testing::convex_points(6), {{0, 2}, {2, 4}, {4, 0}, {0, 1}, {3, 4}});
    const HuggingCycle c = hull_cycle(inst.graph);
    const WeakDualTree t = build_dual(inst.graph, c);
    check_face_count(inst.graph, c, t);
    CHECK(t.faces.size() == 4);
    CHECK(leaf_count(t) == 3);
  }
  SUBCASE("clockwise cycle is accepted") {
    const Instance inst = testing::square_path();
    const WeakDualTree t = build_dual(inst.graph, make_hugging_cycle(inst.graph, {3, 2, 1, 0}));
    CHECK(t.reversed);
    CHECK(t.faces.size() == 1);
  }
  SUBCASE("random convex graphs") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const Instance inst = generate(GenKind::ConvexGraph, 12, seed);
      const HuggingCycle c = hull_cycle(inst.graph);
      check_face_count(inst.graph, c, build_dual(inst.graph, c));
    }
  }
}

TEST_CASE("build_dual rejects a cycle that does not hug convexly") {
  // The quad path is not pseudoconvex: closing it with v0-v3 leaves a reflex corner.
  const Instance inst = testing::quad_path();
  CHECK_THROWS_AS(build_dual(inst.graph, make_hugging_cycle(inst.graph, {0, 1, 2, 3})), Error);
  CHECK_THROWS_AS(make_hugging_cycle(inst.graph, {0, 1, 2}), Error);
}

TEST_CASE("solve_hugged examples") {
  const Instance inst = testing::square_path({0, 3});
  const HuggingCycle c = make_hugging_cycle(inst.graph, {0, 1, 2, 3});
  const Solution s = solve_hugged(inst, c);
  CHECK(s.feasible);
  REQUIRE(s.happy);
  CHECK(*s.happy == EdgeSet({Edge(0, 3)}));
  CHECK(s.path == SolverPath::HuggedDp);

  const Solution odd = solve_hugged(testing::square_path({0, 1, 3}), c);
  CHECK_FALSE(odd.feasible);
  CHECK(odd.path == SolverPath::Handshake);

  CHECK_FALSE(solve_hugged(testing::square_path({1, 2}), c).feasible);
}

TEST_CASE("convex_graph_solve examples") {
  SUBCASE("convex path with both endpoints unhappy uses the hull edge") {
    const Instance inst = testing::make_instance(testing::convex_points(5),
                                                 {{0, 1}, {1, 2}, {2, 3}, {3, 4}}, {0, 4});
    const Solution s = convex_graph_solve(inst);
    CHECK(s.feasible);
    REQUIRE(s.happy);
    CHECK(verify_happy_set(inst, *s.happy).passed());
    CHECK(testing::oracle_feasible(inst));
  }
  SUBCASE("single face defers to the face solver") {
    for (std::size_t k = 3; k <= 7; ++k) {
      for (std::uint64_t r : even_masks(k)) {
        const std::uint64_t full = (std::uint64_t{1} << k) - 1;
        const Solution s = convex_graph_solve(testing::convex_ring(k, full, r));
        CHECK(s.feasible == face_feasible(testing::ring_face(k, full, r)));
      }
    }
  }
  SUBCASE("not in convex position") {
    CHECK_THROWS_AS(convex_graph_solve(testing::quad_path()), DomainError);
  }
  SUBCASE("tiny inputs") {
    const Instance two = testing::make_instance({{0, 0}, {1, 0}}, {}, {0, 1});
    CHECK(convex_graph_solve(two).feasible);
    const Instance joined = testing::make_instance({{0, 0}, {1, 0}}, {{0, 1}}, {0, 1});
    CHECK_FALSE(convex_graph_solve(joined).feasible);
  }
}

TEST_CASE("face tables match the oracle on every subtree") {
  std::size_t checked = 0, flexible_faces = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Instance base = generate(GenKind::ConvexGraph, 8, seed);
    const HuggingCycle c = hull_cycle(base.graph);
    for (std::uint64_t m : even_masks(8)) {
      if (m % 7 != seed % 7) continue;  // a deterministic slice of all R
      const Instance inst = with_unhappy(base, from_mask(m));
      DpTrace trace;
      const Solution s = solve_hugged(inst, c, &trace);
      const WeakDualTree& t = trace.tree;
      if (trace.feasible.empty()) continue;  // a child with no feasible pair stops the DP
      for (std::size_t f = 0; f < t.faces.size(); ++f) {
        if (f == t.root) continue;
        const std::uint8_t mask = trace.feasible[f];
        CHECK(__builtin_popcount(mask) <= 2);
        std::optional<std::size_t> xor_class;
        for (std::size_t p = 0; p < 4; ++p) {
          const bool dp = mask >> p & 1;
          CHECK(dp == subtree_feasible(inst, t, f, p));
          ++checked;
          if (dp) {
            const std::size_t cls = (p >> 1 ^ p) & 1;
            if (xor_class) CHECK(*xor_class == cls);
            xor_class = cls;
          }
        }
        if (trace.flexible_children[f] >= 3) ++flexible_faces;
      }
      CHECK(s.feasible == testing::oracle_feasible(inst));
      if (s.happy) CHECK(verify_happy_set(inst, *s.happy).passed());
    }
  }
  CHECK(checked > 1000);
  MESSAGE("faces with at least three flexible children: " << flexible_faces);
}

TEST_CASE("faces with three or more flexible children accept both parity-consistent pairs") {
  // Centre square with four ears; one ear is the root, so the centre has
  // three children, each flexible for suitable R.
  const Instance base = testing::make_instance(
      testing::convex_points(12), {{0, 3}, {3, 6}, {6, 9}, {9, 0}, {0, 1}, {1, 2}, {3, 4}, {4, 5},
                                   {6, 7}, {7, 8}, {9, 10}, {10, 11}});
  const HuggingCycle c = hull_cycle(base.graph);
  std::size_t seen = 0;
  for (std::uint64_t m : even_masks(12)) {
    const Instance inst = with_unhappy(base, from_mask(m));
    DpTrace trace;
    solve_hugged(inst, c, &trace);
    if (trace.feasible.empty()) continue;
    const WeakDualTree& t = trace.tree;
    for (std::size_t f = 0; f < t.faces.size(); ++f) {
      if (f == t.root || trace.flexible_children[f] < 3) continue;
      ++seen;
      const auto [lo, hi] = t.connector_ends(f);
      const std::vector<Vertex> sub = subtree_vertices(t, f, inst.graph.vertex_count());
      std::size_t inner_unhappy = 0;
      for (Vertex v : sub) {
        if (v != lo && v != hi && inst.unhappy_mask()[v]) ++inner_unhappy;
      }
      for (std::size_t p = 0; p < 4; ++p) {
        const bool consistent = (inner_unhappy + (p >> 1) + (p & 1)) % 2 == 0;
        if (!consistent) continue;
        CHECK(subtree_feasible(inst, t, f, p));
        CHECK((trace.feasible[f] >> p & 1));
      }
    }
    // the root itself: feasible iff |R| is even
    if (trace.flexible_children[t.root] >= 3) {
      ++seen;
      CHECK(testing::oracle_feasible(inst));
    }
  }
  CHECK(seen > 0);
}

TEST_CASE("local satisfiability of a leaf is not enough") {
  // Leaf face {0,1,2} behind connector 0-2 is satisfiable on its own with
  // H = {01}, but then the rest cannot fix 3 and 4; the only global answers
  // change the parities the leaf delivers at 0 and 2.
  const Instance inst = testing::make_instance(
      {{604807355112, 673759288302},
       {124462276196, 53355187161},
       {0, 0},
       {372159928601, 894433034621},
       {458761086331, 878300392781},
       {551614327106, 777461923966}},
      {{0, 2}, {0, 3}, {3, 4}, {4, 5}}, {0, 1, 3, 4});
  const HuggingCycle c = hull_cycle(inst.graph);
  DpTrace trace;
  const Solution s = solve_hugged(inst, c, &trace);
  CHECK(s.feasible);
  REQUIRE(s.happy);
  CHECK(verify_happy_set(inst, *s.happy).passed());
  CHECK(testing::oracle_feasible(inst));

  const WeakDualTree& t = trace.tree;
  std::optional<std::size_t> leaf;
  for (std::size_t f = 0; f < t.faces.size(); ++f) {
    std::vector<Vertex> ring = t.faces[f].skeleton.ring;
    std::sort(ring.begin(), ring.end());
    if (ring == std::vector<Vertex>{0, 1, 2}) leaf = f;
  }
  REQUIRE(leaf);
  FaceInstance local = t.faces[*leaf].skeleton;
  for (std::size_t i = 0; i < local.size(); ++i) local.unhappy[i] = inst.unhappy_mask()[local.ring[i]];
  CHECK(face_feasible(local));

  // committing the leaf to the original parities of 0 and 2
  std::vector<std::uint8_t> flags = inst.unhappy_mask();
  flags[0] = flags[2] = 0;
  CHECK_FALSE(testing::oracle_feasible(testing::induced(inst, {0, 2, 3, 4, 5}, flags)));
  // the constructed answer does not satisfy the leaf on its own
  std::vector<Edge> in_leaf;
  for (const Edge& e : *s.happy) {
    if (e.v <= 2) in_leaf.push_back(e);
  }
  const auto odd = odd_degree_vertices(std::span<const Edge>(in_leaf));
  CHECK(odd != std::vector<Vertex>{0, 1});
}

TEST_CASE("hugged answers stay inside the cycle and match the restricted oracle") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const Instance base = generate(GenKind::Spiral, 8, seed);
    const HuggingCycle c = tight_hull(base.graph);
    std::vector<Point> poly;
    for (Vertex v : c.order) poly.push_back(base.graph.points[v]);
    for (std::uint64_t m : even_masks(8)) {
      const Instance inst = with_unhappy(base, from_mask(m));
      const Solution s = solve_hugged(inst, c);
      const OracleResult within = brute_force_within(inst, c.order, testing::wide_limits());
      CHECK(s.feasible == (within.status == OracleStatus::Feasible));
      if (!s.happy) continue;
      CHECK(verify_happy_set(inst, *s.happy).passed());
      for (const Edge& e : *s.happy) {
        const Point a = inst.graph.points[e.u], b = inst.graph.points[e.v];
        CHECK(locate_point({a.x + b.x, a.y + b.y}, 2, poly) >= 0);
      }
    }
  }
}
