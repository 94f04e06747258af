#include <random>

#include "doctest.h"
#include "parity/generators.hpp"
#include "parity/graph.hpp"
#include "parity/path_solver.hpp"
#include "support.hpp"

using namespace parity;
using testing::square_path;

namespace {

bool has_kind(const ValidationError& e, ViolationKind k) {
  for (const auto& v : e.violations()) {
    if (v.kind == k) return true;
  }
  return false;
}

ValidationError violations_of(const std::vector<Point>& pts, const testing::RawEdges& edges,
                              const std::vector<std::int64_t>& r = {}) {
  try {
    validate_instance(pts, edges, r);
  } catch (const ValidationError& e) {
    return e;
  }
  FAIL("instance unexpectedly valid");
  return ValidationError({});
}

}  // namespace

TEST_CASE("validate_instance") {
  const std::vector<Point> sq{{0, 0}, {10, 0}, {10, 10}, {0, 10}};
  CHECK_NOTHROW(validate_instance(sq, {{0, 1}, {1, 2}, {2, 3}}, {}));
  CHECK(has_kind(violations_of(sq, {{0, 2}, {1, 3}}), ViolationKind::Crossing));
  CHECK(has_kind(violations_of({{0, 0}, {1, 1}, {2, 2}}, {}), ViolationKind::Collinear));
  CHECK(has_kind(violations_of(sq, {{0, 4}}), ViolationKind::BadIndex));
  CHECK(has_kind(violations_of(sq, {{1, 1}}), ViolationKind::SelfLoop));
  CHECK(has_kind(violations_of(sq, {{0, 1}, {1, 0}}), ViolationKind::DuplicateEdge));
  CHECK(has_kind(violations_of(sq, {}, {2, 2}), ViolationKind::DuplicateUnhappy));
  CHECK(has_kind(violations_of({{0, 0}, {0, 0}, {1, 0}}, {}), ViolationKind::DuplicatePoint));
  CHECK(has_kind(violations_of({{0, 0}, {kMaxCoordinate + 1, 0}, {1, 1}}, {}),
                 ViolationKind::CoordinateRange));

  ValidationOptions loose;
  loose.check_general_position = false;
  CHECK_NOTHROW(validate_instance({{0, 0}, {1, 1}, {2, 2}}, {}, {}, loose));
  // an isolated vertex inside an edge is rejected even without the general-position check
  CHECK_THROWS_AS(validate_instance({{0, 0}, {1, 1}, {2, 2}, {5, 0}}, {{0, 2}}, {}, loose), ValidationError);
}

TEST_CASE("validate_instance reports every violation") {
  const auto e = violations_of({{0, 0}, {10, 0}, {10, 10}, {0, 10}}, {{0, 2}, {1, 3}, {0, 0}}, {9});
  CHECK(has_kind(e, ViolationKind::Crossing));
  CHECK(has_kind(e, ViolationKind::SelfLoop));
  CHECK(has_kind(e, ViolationKind::BadIndex));
}

TEST_CASE("visibility_graph") {
  CHECK(visibility_graph(testing::triangle_path().graph) == EdgeSet({Edge(0, 2)}));
  CHECK(visibility_graph(square_path().graph) == EdgeSet({Edge(0, 3), Edge(0, 2), Edge(1, 3)}));
  const Instance cycle = testing::make_instance({{0, 0}, {10, 0}, {10, 10}, {0, 10}},
                                                {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(visibility_graph(cycle.graph) == EdgeSet({Edge(0, 2), Edge(1, 3)}));
}

TEST_CASE("visibility_graph agrees with the pairwise recheck") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    for (GenKind kind : {GenKind::XMonotone, GenKind::ConvexGraph, GenKind::Spiral}) {
      const Instance inst = generate(kind, 9, seed);
      const EdgeSet vis = visibility_graph(inst.graph);
      CHECK(vis == testing::naive_visibility(inst.graph));
      for (const Edge& e : vis) {
        CHECK_FALSE(inst.graph.edges.contains(e));
        for (const Edge& g : inst.graph.edges) {
          CHECK_FALSE(properly_cross(inst.graph.segment(e), inst.graph.segment(g)));
        }
      }
    }
  }
}

TEST_CASE("odd_degree_vertices") {
  CHECK(odd_degree_vertices(EdgeSet{}).empty());
  CHECK(odd_degree_vertices(EdgeSet({Edge(0, 1), Edge(1, 2)})) == std::vector<Vertex>{0, 2});
  const std::vector<Edge> multi{Edge(0, 1), Edge(0, 1), Edge(1, 2)};
  CHECK(odd_degree_vertices(std::span<const Edge>(multi)) == std::vector<Vertex>{1, 2});
}

TEST_CASE("odd degree sets have even size and obey the symmetric-difference law") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 200; ++round) {
    const Instance inst = generate(GenKind::ConvexGraph, 9, static_cast<std::uint64_t>(round));
    const EdgeSet vis = visibility_graph(inst.graph);
    // two random crossing-free subsets, mutually non-crossing
    std::vector<Edge> pool(vis.begin(), vis.end());
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<Edge> h1, h2, taken;
    for (const Edge& e : pool) {
      bool ok = true;
      for (const Edge& t : taken) ok = ok && !properly_cross(inst.graph.segment(e), inst.graph.segment(t));
      if (!ok) continue;
      taken.push_back(e);
      (rng() & 1 ? h1 : h2).push_back(e);
    }
    const EdgeSet a(h1), b(h2);
    CHECK(odd_degree_vertices(a).size() % 2 == 0);
    std::vector<Vertex> expect;
    const auto oa = odd_degree_vertices(a), ob = odd_degree_vertices(b);
    std::set_symmetric_difference(oa.begin(), oa.end(), ob.begin(), ob.end(), std::back_inserter(expect));
    CHECK(odd_degree_vertices(symmetric_difference(a, b)) == expect);
  }
}

TEST_CASE("verify_happy_set") {
  CHECK(verify_happy_set(square_path({0, 3}), EdgeSet({Edge(0, 3)})).passed());

  const auto parity = verify_happy_set(square_path({0, 3}), EdgeSet({Edge(0, 2)}));
  REQUIRE_FALSE(parity.passed());
  CHECK(parity.failures[0].kind == FailureKind::ParityMismatch);
  CHECK(parity.failures[0].vertices == std::vector<Vertex>{2, 3});

  const auto cross = verify_happy_set(square_path({1, 2}), EdgeSet({Edge(0, 2), Edge(1, 3)}));
  REQUIRE_FALSE(cross.passed());
  CHECK(cross.failures[0].kind == FailureKind::Crossing);

  const auto dup = verify_happy_set(square_path({0, 1}), EdgeSet({Edge(0, 1)}));
  REQUIRE_FALSE(dup.passed());
  CHECK(dup.failures[0].kind == FailureKind::NotVisible);

  CHECK_FALSE(verify_happy_set(square_path(), EdgeSet({Edge(0, 7)})).passed());
}

TEST_CASE("verify_happy_set ignores edge order") {
  std::mt19937_64 rng(3);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Instance inst = generate(GenKind::XMonotone, 8, seed);
    const OracleResult res = brute_force(inst);
    if (!res.happy) continue;
    std::vector<Edge> shuffled(res.happy->begin(), res.happy->end());
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(verify_happy_set(inst, EdgeSet(shuffled)).passed());
  }
}

TEST_CASE("restrict_to_region") {
  SUBCASE("convex instance keeps all of Vis") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const Instance inst = generate(GenKind::ConvexGraph, 8, seed);
      const auto hull = convex_hull(inst.graph.points);
      const EdgeSet vis = visibility_graph(inst.graph);
      CHECK(restrict_to_region(inst.graph.points, vis, std::vector<Vertex>(hull.begin(), hull.end())) == vis);
    }
  }
  SUBCASE("empty") {
    const Instance inst = square_path();
    CHECK(restrict_to_region(inst.graph.points, EdgeSet{}, std::vector<Vertex>{0, 1, 2, 3}).empty());
  }
  SUBCASE("edges outside the tight hull are dropped") {
    std::size_t dropped = 0;
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const Instance inst = generate(GenKind::Spiral, 9, seed);
      const HuggingCycle c = tight_hull(inst.graph);
      std::vector<Point> poly;
      for (Vertex v : c.order) poly.push_back(inst.graph.points[v]);
      const EdgeSet vis = visibility_graph(inst.graph);
      const EdgeSet region = restrict_to_region(inst.graph.points, vis, c.order);
      for (const Edge& e : vis) {
        const Point a = inst.graph.points[e.u], b = inst.graph.points[e.v];
        bool crosses = false;
        for (std::size_t i = 0; i < poly.size(); ++i) {
          crosses = crosses || classify({a, b}, {poly[i], poly[(i + 1) % poly.size()]}) == SegmentRelation::ProperCross;
        }
        const bool outside = locate_point({a.x + b.x, a.y + b.y}, 2, poly) < 0;
        CHECK(region.contains(e) == !(crosses || outside));
        if (!region.contains(e)) ++dropped;
      }
    }
    CHECK(dropped > 0);
  }
}
