#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "parity/errors.hpp"
#include "parity/geom.hpp"

namespace parity {

using Vertex = std::size_t;

/// Undirected edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Sorted, duplicate-free set of undirected edges.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(std::vector<Edge> edges);

  bool contains(const Edge& e) const;
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }

  auto begin() const { return edges_.begin(); }
  auto end() const { return edges_.end(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& operator[](std::size_t i) const { return edges_[i]; }

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

 private:
  std::vector<Edge> edges_;
};

EdgeSet set_union(const EdgeSet& a, const EdgeSet& b);
EdgeSet symmetric_difference(const EdgeSet& a, const EdgeSet& b);

struct PlaneGraph {
  std::vector<Point> points;
  EdgeSet edges;

  std::size_t vertex_count() const { return points.size(); }
  Segment segment(const Edge& e) const { return {points[e.u], points[e.v]}; }
  std::vector<std::vector<Vertex>> adjacency() const;
};

struct Instance {
  PlaneGraph graph;
  std::vector<Vertex> unhappy;  // sorted ascending, unique

  std::vector<std::uint8_t> unhappy_mask() const;
};

enum class ViolationKind {
  CoordinateRange,
  DuplicatePoint,
  BadIndex,
  SelfLoop,
  DuplicateEdge,
  Crossing,
  VertexOnEdge,
  Collinear,
  DuplicateUnhappy,
};

std::string to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::vector<std::int64_t> witnesses;  // offending point/edge/vertex indices
  std::string message;
};

/// Raised by validate_instance with every violation it found.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

struct ValidationOptions {
  /// Collinear-triple check, O(n^2 log n). Off for large trusted inputs.
  bool check_general_position = true;
};

/// Builds an Instance from untrusted data or throws ValidationError.
Instance validate_instance(const std::vector<Point>& points,
                           const std::vector<std::pair<std::int64_t, std::int64_t>>& edges,
                           const std::vector<std::int64_t>& unhappy,
                           const ValidationOptions& options = {});

/// First collinear triple (sorted indices), if any. O(n^2 log n).
std::optional<std::array<std::size_t, 3>> find_collinear_triple(std::span<const Point> points);

/// Naive O(n^2 |E|) visibility graph.
EdgeSet visibility_graph(const PlaneGraph& g);

/// Vertices of odd degree, counting multiplicity.
std::vector<Vertex> odd_degree_vertices(std::span<const Edge> edges);
inline std::vector<Vertex> odd_degree_vertices(const EdgeSet& edges) {
  return odd_degree_vertices(std::span<const Edge>(edges.edges()));
}

enum class FailureKind { BadEdge, NotVisible, Crossing, ParityMismatch };

struct VerificationFailure {
  FailureKind kind;
  std::vector<Edge> edges;        // offending edges (one or two)
  std::vector<Vertex> vertices;   // for ParityMismatch: symmetric difference
  std::string message;
};

struct VerificationReport {
  std::vector<VerificationFailure> failures;
  bool passed() const { return failures.empty(); }
};

/// Checks H is a crossing-free subset of Vis(G) whose odd-degree set is R.
/// Runs in O((|H| + |E|) log) when H is valid; witnesses are collected by
/// exhaustive scans only when something failed.
VerificationReport verify_happy_set(const Instance& inst, const EdgeSet& h);

/// Edges of `vis` that lie in the closed region bounded by the simple cycle
/// `cycle` (a permutation of all vertices). Throws StructureError if the
/// cycle is not simple or does not span every vertex.
EdgeSet restrict_to_region(std::span<const Point> points, const EdgeSet& vis,
                           std::span<const Vertex> cycle);

/// Throws StructureError unless `cycle` visits every vertex exactly once and
/// its edges pairwise do not conflict.
void require_simple_spanning_cycle(std::span<const Point> points, std::span<const Vertex> cycle);

}  // namespace parity
