#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "parity/dual_dp.hpp"
#include "parity/graph.hpp"
#include "parity/solution.hpp"

namespace parity {

/// Above this many vertices the spanning-tree construction is skipped; the
/// decision is still returned.
inline constexpr std::size_t kSpanningTreeLimit = 500;

/// Vertices in path order starting at the lower-index endpoint, or nullopt
/// when G is not a path. A single vertex is a path.
std::optional<std::vector<Vertex>> path_order(const PlaneGraph& g);

struct Pocket {
  Edge hull_edge;
  std::size_t hull_index = 0;  // edge hull[i] -> hull[i+1] of the CCW hull
  std::vector<Vertex> chain;   // from hull[i] to hull[i+1] along the path
  std::vector<Vertex> reflex;  // in chain order
};

/// One pocket per hull edge missing from E. Needs a path with n >= 3.
std::vector<Pocket> pockets(const PlaneGraph& g);

struct PseudoconvexReport {
  enum class Reason { None, SingleVertex, EndpointOffHull, RayMissesHullEdge };

  bool pseudoconvex = false;
  Reason reason = Reason::None;
  std::size_t pocket = 0;      // for RayMissesHullEdge
  Vertex vertex = 0;           // offending endpoint or reflex vertex
  std::int64_t dx = 0, dy = 0; // offending ray direction

  std::string describe() const;
};

/// Throws DomainError if G is not a path.
PseudoconvexReport check_pseudoconvex(const PlaneGraph& g);
bool is_pseudoconvex(const PlaneGraph& g);

/// The tight hull as a hugging cycle, checked to be convexly hugging.
/// Throws DomainError for non-pseudoconvex input.
HuggingCycle tight_hull(const PlaneGraph& g);

/// A crossing-free spanning tree inside Vis(G), or nullopt (pseudoconvex
/// input, n = 2, or nothing found within the search bounds; `diagnostic`
/// says which).
std::optional<EdgeSet> plane_spanning_tree(const PlaneGraph& g, std::uint64_t seed = 0,
                                           std::string* diagnostic = nullptr);

/// Edges lying on an odd number of tree paths when R is paired up in sorted
/// order. Throws ParityError for odd |R| and StructureError if `tree` does
/// not span n vertices.
EdgeSet tjoin_from_tree(std::size_t n, const EdgeSet& tree, const std::vector<Vertex>& r);

/// Throws DomainError if G is not a path.
Solution solve_path(const Instance& inst, std::uint64_t seed = 0);

bool is_universally_happy(const PlaneGraph& g);

/// An even R with no happy set. Throws DomainError unless G is pseudoconvex.
std::vector<Vertex> adversarial_unhappy_set(const PlaneGraph& g);

}  // namespace parity
