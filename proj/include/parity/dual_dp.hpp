#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <vector>

#include "parity/face_solver.hpp"
#include "parity/graph.hpp"
#include "parity/solution.hpp"

namespace parity {

inline constexpr std::size_t kNoFace = std::numeric_limits<std::size_t>::max();

/// Cycle through every vertex with G in its closed interior.
struct HuggingCycle {
  std::vector<Vertex> order;
  std::vector<std::uint8_t> edge_in_g;  // order[i] -> order[i+1]
};

/// Fills edge_in_g from E-membership. Does not validate.
HuggingCycle make_hugging_cycle(const PlaneGraph& g, std::vector<Vertex> order);

struct DualFace {
  FaceInstance skeleton;  // ring in CCW order; unhappy flags left at zero
  std::size_t parent = kNoFace;
  std::size_t connector = 0;  // ring position of the edge shared with the parent
  std::vector<std::size_t> children;
  std::vector<std::size_t> child_slot;  // ring position of each child's connector
};

struct WeakDualTree {
  std::vector<DualFace> faces;
  std::size_t root = 0;
  std::vector<std::size_t> order;  // parents before children
  bool reversed = false;           // the cycle was supplied clockwise

  /// Connector endpoints of face f as (lower id, higher id).
  std::pair<Vertex, Vertex> connector_ends(std::size_t f) const;
};

/// Faces of G u C, their convexity, and the rooted dual tree. Throws
/// StructureError when C is not a convexly hugging cycle of G.
/// O(n log n) for the crossing check, O(n) otherwise.
WeakDualTree build_dual(const PlaneGraph& g, const HuggingCycle& c);

/// Parity pair index for (p_lo, p_hi).
constexpr std::size_t pair_index(int p_lo, int p_hi) { return static_cast<std::size_t>(2 * p_lo + p_hi); }

struct DpTrace {
  WeakDualTree tree;
  std::vector<std::uint8_t> feasible;  // per face: bit pair_index set if feasible
  std::vector<std::size_t> flexible_children;
};

/// Decides and constructs within the closed region of a convexly hugging
/// cycle. SolverPath is HuggedDp unless the parity shortcut fires.
Solution solve_hugged(const Instance& inst, const HuggingCycle& c, DpTrace* trace = nullptr);

/// Convex-position inputs: the hull is the hugging cycle. Throws DomainError
/// when some vertex is not a hull vertex.
Solution convex_graph_solve(const Instance& inst);

/// True iff every vertex is a vertex of the convex hull.
bool in_convex_position(std::span<const Point> points);

}  // namespace parity
