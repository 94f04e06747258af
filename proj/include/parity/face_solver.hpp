#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "parity/graph.hpp"

namespace parity {

/// A convex face whose G-edges all lie on its boundary.
///
/// ring[i] -> ring[i+1] is boundary edge i; edge_in_g[i] says whether it is
/// already in G. Chords and boundary edges with edge_in_g[i] == 0 may be added.
struct FaceInstance {
  std::vector<Vertex> ring;
  std::vector<std::uint8_t> unhappy;
  std::vector<std::uint8_t> edge_in_g;

  std::size_t size() const { return ring.size(); }
};

/// Whether the face admits a crossing-free set of usable edges whose odd
/// vertices are exactly the unhappy ones. O(|ring|).
bool face_feasible(const FaceInstance& f);

/// A happy set for the face in global vertex ids, or nullopt when
/// face_feasible(f) is false. O(|ring| + |result|).
std::optional<std::vector<Edge>> face_construct(const FaceInstance& f);

}  // namespace parity
