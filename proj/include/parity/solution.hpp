#pragma once

#include <optional>
#include <string>

#include "parity/graph.hpp"

namespace parity {

enum class SolverPath {
  Handshake,     // |R| odd, rejected before any face work
  ConvexDp,
  HuggedDp,      // caller-supplied hugging cycle
  TightHullDp,
  SpanningTree,
  Oracle,
};

std::string to_string(SolverPath path);

struct Solution {
  bool feasible = false;
  /// Present whenever a construction was produced. A feasible answer may lack
  /// one only on the spanning-tree route above its size cap.
  std::optional<EdgeSet> happy;
  SolverPath path = SolverPath::Handshake;
  std::string note;
};

}  // namespace parity
