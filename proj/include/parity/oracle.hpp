#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "parity/graph.hpp"

namespace parity {

struct OracleLimits {
  std::size_t max_vertices = 10;
  std::size_t max_vis_edges = 26;  // hard ceiling 64
  std::uint64_t node_budget = 100'000'000;
};

enum class OracleStatus { Feasible, Infeasible, OutOfBudget };

std::string to_string(OracleStatus s);

struct OracleResult {
  OracleStatus status = OracleStatus::Infeasible;
  std::optional<EdgeSet> happy;
  std::uint64_t nodes = 0;
  std::string reason;  // set when out of budget
};

/// Exhaustive include/exclude search over Vis(G) for a crossing-free subset
/// whose odd vertices are exactly R. Uses nothing but graph_model.
OracleResult brute_force(const Instance& inst, const OracleLimits& limits = {});

/// Same search over the visibility edges inside the closed region of `cycle`.
OracleResult brute_force_within(const Instance& inst, std::span<const Vertex> cycle,
                                const OracleLimits& limits = {});

/// Same search over an explicit candidate set.
OracleResult brute_force_over(const Instance& inst, const EdgeSet& candidates,
                              const OracleLimits& limits = {});

}  // namespace parity
