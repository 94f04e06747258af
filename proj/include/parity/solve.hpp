#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "parity/graph.hpp"
#include "parity/solution.hpp"

namespace parity {

/// Routes by graph class: supplied hugging cycle, then path, then convex
/// position. An odd |R| is rejected before any of that. Throws DomainError
/// for an unsupported class.
Solution solve_instance(const Instance& inst, const std::optional<std::vector<Vertex>>& cycle = {},
                        std::uint64_t seed = 0);

}  // namespace parity
