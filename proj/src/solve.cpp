#include "parity/solve.hpp"

#include "parity/dual_dp.hpp"
#include "parity/path_solver.hpp"

namespace parity {

Solution solve_instance(const Instance& inst, const std::optional<std::vector<Vertex>>& cycle,
                        std::uint64_t seed) {
  const PlaneGraph& g = inst.graph;
  if (inst.unhappy.size() % 2 != 0) {
    Solution out;
    out.path = SolverPath::Handshake;
    return out;
  }
  if (cycle) return solve_hugged(inst, make_hugging_cycle(g, *cycle));
  if (path_order(g)) return solve_path(inst, seed);
  if (in_convex_position(g.points)) return convex_graph_solve(inst);
  throw DomainError(
      "unsupported graph class: expected a path, a graph in convex position, or a hugging cycle");
}

}  // namespace parity
