#include "parity/oracle.hpp"

#include <vector>

namespace parity {

std::string to_string(OracleStatus s) {
  switch (s) {
    case OracleStatus::Feasible: return "feasible";
    case OracleStatus::Infeasible: return "infeasible";
    case OracleStatus::OutOfBudget: return "out-of-budget";
  }
  return "unknown";
}

namespace {

class Search {
 public:
  Search(const Instance& inst, const EdgeSet& candidates, std::uint64_t budget)
      : edges_(candidates.edges()), budget_(budget) {
    const std::size_t n = inst.graph.vertex_count();
    const std::size_t m = edges_.size();
    conflicts_.assign(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        const SegmentRelation rel =
            classify(inst.graph.segment(edges_[i]), inst.graph.segment(edges_[j]));
        if (rel == SegmentRelation::ProperCross || rel == SegmentRelation::Touching) {
          conflicts_[i] |= std::uint64_t{1} << j;
          conflicts_[j] |= std::uint64_t{1} << i;
        }
      }
    }
    target_.assign(n, 0);
    for (Vertex r : inst.unhappy) target_[r] = 1;
    parity_.assign(n, 0);
    remaining_.assign(n, 0);
    for (const Edge& e : edges_) {
      ++remaining_[e.u];
      ++remaining_[e.v];
    }
  }

  OracleResult run() {
    OracleResult out;
    bool ok = true;
    for (std::size_t v = 0; v < target_.size(); ++v) {
      if (remaining_[v] == 0 && target_[v]) ok = false;
    }
    bool found = false;
    if (ok) {
      try {
        found = dfs(0);
      } catch (const Exhausted&) {
        out.status = OracleStatus::OutOfBudget;
        out.nodes = nodes_;
        out.reason = "node budget exhausted";
        return out;
      }
    }
    out.nodes = nodes_;
    if (found) {
      out.status = OracleStatus::Feasible;
      std::vector<Edge> h;
      for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (chosen_ >> i & 1) h.push_back(edges_[i]);
      }
      out.happy = EdgeSet(std::move(h));
    } else {
      out.status = OracleStatus::Infeasible;
    }
    return out;
  }

 private:
  struct Exhausted {};

  bool settled(Vertex v) const { return remaining_[v] > 0 || parity_[v] == target_[v]; }

  bool dfs(std::size_t i) {
    if (++nodes_ > budget_) throw Exhausted{};
    if (i == edges_.size()) return true;  // every vertex was settled on the way
    const Edge& e = edges_[i];
    --remaining_[e.u];
    --remaining_[e.v];

    if (!(chosen_ & conflicts_[i])) {
      chosen_ |= std::uint64_t{1} << i;
      parity_[e.u] ^= 1;
      parity_[e.v] ^= 1;
      if (settled(e.u) && settled(e.v) && dfs(i + 1)) return true;
      parity_[e.u] ^= 1;
      parity_[e.v] ^= 1;
      chosen_ &= ~(std::uint64_t{1} << i);
    }
    if (settled(e.u) && settled(e.v) && dfs(i + 1)) return true;

    ++remaining_[e.u];
    ++remaining_[e.v];
    return false;
  }

  const std::vector<Edge>& edges_;
  std::uint64_t budget_;
  std::vector<std::uint64_t> conflicts_;
  std::vector<std::uint8_t> target_;
  std::vector<std::uint8_t> parity_;
  std::vector<std::size_t> remaining_;
  std::uint64_t chosen_ = 0;
  std::uint64_t nodes_ = 0;
};

OracleResult out_of_budget(std::string reason) {
  OracleResult r;
  r.status = OracleStatus::OutOfBudget;
  r.reason = std::move(reason);
  return r;
}

}  // namespace

OracleResult brute_force_over(const Instance& inst, const EdgeSet& candidates,
                              const OracleLimits& limits) {
  if (limits.max_vis_edges > 64) throw DomainError("the oracle handles at most 64 candidate edges");
  if (inst.unhappy.empty()) {
    OracleResult r;
    r.status = OracleStatus::Feasible;
    r.happy = EdgeSet{};
    return r;
  }
  if (inst.graph.vertex_count() > limits.max_vertices) {
    return out_of_budget("instance has " + std::to_string(inst.graph.vertex_count()) +
                         " vertices, limit " + std::to_string(limits.max_vertices));
  }
  if (candidates.size() > limits.max_vis_edges) {
    return out_of_budget("instance has " + std::to_string(candidates.size()) +
                         " candidate edges, limit " + std::to_string(limits.max_vis_edges));
  }
  Search search(inst, candidates, limits.node_budget);
  return search.run();
}

OracleResult brute_force(const Instance& inst, const OracleLimits& limits) {
  if (inst.unhappy.empty() || inst.graph.vertex_count() > limits.max_vertices) {
    return brute_force_over(inst, {}, limits);
  }
  return brute_force_over(inst, visibility_graph(inst.graph), limits);
}

OracleResult brute_force_within(const Instance& inst, std::span<const Vertex> cycle,
                                const OracleLimits& limits) {
  if (inst.unhappy.empty() || inst.graph.vertex_count() > limits.max_vertices) {
    return brute_force_over(inst, {}, limits);
  }
  const EdgeSet region = restrict_to_region(inst.graph.points, visibility_graph(inst.graph), cycle);
  return brute_force_over(inst, region, limits);
}

}  // namespace parity
