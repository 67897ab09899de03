#pragma once

#include <stdexcept>
#include <vector>

#include "momapf/cost_vec.hpp"
#include "momapf/instance.hpp"
#include "momapf/joint.hpp"

namespace momapf {

struct UnreachableVertex : std::runtime_error {
  int agent;
  VertexId vertex;
  UnreachableVertex(int agent_, VertexId vertex_)
      : std::runtime_error("vertex " + std::to_string(vertex_) +
                           " cannot reach the goal of agent " +
                           std::to_string(agent_)),
        agent(agent_),
        vertex(vertex_) {}
};

/// Per-agent result of the exhaustive backward multi-objective search from
/// the agent's goal. For each vertex u reachable from the goal:
///   frontier(u) — the full Pareto frontier of u -> goal path costs,
///                 lex-sorted;
///   h(u)        — componentwise minimum over frontier(u), an admissible
///                 per-component underestimate;
///   succ(u)     — neighbors w with cost(u,w) + c_w in frontier(u) for some
///                 c_w in frontier(w), i.e. first steps of non-dominated
///                 paths. Empty at the goal itself: every outgoing step
///                 strictly increases all components.
/// moves(u) is the solver-facing policy: succ(u) everywhere except at the
/// goal, where the only individually sensible action is to wait in place.
class ParetoPolicy {
 public:
  int agent = -1;
  VertexId goal = -1;

  bool reachable(VertexId u) const {
    return reachable_[static_cast<std::size_t>(u)];
  }

  const std::vector<CostVec>& frontier(VertexId u) const {
    check_reachable(u);
    return frontier_[static_cast<std::size_t>(u)];
  }

  const CostVec& h(VertexId u) const {
    check_reachable(u);
    return h_[static_cast<std::size_t>(u)];
  }

  const std::vector<VertexId>& succ(VertexId u) const {
    check_reachable(u);
    return succ_[static_cast<std::size_t>(u)];
  }

  const std::vector<VertexId>& moves(VertexId u) const {
    if (u == goal) return goal_wait_;
    return succ(u);
  }

 private:
  void check_reachable(VertexId u) const {
    if (!reachable_[static_cast<std::size_t>(u)])
      throw UnreachableVertex(agent, u);
  }

  std::vector<std::vector<CostVec>> frontier_;
  std::vector<CostVec> h_;
  std::vector<std::vector<VertexId>> succ_;
  std::vector<char> reachable_;
  std::vector<VertexId> goal_wait_;

  friend ParetoPolicy compute_policy(const Graph&, const CostModel&, int,
                                     VertexId);
};

/// Exhaustive backward multi-objective Dijkstra for one agent.
ParetoPolicy compute_policy(const Graph& graph, const CostModel& costs,
                            int agent, VertexId goal);

/// Policies for all agents of an instance, in agent order.
std::vector<ParetoPolicy> compute_policies(const Instance& inst);

/// h(v) = sum over agents of h^i(v^i). Throws UnreachableVertex if any
/// component cannot reach its goal, which makes the instance infeasible for
/// that agent.
CostVec joint_heuristic(const std::vector<ParetoPolicy>& policies,
                        const JointVertex& v);

}  // namespace momapf
