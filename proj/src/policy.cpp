#include "momapf/policy.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>

#include "momapf/pareto_frontier.hpp"

namespace momapf {

namespace {

struct Label {
  CostVec g;
  VertexId v;
  std::uint64_t seq;
};

struct LabelOrder {
  // min-heap on (g lex, vertex, seq); std::priority_queue is a max-heap,
  // so the comparison is reversed
  bool operator()(const Label& a, const Label& b) const {
    if (a.g != b.g) return lex_less(b.g, a.g);
    if (a.v != b.v) return b.v < a.v;
    return b.seq < a.seq;
  }
};

bool frontier_prunes(const std::vector<CostVec>& frontier, const CostVec& g) {
  for (const CostVec& c : frontier)
    if (dominates_or_equal(c, g)) return true;
  return false;
}

// frontiers are built in lex pop order, so exact membership is a binary
// search
bool frontier_contains(const std::vector<CostVec>& frontier,
                       const CostVec& g) {
  auto it = std::lower_bound(frontier.begin(), frontier.end(), g, lex_less);
  return it != frontier.end() && *it == g;
}

}  // namespace

ParetoPolicy compute_policy(const Graph& graph, const CostModel& costs,
                            int agent, VertexId goal) {
  if (!graph.valid_vertex(goal))
    throw std::invalid_argument("compute_policy: invalid goal vertex");
  const auto n = static_cast<std::size_t>(graph.vertex_count());

  ParetoPolicy policy;
  policy.agent = agent;
  policy.goal = goal;
  policy.frontier_.resize(n);
  policy.succ_.resize(n);
  policy.h_.resize(n);
  policy.reachable_.assign(n, 0);
  policy.goal_wait_ = {goal};

  // Backward label-setting to exhaustion. Labels pop in lex order, so a
  // popped label that survives the dominance check is a final frontier
  // member; no later label can dominate it. Self-loops are skipped: a wait
  // strictly increases every component and never lies on a non-dominated
  // path to the goal.
  std::priority_queue<Label, std::vector<Label>, LabelOrder> open;
  std::uint64_t seq = 0;
  open.push(Label{CostVec::zeros(static_cast<std::size_t>(costs.objectives)),
                  goal, seq++});
  while (!open.empty()) {
    Label top = open.top();
    open.pop();
    auto& frontier = policy.frontier_[static_cast<std::size_t>(top.v)];
    if (frontier_prunes(frontier, top.g)) continue;
    frontier.push_back(top.g);
    for (VertexId w : graph.neighbors(top.v)) {
      if (w == top.v) continue;
      CostVec g2 = top.g + costs.edge_cost(agent, top.v, w, graph);
      if (frontier_prunes(policy.frontier_[static_cast<std::size_t>(w)], g2))
        continue;
      open.push(Label{std::move(g2), w, seq++});
    }
  }

  for (std::size_t u = 0; u < n; ++u) {
    if (policy.frontier_[u].empty()) continue;
    policy.reachable_[u] = 1;
    policy.h_[u] = component_min(policy.frontier_[u]);
  }
  for (std::size_t u = 0; u < n; ++u) {
    if (!policy.reachable_[u]) continue;
    const auto uid = static_cast<VertexId>(u);
    for (VertexId w : graph.neighbors(uid)) {
      if (w == uid || !policy.reachable_[static_cast<std::size_t>(w)])
        continue;
      const CostVec step = costs.edge_cost(agent, uid, w, graph);
      for (const CostVec& cw :
           policy.frontier_[static_cast<std::size_t>(w)]) {
        if (frontier_contains(policy.frontier_[u], step + cw)) {
          policy.succ_[u].push_back(w);
          break;
        }
      }
    }
  }
  return policy;
}

std::vector<ParetoPolicy> compute_policies(const Instance& inst) {
  std::vector<ParetoPolicy> policies;
  policies.reserve(static_cast<std::size_t>(inst.agents));
  for (int i = 0; i < inst.agents; ++i)
    policies.push_back(
        compute_policy(inst.graph, inst.costs, i, inst.goals[i]));
  return policies;
}

CostVec joint_heuristic(const std::vector<ParetoPolicy>& policies,
                        const JointVertex& v) {
  if (policies.empty() || v.size() != policies.size())
    throw std::invalid_argument("joint_heuristic: arity mismatch");
  CostVec sum = policies[0].h(v[0]);
  for (std::size_t i = 1; i < policies.size(); ++i) sum += policies[i].h(v[i]);
  return sum;
}

}  // namespace momapf
