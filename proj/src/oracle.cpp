#include "momapf/oracle.hpp"

#include <chrono>
#include <deque>
#include <unordered_map>

#include "momapf/joint.hpp"

namespace momapf {

namespace {

struct OracleLabel {
  JointVertex v;
  CostVec g;
  std::int64_t parent = -1;
  bool alive = true;
};

}  // namespace

SolutionSet enumerate_pareto(const Instance& inst, std::int64_t label_cap,
                             OracleOrder order) {
  const auto t0 = std::chrono::steady_clock::now();
  SolutionSet result;

  const JointVertex start = inst.joint_start();
  const JointVertex goal = inst.joint_goal();

  std::deque<OracleLabel> labels;
  // per joint vertex: currently non-dominated label ids
  std::unordered_map<JointVertex, std::vector<std::int64_t>, JointVertexHash>
      frontier;
  std::deque<std::int64_t> work;
  std::int64_t retained = 0;
  std::int64_t expanded = 0;
  bool overflow = false;

  auto try_insert = [&](JointVertex v, CostVec g,
                        std::int64_t parent) -> std::int64_t {
    auto& front = frontier[v];
    for (std::int64_t id : front)
      if (dominates_or_equal(labels[id].g, g)) return -1;
    std::erase_if(front, [&](std::int64_t id) {
      if (dominates(g, labels[id].g)) {
        labels[id].alive = false;
        return true;
      }
      return false;
    });
    const std::int64_t id = static_cast<std::int64_t>(labels.size());
    labels.push_back(OracleLabel{std::move(v), std::move(g), parent, true});
    front.push_back(id);
    if (++retained > label_cap) overflow = true;
    return id;
  };

  const std::int64_t root = try_insert(
      start, CostVec::zeros(static_cast<std::size_t>(inst.objectives)), -1);
  if (root >= 0) work.push_back(root);

  while (!work.empty() && !overflow) {
    std::int64_t id;
    if (order == OracleOrder::Fifo) {
      id = work.front();
      work.pop_front();
    } else {
      id = work.back();
      work.pop_back();
    }
    if (!labels[id].alive) continue;
    const JointVertex u = labels[id].v;
    // any continuation past the goal is strictly dominated by the prefix
    if (u == goal) continue;
    ++expanded;
    const CostVec base = labels[id].g;
    const int n = inst.agents;

    JointVertex child(u);
    // odometer over per-agent neighbor choices, cost accumulated per digit
    std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
    std::vector<CostVec> partial(static_cast<std::size_t>(n) + 1);
    partial[0] = base;
    int level = 0;
    while (level >= 0 && !overflow) {
      if (level == n) {
        if (psi(u, child).empty()) {
          const std::int64_t cid = try_insert(child, partial[n], id);
          if (cid >= 0) work.push_back(cid);
        }
        --level;
        continue;
      }
      const auto& nbrs = inst.graph.neighbors(u[level]);
      if (pick[level] >= nbrs.size()) {
        pick[level] = 0;
        --level;
        continue;
      }
      const VertexId w = nbrs[pick[level]++];
      child[level] = w;
      partial[level + 1] = partial[level] + inst.step_cost(level, u[level], w);
      ++level;
    }
  }

  if (overflow) {
    result.stats.status = SolveStatus::OracleOverflow;
  } else {
    result.stats.status = SolveStatus::SolvedComplete;
    auto it = frontier.find(goal);
    if (it != frontier.end()) {
      for (std::int64_t id : it->second) {
        Solution sol;
        sol.cost = labels[id].g;
        std::vector<JointVertex> chain;
        for (std::int64_t cur = id; cur >= 0; cur = labels[cur].parent)
          chain.push_back(labels[cur].v);
        sol.paths.assign(static_cast<std::size_t>(inst.agents), {});
        for (auto rit = chain.rbegin(); rit != chain.rend(); ++rit)
          for (int i = 0; i < inst.agents; ++i)
            sol.paths[i].push_back((*rit)[i]);
        result.solutions.push_back(std::move(sol));
      }
      sort_solutions(result.solutions);
    }
  }
  result.stats.n_generated = static_cast<std::int64_t>(labels.size());
  result.stats.n_expanded = expanded;
  result.stats.search_time_ms =
      std::chrono::duration<double, std::milli>(
          std::chrono::steady_clock::now() - t0)
          .count();
  return result;
}

}  // namespace momapf
