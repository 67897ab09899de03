#pragma once

// Shared fixtures and independent reference implementations for tests. The
// reference code here deliberately avoids the library's search internals:
// brute-force filters and enumerations act as oracles for them.

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "momapf/cost_vec.hpp"
#include "momapf/grid_map.hpp"
#include "momapf/instance.hpp"
#include "momapf/joint.hpp"
#include "momapf/rng.hpp"
#include "momapf/solution.hpp"

namespace momapf::testsupport {

inline Graph make_path_graph(int n) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, std::move(edges));
}

/// 0-1-3 and 0-2-3, the two-route fixture used across policy/oracle tests.
inline Graph make_diamond_graph() {
  return Graph(4, {{0, 1}, {1, 3}, {0, 2}, {2, 3}});
}

/// Cost model with all-ones agent vectors and explicit per-edge scales
/// given in the graph's canonical edge order, so edge costs for every
/// agent are the scales themselves.
inline CostModel explicit_cost_model(const Graph& g, int agents,
                                     std::vector<CostVec> edge_scales) {
  if (edge_scales.size() != g.edges().size())
    throw std::invalid_argument("edge_scales size mismatch with graph");
  CostModel model;
  model.objectives = static_cast<int>(edge_scales.at(0).size());
  CostVec ones;
  ones.c.assign(static_cast<std::size_t>(model.objectives), 1);
  for (int i = 0; i < agents; ++i) model.agent_vectors.push_back(ones);
  model.edge_scales = std::move(edge_scales);
  return model;
}

/// Every move (and wait) costs `value` in every component for every agent.
inline CostModel uniform_cost_model(const Graph& g, int agents,
                                    int objectives, Cost value = 1) {
  CostModel model;
  model.objectives = objectives;
  CostVec v;
  v.c.assign(static_cast<std::size_t>(objectives), value);
  CostVec ones;
  ones.c.assign(static_cast<std::size_t>(objectives), 1);
  for (int i = 0; i < agents; ++i) model.agent_vectors.push_back(v);
  model.edge_scales.assign(g.edges().size(), ones);
  return model;
}

/// Reference non-dominated filter: pairwise scan, first witness kept per
/// duplicate cost. Output lex-sorted.
inline std::vector<CostVec> brute_nondominated(std::vector<CostVec> vs) {
  std::vector<CostVec> out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    bool drop = false;
    for (std::size_t j = 0; j < vs.size() && !drop; ++j) {
      if (j == i) continue;
      if (dominates(vs[j], vs[i])) drop = true;
      if (j < i && vs[j] == vs[i]) drop = true;
    }
    if (!drop) out.push_back(vs[i]);
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

/// Costs of every simple u->goal path, by exhaustive DFS. With strictly
/// positive costs these cover the full Pareto frontier of all paths.
inline std::vector<CostVec> enumerate_simple_path_costs(
    const Graph& g, const CostModel& costs, int agent, VertexId from,
    VertexId to) {
  std::vector<CostVec> found;
  std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);
  CostVec acc = CostVec::zeros(static_cast<std::size_t>(costs.objectives));
  auto dfs = [&](auto&& self, VertexId u) -> void {
    if (u == to) {
      found.push_back(acc);
      return;
    }
    used[static_cast<std::size_t>(u)] = 1;
    for (VertexId w : g.neighbors(u)) {
      if (w == u || used[static_cast<std::size_t>(w)]) continue;
      const CostVec step = costs.edge_cost(agent, u, w, g);
      acc += step;
      self(self, w);
      for (std::size_t m = 0; m < acc.size(); ++m) acc[m] -= step[m];
    }
    used[static_cast<std::size_t>(u)] = 0;
  };
  dfs(dfs, from);
  return found;
}

/// Conflict-aware single-objective Dijkstra over the joint graph. The M=1
/// reference optimum; std::nullopt when the joint goal is unreachable.
inline std::optional<Cost> scalar_joint_dijkstra(const Instance& inst) {
  using Key = std::pair<Cost, JointVertex>;
  const JointVertex start = inst.joint_start();
  const JointVertex goal = inst.joint_goal();
  std::map<JointVertex, Cost> dist;
  auto cmp = [](const Key& a, const Key& b) {
    if (a.first != b.first) return a.first > b.first;
    return joint_lex_less(b.second, a.second);
  };
  std::priority_queue<Key, std::vector<Key>, decltype(cmp)> pq(cmp);
  dist[start] = 0;
  pq.push({0, start});
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    auto it = dist.find(u);
    if (it == dist.end() || it->second < d) continue;
    if (u == goal) return d;
    // product of per-agent moves
    const int n = inst.agents;
    JointVertex child(u);
    std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
    std::vector<Cost> part(static_cast<std::size_t>(n) + 1, 0);
    part[0] = d;
    int level = 0;
    while (level >= 0) {
      if (level == n) {
        if (psi(u, child).empty()) {
          auto dit = dist.find(child);
          if (dit == dist.end() || part[static_cast<std::size_t>(n)] < dit->second) {
            dist[child] = part[static_cast<std::size_t>(n)];
            pq.push({part[static_cast<std::size_t>(n)], child});
          }
        }
        --level;
        continue;
      }
      const auto& nbrs = inst.graph.neighbors(u[static_cast<std::size_t>(level)]);
      auto& p = pick[static_cast<std::size_t>(level)];
      if (p >= nbrs.size()) {
        p = 0;
        --level;
        continue;
      }
      const VertexId w = nbrs[p++];
      child[static_cast<std::size_t>(level)] = w;
      part[static_cast<std::size_t>(level) + 1] =
          part[static_cast<std::size_t>(level)] +
          inst.step_cost(level, u[static_cast<std::size_t>(level)], w)[0];
      ++level;
    }
  }
  return std::nullopt;
}

inline std::string grid_text(int width, int height,
                             const std::vector<char>& cells) {
  std::ostringstream out;
  out << "type octile\nheight " << height << "\nwidth " << width << "\nmap\n";
  for (int r = 0; r < height; ++r) {
    for (int c = 0; c < width; ++c)
      out << cells[static_cast<std::size_t>(r) * width + c];
    out << "\n";
  }
  return out.str();
}

inline bool graph_connected(const Graph& g) {
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  int count = 0;
  while (!stack.empty()) {
    const VertexId u = stack.back();
    stack.pop_back();
    ++count;
    for (VertexId w : g.neighbors(u)) {
      if (w != u && !seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        stack.push_back(w);
      }
    }
  }
  return count == g.vertex_count();
}

/// Random grid whose free space is one connected component. Obstacles are
/// resampled until connectivity holds.
inline GridMap random_connected_gridmap(Rng& rng, int width, int height,
                                        double obstacle_fraction) {
  const int cells = width * height;
  const int obstacles = static_cast<int>(cells * obstacle_fraction);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<char> grid(static_cast<std::size_t>(cells), '.');
    const auto picks = rng.sample_without_replacement(cells, obstacles);
    for (VertexId c : picks) grid[static_cast<std::size_t>(c)] = '@';
    if (obstacles >= cells) continue;
    GridMap map = parse_map(grid_text(width, height, grid));
    if (graph_connected(map.graph)) return map;
  }
  throw std::runtime_error("could not sample a connected grid");
}

inline Instance random_instance(const Graph& graph, int agents,
                                int objectives, std::uint64_t seed,
                                Cost lo = 1, Cost hi = 10) {
  Instance inst;
  inst.graph = graph;
  inst.agents = agents;
  inst.objectives = objectives;
  inst.costs = gen_costs(graph, agents, objectives,
                         Rng::derive(seed, 0).next_u64(), lo, hi);
  gen_endpoints(graph, agents, Rng::derive(seed, 1).next_u64(), inst.starts,
                inst.goals);
  return inst;
}

inline std::vector<CostVec> cost_set(const std::vector<Solution>& sols) {
  std::vector<CostVec> out;
  out.reserve(sols.size());
  for (const auto& s : sols) out.push_back(s.cost);
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

/// Random connected graph on n <= 8 vertices: spanning tree plus extras.
inline Graph random_small_graph(Rng& rng, int n, int extra_edges) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int v = 1; v < n; ++v) {
    const auto u = static_cast<VertexId>(rng.next_below(std::uint64_t(v)));
    edges.emplace_back(u, v);
  }
  for (int k = 0; k < extra_edges && n >= 2; ++k) {
    const auto u = static_cast<VertexId>(rng.next_below(std::uint64_t(n)));
    const auto v = static_cast<VertexId>(rng.next_below(std::uint64_t(n)));
    if (u != v) edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  return Graph(n, std::move(edges));
}

}  // namespace momapf::testsupport
