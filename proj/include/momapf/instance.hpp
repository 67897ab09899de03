#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "momapf/cost_vec.hpp"
#include "momapf/graph.hpp"
#include "momapf/joint.hpp"

namespace momapf {

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Per-agent cost structure. Agent i traversing non-loop edge e pays the
/// componentwise product a^i * b(e); waiting (the self-loop) anywhere pays
/// a^i. All components are >= 1, so path costs grow strictly in every
/// component with each step.
struct CostModel {
  int objectives = 0;                  // M
  std::vector<CostVec> agent_vectors;  // a^i, one per agent
  std::vector<CostVec> edge_scales;    // b(e), aligned with Graph::edges()

  CostVec edge_cost(int agent, VertexId u, VertexId v, const Graph& g) const {
    const CostVec& a = agent_vectors[static_cast<std::size_t>(agent)];
    if (u == v) return a;
    const EdgeId e = g.edge_index(u, v);
    if (e < 0)
      throw std::invalid_argument("edge_cost on non-edge (" +
                                  std::to_string(u) + "," + std::to_string(v) +
                                  ")");
    const CostVec& b = edge_scales[static_cast<std::size_t>(e)];
    CostVec out = a;
    for (std::size_t m = 0; m < out.size(); ++m) out[m] *= b[m];
    return out;
  }
};

struct Instance {
  Graph graph;
  CostModel costs;
  std::vector<VertexId> starts;  // pairwise distinct
  std::vector<VertexId> goals;   // pairwise distinct
  int agents = 0;                // N
  int objectives = 0;            // M

  JointVertex joint_start() const {
    return JointVertex(starts.begin(), starts.end());
  }
  JointVertex joint_goal() const {
    return JointVertex(goals.begin(), goals.end());
  }

  /// Per-agent cost of one synchronized step. A solution's cost is the sum
  /// of the individual path costs, so an agent that has arrived and parks
  /// at its own goal adds nothing while it sits there; every other action,
  /// waits included, costs its edge vector. All solvers, the oracle and
  /// the validator share this rule.
  CostVec step_cost(int agent, VertexId u, VertexId v) const {
    if (u == v && u == goals[static_cast<std::size_t>(agent)])
      return CostVec::zeros(static_cast<std::size_t>(objectives));
    return costs.edge_cost(agent, u, v, graph);
  }
};

/// Every a^i and b(e) component drawn uniformly from [lo, hi]. Self-loop
/// scales are implicitly all-ones so a wait always costs exactly a^i.
CostModel gen_costs(const Graph& graph, int agents, int objectives,
                    std::uint64_t seed, Cost lo = 1, Cost hi = 10);

/// Starts sampled uniformly without replacement, goals likewise
/// (independently). Throws if the graph has fewer than `agents` vertices.
void gen_endpoints(const Graph& graph, int agents, std::uint64_t seed,
                   std::vector<VertexId>& starts, std::vector<VertexId>& goals);

/// Structural checks: distinct starts/goals, valid ids, strictly positive
/// costs, consistent M/N. Throws ValidationError naming the bad field.
void validate_instance(const Instance& inst);

Instance load_instance(const std::string& path);
void save_instance(const Instance& inst, const std::string& path);

/// JSON text forms used by load/save; exposed for tests.
Instance instance_from_json_text(const std::string& text,
                                 const std::string& origin_dir = "");
std::string instance_to_json_text(const Instance& inst);

}  // namespace momapf
