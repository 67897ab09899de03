#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "momapf/cost_vec.hpp"
#include "momapf/instance.hpp"
#include "momapf/joint.hpp"
#include "momapf/policy.hpp"
#include "momapf/weight.hpp"

namespace momapf::detail {

/// Interns joint vertices and caches their scaled heuristic term
/// h(v) * w.num. With f defined as g * w.den + h * w.num, dominance and
/// lexicographic comparisons of f stay integer-exact for rational w.
class JointVertexTable {
 public:
  JointVertexTable(const std::vector<ParetoPolicy>* policies, Weight w)
      : policies_(policies), w_(w) {}

  std::int32_t intern(const JointVertex& v) {
    auto it = ids_.find(v);
    if (it != ids_.end()) return it->second;
    const auto id = static_cast<std::int32_t>(vertices_.size());
    ids_.emplace(v, id);
    vertices_.push_back(v);
    h_scaled_.push_back(joint_heuristic(*policies_, v).scaled(w_.num));
    return id;
  }

  /// Id of v if already interned, else -1.
  std::int32_t lookup(const JointVertex& v) const {
    auto it = ids_.find(v);
    return it == ids_.end() ? -1 : it->second;
  }

  const JointVertex& vertex(std::int32_t id) const { return vertices_[id]; }
  const CostVec& h_scaled(std::int32_t id) const { return h_scaled_[id]; }

  CostVec f_scaled(const CostVec& g, std::int32_t vid) const {
    return g.scaled(w_.den) + h_scaled_[vid];
  }

  bool lex_less_vertex(std::int32_t a, std::int32_t b) const {
    return joint_lex_less(vertices_[a], vertices_[b]);
  }

 private:
  const std::vector<ParetoPolicy>* policies_;
  Weight w_;
  std::unordered_map<JointVertex, std::int32_t, JointVertexHash> ids_;
  std::vector<JointVertex> vertices_;
  std::vector<CostVec> h_scaled_;
};

/// Enumerates the Cartesian product of per-agent move lists from joint
/// vertex u, invoking fn(child, g_child) for each combination. Costs are
/// accumulated one agent at a time.
template <typename Fn>
void for_each_joint_successor(const Instance& inst, const JointVertex& u,
                              const CostVec& g_base,
                              const std::vector<const std::vector<VertexId>*>&
                                  moves,
                              Fn&& fn) {
  const int n = inst.agents;
  JointVertex child(u);
  std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
  std::vector<CostVec> partial(static_cast<std::size_t>(n) + 1);
  partial[0] = g_base;
  int level = 0;
  while (level >= 0) {
    if (level == n) {
      fn(child, partial[static_cast<std::size_t>(n)]);
      --level;
      continue;
    }
    const auto& options = *moves[static_cast<std::size_t>(level)];
    auto& p = pick[static_cast<std::size_t>(level)];
    if (p >= options.size()) {
      p = 0;
      --level;
      continue;
    }
    const VertexId w = options[p++];
    child[static_cast<std::size_t>(level)] = w;
    partial[static_cast<std::size_t>(level) + 1] =
        partial[static_cast<std::size_t>(level)] +
        inst.step_cost(level, u[static_cast<std::size_t>(level)], w);
    ++level;
  }
}

}  // namespace momapf::detail
