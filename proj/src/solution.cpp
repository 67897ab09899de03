#include "momapf/solution.hpp"

#include <algorithm>
#include <stdexcept>

#include "momapf/joint.hpp"

namespace momapf {

std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::SolvedComplete:
      return "solved_complete";
    case SolveStatus::TimedOut:
      return "timed_out";
    case SolveStatus::Infeasible:
      return "infeasible";
    case SolveStatus::OracleOverflow:
      return "oracle_overflow";
  }
  return "unknown";
}

SolveStatus solve_status_from_string(const std::string& s) {
  if (s == "solved_complete") return SolveStatus::SolvedComplete;
  if (s == "timed_out") return SolveStatus::TimedOut;
  if (s == "infeasible") return SolveStatus::Infeasible;
  if (s == "oracle_overflow") return SolveStatus::OracleOverflow;
  throw std::invalid_argument("unknown solve status: " + s);
}

std::vector<std::string> validate_solutions(
    const Instance& inst, const std::vector<Solution>& solutions) {
  std::vector<std::string> issues;
  auto complain = [&issues](std::size_t k, const std::string& what) {
    issues.push_back("solution " + std::to_string(k) + ": " + what);
  };

  for (std::size_t k = 0; k < solutions.size(); ++k) {
    const Solution& sol = solutions[k];
    if (static_cast<int>(sol.paths.size()) != inst.agents) {
      complain(k, "wrong number of agent paths");
      continue;
    }
    const std::size_t len = sol.paths[0].size();
    bool shape_ok = len >= 1;
    for (const auto& p : sol.paths)
      if (p.size() != len) shape_ok = false;
    if (!shape_ok) {
      complain(k, "agent paths have unequal or zero lengths");
      continue;
    }
    for (int i = 0; i < inst.agents; ++i) {
      if (sol.paths[i].front() != inst.starts[i])
        complain(k, "agent " + std::to_string(i) + " does not start at v_o");
      if (sol.paths[i].back() != inst.goals[i])
        complain(k, "agent " + std::to_string(i) + " does not end at v_f");
    }
    CostVec total = CostVec::zeros(static_cast<std::size_t>(inst.objectives));
    for (std::size_t t = 0; t + 1 < len; ++t) {
      JointVertex u, v;
      for (int i = 0; i < inst.agents; ++i) {
        const VertexId a = sol.paths[i][t];
        const VertexId b = sol.paths[i][t + 1];
        u.push_back(a);
        v.push_back(b);
        if (!inst.graph.has_edge(a, b)) {
          complain(k, "agent " + std::to_string(i) + " uses non-edge (" +
                          std::to_string(a) + "," + std::to_string(b) +
                          ") at t=" + std::to_string(t));
        } else {
          total += inst.step_cost(i, a, b);
        }
      }
      if (!psi(u, v).empty())
        complain(k, "conflict at t=" + std::to_string(t));
    }
    if (total != sol.cost)
      complain(k, "recorded cost " + to_string(sol.cost) +
                      " != recomputed " + to_string(total));
  }

  for (std::size_t a = 0; a < solutions.size(); ++a) {
    for (std::size_t b = 0; b < solutions.size(); ++b) {
      if (a == b) continue;
      if (b > a && solutions[a].cost == solutions[b].cost)
        issues.push_back("solutions " + std::to_string(a) + " and " +
                         std::to_string(b) + " share a cost vector");
      else if (dominates(solutions[a].cost, solutions[b].cost))
        issues.push_back("solution " + std::to_string(a) + " dominates " +
                         std::to_string(b));
    }
  }
  return issues;
}

void sort_solutions(std::vector<Solution>& solutions) {
  std::sort(solutions.begin(), solutions.end(),
            [](const Solution& a, const Solution& b) {
              return lex_less(a.cost, b.cost);
            });
}

void reduce_to_nondominated(std::vector<Solution>& solutions) {
  sort_solutions(solutions);
  std::vector<Solution> kept;
  for (Solution& cand : solutions) {
    bool pruned = false;
    for (const Solution& k : kept) {
      if (dominates_or_equal(k.cost, cand.cost)) {
        pruned = true;
        break;
      }
    }
    if (pruned) continue;
    std::erase_if(kept, [&cand](const Solution& k) {
      return dominates(cand.cost, k.cost);
    });
    kept.push_back(std::move(cand));
  }
  sort_solutions(kept);
  solutions = std::move(kept);
}

}  // namespace momapf
