#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "momapf/cost_vec.hpp"
#include "momapf/instance.hpp"

namespace momapf {

enum class SolveStatus {
  SolvedComplete,
  TimedOut,
  Infeasible,
  OracleOverflow,
};

std::string to_string(SolveStatus s);
SolveStatus solve_status_from_string(const std::string& s);

/// One conflict-free joint plan: synchronized per-agent vertex sequences of
/// equal length and the summed cost vector.
struct Solution {
  CostVec cost;
  std::vector<std::vector<VertexId>> paths;  // paths[agent][t]
};

struct SearchStats {
  std::int64_t n_expanded = 0;
  std::int64_t n_generated = 0;
  std::int64_t conflicts_found = 0;
  double policy_time_ms = 0.0;  // filled by the caller that timed policies
  double search_time_ms = 0.0;
  SolveStatus status = SolveStatus::SolvedComplete;
};

struct SolutionSet {
  std::vector<Solution> solutions;
  SearchStats stats;

  bool complete() const { return stats.status == SolveStatus::SolvedComplete; }
};

/// Cooperative limits, checked once per pop. expand_limit < 0 means
/// unlimited; expand_limit == 0 times out before the first pop.
struct Budget {
  double time_limit_ms = std::numeric_limits<double>::infinity();
  std::int64_t expand_limit = -1;
};

/// Re-validates solutions independently of any solver: endpoints, edge
/// existence, conflict-freeness under psi at every step, recomputed costs,
/// and mutual non-dominance / cost-uniqueness across the set. Returns
/// human-readable violations; empty means sound.
std::vector<std::string> validate_solutions(
    const Instance& inst, const std::vector<Solution>& solutions);

/// Canonical output order: lexicographic by cost vector.
void sort_solutions(std::vector<Solution>& solutions);

/// Keep only mutually non-dominated, cost-unique solutions (first witness
/// per cost wins after lex sorting). No-op on already-Pareto sets.
void reduce_to_nondominated(std::vector<Solution>& solutions);

}  // namespace momapf
