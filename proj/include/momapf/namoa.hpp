#pragma once

#include "momapf/instance.hpp"
#include "momapf/policy.hpp"
#include "momapf/solution.hpp"
#include "momapf/weight.hpp"

namespace momapf {

struct NamoaOptions {
  Weight w{1, 1};
  Budget budget;
};

/// Baseline exact solver: NAMOA* run directly on the joint graph G^N with
/// conflict-pruned transitions and full per-agent branching (every neighbor
/// plus the wait). With w=1 and no budget exhaustion it returns the exact
/// cost-unique Pareto-optimal set.
SolutionSet solve_namoa(const Instance& inst,
                        const std::vector<ParetoPolicy>& policies,
                        const NamoaOptions& options);

}  // namespace momapf
