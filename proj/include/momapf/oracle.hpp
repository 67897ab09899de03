#pragma once

#include <cstdint>

#include "momapf/instance.hpp"
#include "momapf/solution.hpp"

namespace momapf {

/// Work-list discipline of the oracle. The resulting frontier is the same
/// either way; the knob exists so tests can demonstrate order independence.
enum class OracleOrder { Fifo, Lifo };

/// Brute-force Pareto enumeration over the joint graph: plain
/// label-correcting with conflict-pruned transitions and dominated-or-equal
/// pruning per joint vertex, run to exhaustion. No heuristic, no goal
/// filtering, no policies — deliberately shares nothing with the solvers
/// beyond the domain types, so it can serve as an independent oracle.
///
/// label_cap bounds cumulative retained labels; exceeding it yields status
/// OracleOverflow with an empty solution list.
SolutionSet enumerate_pareto(const Instance& inst, std::int64_t label_cap,
                             OracleOrder order = OracleOrder::Fifo);

}  // namespace momapf
