#include <doctest.h>

#include "momapf/oracle.hpp"
#include "support/fixtures.hpp"

using namespace momapf;
namespace ts = momapf::testsupport;

namespace {

Instance single_agent_path() {
  Instance inst;
  inst.graph = ts::make_path_graph(3);
  inst.costs = ts::uniform_cost_model(inst.graph, 1, 2);
  inst.agents = 1;
  inst.objectives = 2;
  inst.starts = {0};
  inst.goals = {2};
  return inst;
}

Instance swap_deadlock() {
  Instance inst;
  inst.graph = ts::make_path_graph(2);
  inst.costs = ts::uniform_cost_model(inst.graph, 2, 2);
  inst.agents = 2;
  inst.objectives = 2;
  inst.starts = {0, 1};
  inst.goals = {1, 0};
  return inst;
}

}  // namespace

TEST_CASE("oracle on a single-agent path") {
  const auto res = enumerate_pareto(single_agent_path(), 100000);
  CHECK(res.stats.status == SolveStatus::SolvedComplete);
  REQUIRE(res.solutions.size() == 1);
  CHECK(res.solutions[0].cost == CostVec{2, 2});
  CHECK(res.solutions[0].paths ==
        std::vector<std::vector<VertexId>>{{0, 1, 2}});
}

TEST_CASE("oracle proves the two-vertex swap deadlock empty") {
  const auto res = enumerate_pareto(swap_deadlock(), 100000);
  CHECK(res.stats.status == SolveStatus::SolvedComplete);
  CHECK(res.solutions.empty());
}

TEST_CASE("oracle on the diamond returns both extremes") {
  Instance inst;
  inst.graph = ts::make_diamond_graph();
  inst.costs = ts::explicit_cost_model(
      inst.graph, 1,
      {CostVec{1, 9}, CostVec{9, 1}, CostVec{1, 9}, CostVec{9, 1}});
  inst.agents = 1;
  inst.objectives = 2;
  inst.starts = {0};
  inst.goals = {3};
  const auto res = enumerate_pareto(inst, 100000);
  CHECK(ts::cost_set(res.solutions) ==
        std::vector<CostVec>{CostVec{2, 18}, CostVec{18, 2}});
  const auto issues = validate_solutions(inst, res.solutions);
  for (const auto& i : issues) MESSAGE(i);
  CHECK(issues.empty());
}

TEST_CASE("oracle overflow on a tiny cap") {
  Instance inst = single_agent_path();
  const auto res = enumerate_pareto(inst, 1);
  CHECK(res.stats.status == SolveStatus::OracleOverflow);
  CHECK(res.solutions.empty());
}

TEST_CASE("oracle is work-order independent and sound") {
  Rng rng(2024);
  for (int t = 0; t < 15; ++t) {
    const GridMap map = ts::random_connected_gridmap(rng, 3, 3, 0.15);
    const Instance inst = ts::random_instance(
        map.graph, static_cast<int>(rng.uniform_int(1, 2)),
        static_cast<int>(rng.uniform_int(1, 3)), rng.next_u64());
    const auto fifo = enumerate_pareto(inst, 2000000, OracleOrder::Fifo);
    const auto lifo = enumerate_pareto(inst, 2000000, OracleOrder::Lifo);
    REQUIRE(fifo.stats.status == SolveStatus::SolvedComplete);
    REQUIRE(lifo.stats.status == SolveStatus::SolvedComplete);
    CHECK(ts::cost_set(fifo.solutions) == ts::cost_set(lifo.solutions));
    const auto issues = validate_solutions(inst, fifo.solutions);
    for (const auto& i : issues) MESSAGE(i);
    CHECK(issues.empty());
  }
}

TEST_CASE("oracle starts-at-goal instance yields the trivial solution") {
  Instance inst = single_agent_path();
  inst.goals = {0};
  const auto res = enumerate_pareto(inst, 1000);
  REQUIRE(res.solutions.size() == 1);
  CHECK(res.solutions[0].cost == CostVec{0, 0});
  CHECK(res.solutions[0].paths ==
        std::vector<std::vector<VertexId>>{{0}});
}
