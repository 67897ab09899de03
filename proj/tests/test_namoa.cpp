#include <doctest.h>

#include "momapf/namoa.hpp"
#include "momapf/oracle.hpp"
#include "momapf/policy.hpp"
#include "support/fixtures.hpp"

using namespace momapf;
namespace ts = momapf::testsupport;

TEST_CASE("namoa on a single-agent path") {
  Instance inst;
  inst.graph = ts::make_path_graph(3);
  inst.costs = ts::uniform_cost_model(inst.graph, 1, 2);
  inst.agents = 1;
  inst.objectives = 2;
  inst.starts = {0};
  inst.goals = {2};
  const auto res = solve_namoa(inst, compute_policies(inst), {});
  CHECK(res.stats.status == SolveStatus::SolvedComplete);
  REQUIRE(res.solutions.size() == 1);
  CHECK(res.solutions[0].cost == CostVec{2, 2});
  CHECK(res.solutions[0].paths ==
        std::vector<std::vector<VertexId>>{{0, 1, 2}});
}

TEST_CASE("namoa terminates on the swap deadlock with an empty set") {
  Instance inst;
  inst.graph = ts::make_path_graph(2);
  inst.costs = ts::uniform_cost_model(inst.graph, 2, 2);
  inst.agents = 2;
  inst.objectives = 2;
  inst.starts = {0, 1};
  inst.goals = {1, 0};
  const auto res = solve_namoa(inst, compute_policies(inst), {});
  CHECK(res.stats.status == SolveStatus::SolvedComplete);
  CHECK(res.solutions.empty());
}

TEST_CASE("namoa at w=1 matches the oracle on seeded 3x3 instances") {
  Rng rng(99);
  for (int t = 0; t < 20; ++t) {
    const GridMap map = ts::random_connected_gridmap(rng, 3, 3, 0.1);
    const Instance inst = ts::random_instance(
        map.graph, static_cast<int>(rng.uniform_int(1, 2)), 2, rng.next_u64());
    const auto oracle = enumerate_pareto(inst, 2000000);
    REQUIRE(oracle.stats.status == SolveStatus::SolvedComplete);
    const auto res = solve_namoa(inst, compute_policies(inst), {});
    REQUIRE(res.stats.status == SolveStatus::SolvedComplete);
    CHECK(ts::cost_set(res.solutions) == ts::cost_set(oracle.solutions));
    const auto issues = validate_solutions(inst, res.solutions);
    for (const auto& i : issues) MESSAGE(i);
    CHECK(issues.empty());
  }
}

TEST_CASE("namoa M=1 returns the single scalar optimum") {
  Rng rng(123);
  for (int t = 0; t < 10; ++t) {
    const GridMap map = ts::random_connected_gridmap(rng, 3, 3, 0.1);
    const Instance inst =
        ts::random_instance(map.graph, 2, 1, rng.next_u64());
    const auto res = solve_namoa(inst, compute_policies(inst), {});
    const auto best = ts::scalar_joint_dijkstra(inst);
    REQUIRE(best.has_value());
    REQUIRE(res.solutions.size() == 1);
    CHECK(res.solutions[0].cost[0] == *best);
  }
}

TEST_CASE("inflated namoa satisfies the strict w bound against w=1 costs") {
  Rng rng(321);
  int checked = 0;
  for (int t = 0; t < 12; ++t) {
    const GridMap map = ts::random_connected_gridmap(rng, 3, 3, 0.1);
    const Instance inst = ts::random_instance(map.graph, 2, 2, rng.next_u64());
    if (inst.joint_start() == inst.joint_goal()) continue;  // zero-cost case
    const auto policies = compute_policies(inst);
    const auto exact = solve_namoa(inst, policies, {});
    if (exact.solutions.empty()) continue;
    for (const char* w_text : {"1.1", "1.2", "1.5", "2.0"}) {
      NamoaOptions opt;
      opt.w = Weight::parse(w_text);
      const auto approx = solve_namoa(inst, policies, opt);
      REQUIRE(approx.stats.status == SolveStatus::SolvedComplete);
      for (const auto& star : exact.solutions) {
        bool covered = false;
        for (const auto& got : approx.solutions) {
          bool all_strict = true;
          for (std::size_t m = 0; m < got.cost.size(); ++m)
            if (got.cost[m] * opt.w.den >= star.cost[m] * opt.w.num)
              all_strict = false;
          if (all_strict) {
            covered = true;
            break;
          }
        }
        CHECK(covered);
        ++checked;
      }
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("namoa budget handling") {
  Instance inst;
  // 4-cycle: the agents can rotate past each other
  inst.graph = Graph(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  inst.costs = ts::uniform_cost_model(inst.graph, 2, 2);
  inst.agents = 2;
  inst.objectives = 2;
  inst.starts = {0, 3};
  inst.goals = {3, 0};
  const auto policies = compute_policies(inst);

  NamoaOptions zero;
  zero.budget.expand_limit = 0;
  const auto res = solve_namoa(inst, policies, zero);
  CHECK(res.stats.status == SolveStatus::TimedOut);
  CHECK(res.solutions.empty());
  CHECK(res.stats.n_expanded == 0);

  NamoaOptions some;
  some.budget.expand_limit = 100000;
  const auto full = solve_namoa(inst, policies, some);
  CHECK(full.stats.status == SolveStatus::SolvedComplete);
  CHECK_FALSE(full.solutions.empty());
}

TEST_CASE("namoa reports infeasible starts as complete-and-empty") {
  Instance inst;
  inst.graph = Graph(4, {{0, 1}, {2, 3}});  // two components
  inst.costs = ts::uniform_cost_model(inst.graph, 1, 2);
  inst.agents = 1;
  inst.objectives = 2;
  inst.starts = {0};
  inst.goals = {3};
  const auto res = solve_namoa(inst, compute_policies(inst), {});
  CHECK(res.stats.status == SolveStatus::SolvedComplete);
  CHECK(res.solutions.empty());
  CHECK(res.stats.n_expanded == 0);
}
