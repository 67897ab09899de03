// Command-line front end: instance generation, single solves, and batch
// benchmarks over MOMAPF instances.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <limits>

#include "momapf/harness.hpp"
#include "momapf/weight.hpp"

int main(int argc, char** argv) {
  CLI::App app{"momapf: multi-objective multi-agent path finding solvers"};
  app.require_subcommand(1);

  momapf::GenRequest gen;
  CLI::App* cmd_gen = app.add_subcommand("gen", "generate instance files");
  cmd_gen->add_option("--map", gen.map_path, "MovingAI-style grid map file")
      ->required();
  cmd_gen->add_option("--agents", gen.agents, "number of agents N")
      ->required();
  cmd_gen->add_option("--objectives", gen.objectives, "number of objectives M")
      ->required();
  cmd_gen->add_option("--count", gen.count, "instances to generate")
      ->required();
  cmd_gen->add_option("--seed", gen.seed, "batch seed")->required();
  cmd_gen->add_option("--out", gen.out_dir, "output directory")->required();

  std::string w_text = "1";
  double time_limit_s = -1.0;
  std::int64_t expand_limit = -1;
  momapf::SolveRequest solve;
  CLI::App* cmd_solve = app.add_subcommand("solve", "solve one instance");
  cmd_solve->add_option("--instance", solve.instance_path, "instance file")
      ->required();
  cmd_solve
      ->add_option("--alg", solve.algorithm, "momstar | namoa | oracle")
      ->required();
  cmd_solve->add_option("--w", w_text,
                        "heuristic inflation >= 1 (e.g. 1, 1.2, 3/2)");
  cmd_solve->add_option("--time-limit", time_limit_s, "wall clock, seconds");
  cmd_solve->add_option("--expand-limit", expand_limit,
                        "max expansions (label cap for the oracle)");
  cmd_solve->add_option("--out", solve.out_path, "solution file to write");
  cmd_solve->add_option("--seed", solve.seed, "seed echoed into the record");

  momapf::BenchRequest bench;
  CLI::App* cmd_bench = app.add_subcommand("bench", "run a batch manifest");
  cmd_bench->add_option("--manifest", bench.manifest_path, "manifest JSON")
      ->required();
  cmd_bench->add_option("--out", bench.out_csv, "output CSV path")
      ->required();
  cmd_bench->add_option("--workers", bench.workers, "parallel solves");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_gen->parsed()) {
      const auto paths = momapf::run_gen(gen);
      for (const auto& p : paths) std::cout << p << "\n";
      return 0;
    }
    if (cmd_solve->parsed()) {
      solve.w = momapf::Weight::parse(w_text);
      if (time_limit_s >= 0) solve.budget.time_limit_ms = time_limit_s * 1e3;
      solve.budget.expand_limit = expand_limit;
      const auto rec = momapf::run_solve(solve);
      std::cout << momapf::run_record_csv_header() << "\n"
                << momapf::run_record_csv_row(rec) << "\n";
      return 0;
    }
    if (cmd_bench->parsed()) {
      momapf::run_bench(bench);
      std::cout << "wrote " << bench.out_csv << " and "
                << momapf::aggregate_csv_path(bench.out_csv) << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
