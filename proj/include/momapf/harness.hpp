#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "momapf/instance.hpp"
#include "momapf/solution.hpp"
#include "momapf/weight.hpp"

namespace momapf {

/// One benchmark run. Serialized as one CSV row; `completed_at` is the
/// wall-clock stamp of the run and lives in its own trailing column so the
/// measurement columns stay byte-identical when a finished batch is
/// re-emitted from the run log.
struct RunRecord {
  std::string instance_id;
  std::string algorithm;
  std::string w = "1";
  int agents = 0;
  int objectives = 0;
  SolveStatus status = SolveStatus::SolvedComplete;
  std::int64_t n_solutions = 0;
  std::int64_t n_expanded = 0;
  std::int64_t n_generated = 0;
  double policy_time_ms = 0.0;
  double search_time_ms = 0.0;
  double total_time_ms = 0.0;
  std::uint64_t seed = 0;
  std::string completed_at;
};

extern const char* kRunCsvSchema;  // versioned header comment line
std::string run_record_csv_header();
std::string run_record_csv_row(const RunRecord& r);

/// Contents of a solution file.
struct SolutionFile {
  std::string instance_id;
  std::string algorithm;
  std::string w = "1";
  SolveStatus status = SolveStatus::SolvedComplete;
  std::vector<Solution> solutions;
  SearchStats stats;
};

void write_solution_file(const SolutionFile& file, const std::string& path);
SolutionFile load_solution_file(const std::string& path);

/// Completed solve with an empty set is reported as `infeasible` in files
/// and run records; the solver-level status stays solved_complete since
/// the search itself ran to completion.
SolveStatus record_status(const SolutionSet& result);

// -- subcommands ------------------------------------------------------------

struct GenRequest {
  std::string map_path;
  int agents = 1;
  int objectives = 1;
  int count = 1;
  std::uint64_t seed = 0;
  std::string out_dir;
};

/// Writes `count` instance files, deterministic per seed. Returns the file
/// paths in generation order.
std::vector<std::string> run_gen(const GenRequest& req);

struct SolveRequest {
  std::string instance_path;
  std::string algorithm;  // momstar | namoa | oracle
  Weight w{1, 1};
  Budget budget;
  std::string out_path;          // solution file; empty = don't write
  std::uint64_t seed = 0;        // echoed into the RunRecord
  std::string instance_id;       // defaults to the file stem
  std::int64_t oracle_label_cap = 5'000'000;
};

RunRecord run_solve(const SolveRequest& req);

struct BenchRequest {
  std::string manifest_path;
  std::string out_csv;
  int workers = 1;
};

/// Runs the manifest's instance x config product, appending finished runs
/// to `<out_csv>.runlog.jsonl`. Completed runs found in the log are reused,
/// so re-running a finished manifest rewrites byte-identical CSV bodies.
/// Also writes the aggregate table to `<out_csv minus .csv>.agg.csv`.
void run_bench(const BenchRequest& req);

std::string aggregate_csv_path(const std::string& out_csv);

/// Aggregates recomputed from rows; exposed so tests can check the emitted
/// table. Averages cover succeeded (solved_complete) cases only.
std::string build_aggregate_csv(const std::vector<RunRecord>& rows);

}  // namespace momapf
