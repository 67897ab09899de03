#include "momapf/harness.hpp"

#include <nlohmann/json.hpp>

#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "momapf/grid_map.hpp"
#include "momapf/momstar.hpp"
#include "momapf/namoa.hpp"
#include "momapf/oracle.hpp"
#include "momapf/policy.hpp"
#include "momapf/rng.hpp"

namespace momapf {

namespace {

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

std::string fmt_ms(double ms) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3f", ms);
  return buf;
}

std::string now_utc_iso8601() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string file_stem(const std::string& path) {
  return fs::path(path).stem().string();
}

Json solution_to_json(const Solution& sol) {
  Json j;
  Json cost = Json::array();
  for (std::size_t m = 0; m < sol.cost.size(); ++m) cost.push_back(sol.cost[m]);
  j["cost"] = std::move(cost);
  Json paths = Json::array();
  for (const auto& p : sol.paths) paths.push_back(p);
  j["paths"] = std::move(paths);
  return j;
}

Solution solution_from_json(const Json& j) {
  Solution sol;
  for (const auto& x : j.at("cost")) sol.cost.c.push_back(x.get<Cost>());
  for (const auto& p : j.at("paths"))
    sol.paths.push_back(p.get<std::vector<VertexId>>());
  return sol;
}

Json record_to_json(const RunRecord& r) {
  Json j;
  j["instance_id"] = r.instance_id;
  j["algorithm"] = r.algorithm;
  j["w"] = r.w;
  j["N"] = r.agents;
  j["M"] = r.objectives;
  j["status"] = to_string(r.status);
  j["n_solutions"] = r.n_solutions;
  j["n_expanded"] = r.n_expanded;
  j["n_generated"] = r.n_generated;
  j["policy_time_ms"] = r.policy_time_ms;
  j["search_time_ms"] = r.search_time_ms;
  j["total_time_ms"] = r.total_time_ms;
  j["seed"] = r.seed;
  j["completed_at"] = r.completed_at;
  return j;
}

RunRecord record_from_json(const Json& j) {
  RunRecord r;
  r.instance_id = j.at("instance_id").get<std::string>();
  r.algorithm = j.at("algorithm").get<std::string>();
  r.w = j.at("w").get<std::string>();
  r.agents = j.at("N").get<int>();
  r.objectives = j.at("M").get<int>();
  r.status = solve_status_from_string(j.at("status").get<std::string>());
  r.n_solutions = j.at("n_solutions").get<std::int64_t>();
  r.n_expanded = j.at("n_expanded").get<std::int64_t>();
  r.n_generated = j.at("n_generated").get<std::int64_t>();
  r.policy_time_ms = j.at("policy_time_ms").get<double>();
  r.search_time_ms = j.at("search_time_ms").get<double>();
  r.total_time_ms = j.at("total_time_ms").get<double>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.completed_at = j.at("completed_at").get<std::string>();
  return r;
}

}  // namespace

const char* kRunCsvSchema = "# momapf-run-csv v1; averages over succeeded "
                            "cases only; completed_at is informational";

std::string run_record_csv_header() {
  return "instance_id,algorithm,w,N,M,status,n_solutions,n_expanded,"
         "n_generated,policy_time_ms,search_time_ms,total_time_ms,seed,"
         "completed_at";
}

std::string run_record_csv_row(const RunRecord& r) {
  std::ostringstream out;
  out << r.instance_id << ',' << r.algorithm << ',' << r.w << ',' << r.agents
      << ',' << r.objectives << ',' << to_string(r.status) << ','
      << r.n_solutions << ',' << r.n_expanded << ',' << r.n_generated << ','
      << fmt_ms(r.policy_time_ms) << ',' << fmt_ms(r.search_time_ms) << ','
      << fmt_ms(r.total_time_ms) << ',' << r.seed << ',' << r.completed_at;
  return out.str();
}

SolveStatus record_status(const SolutionSet& result) {
  if (result.stats.status == SolveStatus::SolvedComplete &&
      result.solutions.empty())
    return SolveStatus::Infeasible;
  return result.stats.status;
}

void write_solution_file(const SolutionFile& file, const std::string& path) {
  Json j;
  j["instance_id"] = file.instance_id;
  j["algorithm"] = file.algorithm;
  j["w"] = file.w;
  j["status"] = to_string(file.status);
  Json sols = Json::array();
  for (const auto& s : file.solutions) sols.push_back(solution_to_json(s));
  j["solutions"] = std::move(sols);
  Json stats;
  stats["n_solutions"] = static_cast<std::int64_t>(file.solutions.size());
  stats["n_expanded"] = file.stats.n_expanded;
  stats["n_generated"] = file.stats.n_generated;
  stats["conflicts_found"] = file.stats.conflicts_found;
  stats["policy_time_ms"] = file.stats.policy_time_ms;
  stats["search_time_ms"] = file.stats.search_time_ms;
  j["stats"] = std::move(stats);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write solution file: " + path);
  out << j.dump(2) << "\n";
}

SolutionFile load_solution_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open solution file: " + path);
  Json j = Json::parse(in);
  SolutionFile file;
  file.instance_id = j.at("instance_id").get<std::string>();
  file.algorithm = j.at("algorithm").get<std::string>();
  file.w = j.at("w").get<std::string>();
  file.status = solve_status_from_string(j.at("status").get<std::string>());
  for (const auto& s : j.at("solutions"))
    file.solutions.push_back(solution_from_json(s));
  const Json& stats = j.at("stats");
  file.stats.n_expanded = stats.at("n_expanded").get<std::int64_t>();
  file.stats.n_generated = stats.at("n_generated").get<std::int64_t>();
  file.stats.conflicts_found = stats.at("conflicts_found").get<std::int64_t>();
  file.stats.policy_time_ms = stats.at("policy_time_ms").get<double>();
  file.stats.search_time_ms = stats.at("search_time_ms").get<double>();
  file.stats.status = file.status;
  return file;
}

std::vector<std::string> run_gen(const GenRequest& req) {
  const GridMap map = parse_map_file(req.map_path);
  if (req.agents > map.graph.vertex_count())
    throw ValidationError("gen: N exceeds passable cell count");
  if (req.count < 1) throw ValidationError("gen: count must be >= 1");
  fs::create_directories(req.out_dir);

  std::vector<std::string> paths;
  const std::string stem = file_stem(req.map_path);
  for (int k = 0; k < req.count; ++k) {
    Instance inst;
    inst.graph = map.graph;
    inst.agents = req.agents;
    inst.objectives = req.objectives;
    // separate derived streams keep endpoints stable if the cost model
    // generation ever changes arity
    Rng ep = Rng::derive(req.seed, static_cast<std::uint64_t>(2 * k));
    inst.costs = gen_costs(map.graph, req.agents, req.objectives,
                           Rng::derive(req.seed, 2 * k + 1).next_u64());
    gen_endpoints(map.graph, req.agents, ep.next_u64(), inst.starts,
                  inst.goals);
    validate_instance(inst);
    char name[256];
    std::snprintf(name, sizeof(name), "%s-N%d-M%d-s%llu-%03d.json",
                  stem.c_str(), req.agents, req.objectives,
                  static_cast<unsigned long long>(req.seed), k);
    const std::string path = (fs::path(req.out_dir) / name).string();
    save_instance(inst, path);
    paths.push_back(path);
  }
  return paths;
}

RunRecord run_solve(const SolveRequest& req) {
  const Instance inst = load_instance(req.instance_path);
  RunRecord rec;
  rec.instance_id =
      req.instance_id.empty() ? file_stem(req.instance_path) : req.instance_id;
  rec.algorithm = req.algorithm;
  rec.w = req.w.to_string();
  rec.agents = inst.agents;
  rec.objectives = inst.objectives;
  rec.seed = req.seed;

  SolutionSet result;
  double policy_ms = 0.0;
  if (req.algorithm == "momstar" || req.algorithm == "namoa") {
    const auto t0 = std::chrono::steady_clock::now();
    const auto policies = compute_policies(inst);
    policy_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
    if (req.algorithm == "momstar") {
      MomStarOptions opt;
      opt.w = req.w;
      opt.budget = req.budget;
      result = solve_momstar(inst, policies, opt);
    } else {
      NamoaOptions opt;
      opt.w = req.w;
      opt.budget = req.budget;
      result = solve_namoa(inst, policies, opt);
    }
  } else if (req.algorithm == "oracle") {
    // the oracle has no notion of w or wall-clock budget; expand_limit acts
    // as its label cap when given
    const std::int64_t cap = req.budget.expand_limit >= 0
                                 ? req.budget.expand_limit
                                 : req.oracle_label_cap;
    result = enumerate_pareto(inst, cap);
  } else {
    throw std::invalid_argument("unknown algorithm: " + req.algorithm);
  }
  result.stats.policy_time_ms = policy_ms;

  const auto issues = validate_solutions(inst, result.solutions);
  if (!issues.empty())
    throw std::runtime_error("solver returned unsound solutions: " +
                             issues.front());

  rec.status = record_status(result);
  rec.n_solutions = static_cast<std::int64_t>(result.solutions.size());
  rec.n_expanded = result.stats.n_expanded;
  rec.n_generated = result.stats.n_generated;
  rec.policy_time_ms = policy_ms;
  rec.search_time_ms = result.stats.search_time_ms;
  rec.total_time_ms = policy_ms + result.stats.search_time_ms;
  rec.completed_at = now_utc_iso8601();

  if (!req.out_path.empty()) {
    SolutionFile file;
    file.instance_id = rec.instance_id;
    file.algorithm = rec.algorithm;
    file.w = rec.w;
    file.status = rec.status;
    file.solutions = result.solutions;
    file.stats = result.stats;
    write_solution_file(file, req.out_path);
  }
  return rec;
}

std::string aggregate_csv_path(const std::string& out_csv) {
  fs::path p(out_csv);
  p.replace_extension();
  return p.string() + ".agg.csv";
}

std::string build_aggregate_csv(const std::vector<RunRecord>& rows) {
  struct Cell {
    std::int64_t runs = 0;
    std::int64_t succeeded = 0;
    std::int64_t sum_solutions = 0;
    std::int64_t max_solutions = 0;
    std::int64_t sum_expanded = 0;
  };
  std::map<std::tuple<std::string, int, int, std::string>, Cell> cells;
  for (const RunRecord& r : rows) {
    Cell& c = cells[{r.algorithm, r.agents, r.objectives, r.w}];
    ++c.runs;
    if (r.status == SolveStatus::SolvedComplete) {
      ++c.succeeded;
      c.sum_solutions += r.n_solutions;
      c.max_solutions = std::max(c.max_solutions, r.n_solutions);
      c.sum_expanded += r.n_expanded;
    }
  }
  std::ostringstream out;
  out << "# momapf-agg-csv v1; means over succeeded cases only\n";
  out << "algorithm,N,M,w,runs,succeeded,success_rate,mean_pareto_size,"
         "max_pareto_size,mean_expanded\n";
  for (const auto& [key, c] : cells) {
    const auto& [alg, n, m, w] = key;
    out << alg << ',' << n << ',' << m << ',' << w << ',' << c.runs << ','
        << c.succeeded << ',' << fmt_ms(double(c.succeeded) / double(c.runs));
    if (c.succeeded > 0) {
      out << ',' << fmt_ms(double(c.sum_solutions) / double(c.succeeded))
          << ',' << c.max_solutions << ','
          << fmt_ms(double(c.sum_expanded) / double(c.succeeded));
    } else {
      out << ",-,-,-";
    }
    out << '\n';
  }
  return out.str();
}

void run_bench(const BenchRequest& req) {
  std::ifstream mf(req.manifest_path);
  if (!mf)
    throw std::runtime_error("cannot open manifest: " + req.manifest_path);
  Json manifest = Json::parse(mf);

  struct Job {
    SolveRequest solve;
    std::string key;
  };
  std::vector<Job> jobs;

  Budget default_budget;
  if (manifest.contains("time_limit_s"))
    default_budget.time_limit_ms = manifest["time_limit_s"].get<double>() * 1e3;
  if (manifest.contains("expand_limit"))
    default_budget.expand_limit = manifest["expand_limit"].get<std::int64_t>();

  const fs::path manifest_dir = fs::path(req.manifest_path).parent_path();
  for (const auto& inst_entry : manifest.at("instances")) {
    std::string path;
    std::uint64_t seed = 0;
    if (inst_entry.is_string()) {
      path = inst_entry.get<std::string>();
    } else {
      path = inst_entry.at("path").get<std::string>();
      if (inst_entry.contains("seed"))
        seed = inst_entry["seed"].get<std::uint64_t>();
    }
    if (!path.empty() && path[0] != '/')
      path = (manifest_dir / path).string();
    for (const auto& cfg : manifest.at("configs")) {
      Job job;
      job.solve.instance_path = path;
      job.solve.instance_id = file_stem(path);
      job.solve.algorithm = cfg.at("alg").get<std::string>();
      job.solve.w = Weight::parse(cfg.contains("w")
                                      ? cfg["w"].get<std::string>()
                                      : std::string("1"));
      job.solve.budget = default_budget;
      if (cfg.contains("time_limit_s"))
        job.solve.budget.time_limit_ms = cfg["time_limit_s"].get<double>() * 1e3;
      if (cfg.contains("expand_limit"))
        job.solve.budget.expand_limit = cfg["expand_limit"].get<std::int64_t>();
      job.solve.seed = seed;
      job.key = job.solve.instance_id + "|" + job.solve.algorithm + "|" +
                job.solve.w.to_string() + "|" +
                std::to_string(job.solve.budget.time_limit_ms) + "|" +
                std::to_string(job.solve.budget.expand_limit);
      jobs.push_back(std::move(job));
    }
  }

  const std::string log_path = req.out_csv + ".runlog.jsonl";
  std::map<std::string, RunRecord> done;
  if (fs::exists(log_path)) {
    std::ifstream log(log_path);
    std::string line;
    while (std::getline(log, line)) {
      if (line.empty()) continue;
      Json j = Json::parse(line);
      done[j.at("key").get<std::string>()] = record_from_json(j.at("record"));
    }
  }

  std::vector<RunRecord> rows(jobs.size());
  std::vector<std::size_t> todo;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    auto it = done.find(jobs[i].key);
    if (it != done.end())
      rows[i] = it->second;
    else
      todo.push_back(i);
  }

  std::mutex log_mutex;
  std::ofstream log(log_path, std::ios::app);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      const std::size_t k = next.fetch_add(1);
      if (k >= todo.size()) return;
      const std::size_t i = todo[k];
      RunRecord rec;
      try {
        rec = run_solve(jobs[i].solve);
      } catch (const std::exception& e) {
        // record the failure for this row; the batch keeps going
        rec.instance_id = jobs[i].solve.instance_id;
        rec.algorithm = jobs[i].solve.algorithm;
        rec.w = jobs[i].solve.w.to_string();
        rec.status = SolveStatus::TimedOut;
        std::string why = std::string("error: ") + e.what();
        for (char& ch : why)
          if (ch == ',' || ch == '\n') ch = ';';
        rec.completed_at = why;
      }
      {
        std::lock_guard<std::mutex> guard(log_mutex);
        rows[i] = rec;
        Json j;
        j["key"] = jobs[i].key;
        j["record"] = record_to_json(rec);
        log << j.dump() << "\n";
        log.flush();
      }
    }
  };
  const int nworkers = std::max(1, req.workers);
  std::vector<std::thread> pool;
  for (int t = 0; t < nworkers; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  std::ofstream csv(req.out_csv, std::ios::trunc);
  if (!csv) throw std::runtime_error("cannot write CSV: " + req.out_csv);
  csv << kRunCsvSchema << "\n" << run_record_csv_header() << "\n";
  for (const RunRecord& r : rows) csv << run_record_csv_row(r) << "\n";
  std::ofstream agg(aggregate_csv_path(req.out_csv), std::ios::trunc);
  agg << build_aggregate_csv(rows);
}

}  // namespace momapf
