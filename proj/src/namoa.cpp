#include "momapf/namoa.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <set>

#include "momapf/joint.hpp"
#include "search_common.hpp"

namespace momapf {

namespace {

struct NamoaLabel {
  std::int32_t vid;
  CostVec g;
  CostVec f;  // g*w.den + h*w.num
  std::int64_t parent;
  bool open = false;
};

struct OpenOrder {
  const std::deque<NamoaLabel>* labels;
  const detail::JointVertexTable* table;
  bool operator()(std::int64_t a, std::int64_t b) const {
    const NamoaLabel& la = (*labels)[a];
    const NamoaLabel& lb = (*labels)[b];
    if (la.f != lb.f) return lex_less(la.f, lb.f);
    if (la.vid != lb.vid) return table->lex_less_vertex(la.vid, lb.vid);
    return a < b;
  }
};

}  // namespace

SolutionSet solve_namoa(const Instance& inst,
                        const std::vector<ParetoPolicy>& policies,
                        const NamoaOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  SolutionSet result;
  SolveStatus status = SolveStatus::SolvedComplete;

  bool feasible = true;
  for (int i = 0; i < inst.agents; ++i) {
    if (!policies[static_cast<std::size_t>(i)].reachable(inst.starts[i]))
      feasible = false;  // proven empty without searching
  }

  detail::JointVertexTable table(&policies, options.w);
  std::deque<NamoaLabel> labels;
  // per joint vertex: Pareto frontier over the g of every label ever
  // created there; dominated-or-equal pruning needs nothing else
  std::vector<std::vector<std::int64_t>> frontier_at;
  std::set<std::int64_t, OpenOrder> open(OpenOrder{&labels, &table});
  std::vector<std::int64_t> goal_label_ids;

  auto frontier_of = [&frontier_at](std::int32_t vid)
      -> std::vector<std::int64_t>& {
    if (static_cast<std::size_t>(vid) >= frontier_at.size())
      frontier_at.resize(static_cast<std::size_t>(vid) + 1);
    return frontier_at[static_cast<std::size_t>(vid)];
  };

  if (feasible) {
    const std::int32_t start_vid = table.intern(inst.joint_start());
    const std::int32_t goal_vid = table.intern(inst.joint_goal());

    CostVec g0 = CostVec::zeros(static_cast<std::size_t>(inst.objectives));
    CostVec f0 = table.f_scaled(g0, start_vid);
    labels.push_back(
        NamoaLabel{start_vid, std::move(g0), std::move(f0), -1, true});
    frontier_of(start_vid).push_back(0);
    open.insert(0);

    std::vector<const std::vector<VertexId>*> moves(
        static_cast<std::size_t>(inst.agents));

    while (!open.empty()) {
      if (options.budget.expand_limit >= 0 &&
          result.stats.n_expanded >= options.budget.expand_limit) {
        status = SolveStatus::TimedOut;
        break;
      }
      const double elapsed_ms =
          std::chrono::duration<double, std::milli>(
              std::chrono::steady_clock::now() - t0)
              .count();
      if (elapsed_ms > options.budget.time_limit_ms) {
        status = SolveStatus::TimedOut;
        break;
      }

      const std::int64_t cur = *open.begin();
      open.erase(open.begin());
      labels[cur].open = false;

      // pop-time re-check against goal costs found after this label was
      // generated
      bool goal_filtered = false;
      for (std::int64_t gid : goal_label_ids)
        if (dominates_or_equal(labels[gid].f, labels[cur].f)) {
          goal_filtered = true;
          break;
        }
      if (goal_filtered) continue;
      ++result.stats.n_expanded;

      if (labels[cur].vid == goal_vid) {
        goal_label_ids.push_back(cur);
        // park every open label whose f the new goal covers
        const CostVec goal_f = labels[cur].f;
        std::vector<std::int64_t> filtered;
        for (std::int64_t id : open)
          if (dominates_or_equal(goal_f, labels[id].f)) filtered.push_back(id);
        for (std::int64_t id : filtered) {
          open.erase(id);
          labels[id].open = false;
        }
        continue;
      }

      const JointVertex u = table.vertex(labels[cur].vid);
      const CostVec g_base = labels[cur].g;
      for (int i = 0; i < inst.agents; ++i)
        moves[static_cast<std::size_t>(i)] =
            &inst.graph.neighbors(u[static_cast<std::size_t>(i)]);

      detail::for_each_joint_successor(
          inst, u, g_base, moves,
          [&](const JointVertex& child, const CostVec& g) {
            ++result.stats.n_generated;
            if (!psi(u, child).empty()) {
              ++result.stats.conflicts_found;
              return;
            }
            const std::int32_t vid = table.intern(child);
            auto& frontier = frontier_of(vid);
            for (std::int64_t id : frontier)
              if (dominates_or_equal(labels[id].g, g)) return;
            CostVec f = table.f_scaled(g, vid);
            for (std::int64_t gid : goal_label_ids)
              if (dominates_or_equal(labels[gid].f, f)) return;
            // dominated labels leave the frontier; dominated open ones can
            // never produce a non-dominated completion and leave OPEN too
            std::erase_if(frontier, [&](std::int64_t id) {
              if (!dominates(g, labels[id].g)) return false;
              if (labels[id].open) {
                open.erase(id);
                labels[id].open = false;
              }
              return true;
            });
            const auto nid = static_cast<std::int64_t>(labels.size());
            labels.push_back(NamoaLabel{vid, g, std::move(f), cur, true});
            frontier.push_back(nid);
            open.insert(nid);
          });
    }
  }

  for (std::int64_t gid : goal_label_ids) {
    Solution sol;
    sol.cost = labels[gid].g;
    std::vector<std::int32_t> chain;
    for (std::int64_t cur = gid; cur >= 0; cur = labels[cur].parent)
      chain.push_back(labels[cur].vid);
    sol.paths.assign(static_cast<std::size_t>(inst.agents), {});
    for (auto rit = chain.rbegin(); rit != chain.rend(); ++rit) {
      const JointVertex& jv = table.vertex(*rit);
      for (int i = 0; i < inst.agents; ++i)
        sol.paths[static_cast<std::size_t>(i)].push_back(
            jv[static_cast<std::size_t>(i)]);
    }
    result.solutions.push_back(std::move(sol));
  }

  reduce_to_nondominated(result.solutions);
  result.stats.status = status;
  result.stats.search_time_ms =
      std::chrono::duration<double, std::milli>(
          std::chrono::steady_clock::now() - t0)
          .count();
  return result;
}

}  // namespace momapf
