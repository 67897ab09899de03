#include "momapf/momstar.hpp"

#include <algorithm>
#include <chrono>

#include "search_common.hpp"

namespace momapf {

/// Thin owner of the interning table so the public header stays free of
/// internal search machinery.
class MomStarTableImpl {
 public:
  MomStarTableImpl(const std::vector<ParetoPolicy>* policies, Weight w)
      : table(policies, w) {}
  detail::JointVertexTable table;
};

bool MomStarSearch::OpenOrder::operator()(std::int32_t a,
                                          std::int32_t b) const {
  const State& sa = self->states_[a];
  const State& sb = self->states_[b];
  if (sa.f != sb.f) return lex_less(sa.f, sb.f);
  if (self->opt_.tie_break == TieBreak::VertexLexFifo) {
    if (sa.vid != sb.vid)
      return self->table_->table.lex_less_vertex(sa.vid, sb.vid);
    return sa.open_seq < sb.open_seq;
  }
  if (sa.vid != sb.vid)
    return self->table_->table.lex_less_vertex(sb.vid, sa.vid);
  return sa.open_seq > sb.open_seq;
}

MomStarSearch::~MomStarSearch() = default;

MomStarSearch::MomStarSearch(const Instance& inst,
                             const std::vector<ParetoPolicy>& policies,
                             const MomStarOptions& options)
    : inst_(&inst),
      policies_(&policies),
      opt_(options),
      table_(std::make_unique<MomStarTableImpl>(&policies, options.w)),
      open_(OpenOrder{this}) {
  for (int i = 0; i < inst.agents; ++i) {
    if (!policies[static_cast<std::size_t>(i)].reachable(inst.starts[i]))
      feasible_ = false;
  }
  if (!feasible_) return;
  goal_vid_ = intern(inst.joint_goal());
  add_state(inst.joint_start(),
            CostVec::zeros(static_cast<std::size_t>(inst.objectives)));
}

std::int32_t MomStarSearch::intern(const JointVertex& v) {
  return table_->table.intern(v);
}

MomStarSearch::VertexStates& MomStarSearch::vertex_states(std::int32_t vid) {
  if (static_cast<std::size_t>(vid) >= at_vertex_.size())
    at_vertex_.resize(static_cast<std::size_t>(vid) + 1);
  return at_vertex_[static_cast<std::size_t>(vid)];
}

const JointVertex& MomStarSearch::vertex_of(std::int32_t sid) const {
  return table_->table.vertex(states_[sid].vid);
}

std::vector<std::int32_t> MomStarSearch::states_at(const JointVertex& v) const {
  std::vector<std::int32_t> out;
  const std::int32_t vid = table_->table.lookup(v);
  if (vid < 0 || static_cast<std::size_t>(vid) >= at_vertex_.size())
    return out;
  const VertexStates& reg = at_vertex_[static_cast<std::size_t>(vid)];
  out = reg.open_ids;
  out.insert(out.end(), reg.closed_ids.begin(), reg.closed_ids.end());
  return out;
}

std::int32_t MomStarSearch::add_state(const JointVertex& v, CostVec g,
                                      std::int32_t parent) {
  const std::int32_t vid = intern(v);
  State s;
  s.vid = vid;
  s.f = table_->table.f_scaled(g, vid);
  s.g = std::move(g);
  s.parent = parent;
  if (parent >= 0) s.back_set.push_back(parent);
  const auto sid = static_cast<std::int32_t>(states_.size());
  states_.push_back(std::move(s));
  VertexStates& reg = vertex_states(vid);
  reg.open_ids.push_back(sid);
  std::erase_if(reg.frontier_ids, [&](std::int32_t other) {
    return dominates(states_[sid].g, states_[other].g);
  });
  reg.frontier_ids.push_back(sid);
  push_open(sid);
  return sid;
}

void MomStarSearch::push_open(std::int32_t sid) {
  states_[sid].loc = Location::Open;
  states_[sid].open_seq = ++seq_counter_;
  open_.insert(sid);
}

void MomStarSearch::move_to_closed(std::int32_t sid) {
  open_.erase(sid);
  State& s = states_[sid];
  s.loc = Location::Closed;
  VertexStates& reg = vertex_states(s.vid);
  std::erase(reg.open_ids, sid);
  if (std::find(reg.closed_ids.begin(), reg.closed_ids.end(), sid) ==
      reg.closed_ids.end())
    reg.closed_ids.push_back(sid);
}

void MomStarSearch::reopen(std::int32_t sid) {
  State& s = states_[sid];
  VertexStates& reg = vertex_states(s.vid);
  std::erase(reg.closed_ids, sid);
  reg.open_ids.push_back(sid);
  push_open(sid);
}

void MomStarSearch::collect_moves(
    const State& s, const JointVertex& u,
    std::vector<const std::vector<VertexId>*>& moves) const {
  moves.resize(static_cast<std::size_t>(inst_->agents));
  for (int i = 0; i < inst_->agents; ++i) {
    const VertexId ui = u[static_cast<std::size_t>(i)];
    moves[static_cast<std::size_t>(i)] =
        s.collision.has(i)
            ? &inst_->graph.neighbors(ui)
            : &(*policies_)[static_cast<std::size_t>(i)].moves(ui);
  }
}

std::vector<std::pair<JointVertex, CostVec>> MomStarSearch::limited_neighbors(
    std::int32_t sid) const {
  const State& s = states_[sid];
  const JointVertex& u = table_->table.vertex(s.vid);
  std::vector<const std::vector<VertexId>*> moves;
  collect_moves(s, u, moves);
  std::vector<std::pair<JointVertex, CostVec>> out;
  detail::for_each_joint_successor(
      *inst_, u, s.g, moves,
      [&out](const JointVertex& child, const CostVec& g) {
        out.emplace_back(child, g);
      });
  return out;
}

void MomStarSearch::back_prop(std::int32_t sid, AgentSet incoming) {
  // Explicit stack; the subset guard terminates back_set cycles. Entries
  // are pushed in reverse so siblings are visited in back_set order.
  std::vector<std::pair<std::int32_t, AgentSet>> stack;
  stack.emplace_back(sid, incoming);
  while (!stack.empty()) {
    auto [cur, inc] = stack.back();
    stack.pop_back();
    State& s = states_[cur];
    if (inc.is_subset_of(s.collision)) continue;
    s.collision.merge(inc);
    if (s.loc != Location::Open) reopen(cur);
    for (auto it = s.back_set.rbegin(); it != s.back_set.rend(); ++it)
      stack.emplace_back(*it, s.collision);
  }
}

void MomStarSearch::dom_back_prop(std::int32_t parent_sid,
                                  const JointVertex& child_v,
                                  const CostVec& child_g) {
  for (std::int32_t other : states_at(child_v)) {
    State& s = states_[other];
    if (!dominates_or_equal(s.g, child_g)) continue;
    back_prop(parent_sid, s.collision);
    if (std::find(s.back_set.begin(), s.back_set.end(), parent_sid) ==
        s.back_set.end())
      s.back_set.push_back(parent_sid);
  }
}

void MomStarSearch::filter_open(std::int32_t goal_sid) {
  const CostVec goal_f = states_[goal_sid].f;
  std::vector<std::int32_t> filtered;
  for (std::int32_t sid : open_)
    if (dominates_or_equal(goal_f, states_[sid].f)) filtered.push_back(sid);
  for (std::int32_t sid : filtered) {
    open_.erase(sid);
    State& s = states_[sid];
    s.loc = Location::Filtered;
    VertexStates& reg = vertex_states(s.vid);
    std::erase(reg.open_ids, sid);
    reg.closed_ids.push_back(sid);
  }
}

bool MomStarSearch::filtered_by_found_goals(std::int32_t sid) const {
  const CostVec& f = states_[sid].f;
  for (const CostVec& goal_f : goal_f_seen_)
    if (dominates_or_equal(goal_f, f)) return true;
  return false;
}

bool MomStarSearch::goal_covers(const CostVec& g, std::int32_t vid) const {
  if (goal_f_seen_.empty()) return false;
  // compares against f = g*w.den + h(vid)*w.num without materializing it
  const CostVec& h_scaled = table_->table.h_scaled(vid);
  const Cost den = opt_.w.den;
  for (const CostVec& goal_f : goal_f_seen_) {
    bool all = true;
    for (std::size_t m = 0; m < g.size(); ++m) {
      if (goal_f[m] > g[m] * den + h_scaled[m]) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

Solution MomStarSearch::reconstruct(std::int32_t sid) const {
  Solution sol;
  sol.cost = states_[sid].g;
  std::vector<std::int32_t> chain;
  for (std::int32_t cur = sid; cur >= 0; cur = states_[cur].parent)
    chain.push_back(cur);
  sol.paths.assign(static_cast<std::size_t>(inst_->agents), {});
  for (auto rit = chain.rbegin(); rit != chain.rend(); ++rit) {
    const JointVertex& jv = table_->table.vertex(states_[*rit].vid);
    for (int i = 0; i < inst_->agents; ++i)
      sol.paths[static_cast<std::size_t>(i)].push_back(
          jv[static_cast<std::size_t>(i)]);
  }
  return sol;
}

void MomStarSearch::expand(std::int32_t sid) {
  const JointVertex u = table_->table.vertex(states_[sid].vid);
  std::vector<const std::vector<VertexId>*> moves;
  collect_moves(states_[sid], u, moves);
  detail::for_each_joint_successor(
      *inst_, u, states_[sid].g, moves,
      [&](const JointVertex& child_v, const CostVec& child_g) {
        ++stats_.n_generated;
        const AgentSet conflict = psi(u, child_v);
        // the freshly generated child's collision set is exactly the
        // detected conflict; it reaches sid and its ancestors even when
        // the child is discarded right after
        back_prop(sid, conflict);
        if (!conflict.empty()) {
          ++stats_.conflicts_found;
          return;
        }
        const std::int32_t vid = intern(child_v);
        // children whose f is already covered by a found goal state can
        // never yield a new non-dominated cost; drop them before they
        // enter OPEN
        if (goal_covers(child_g, vid)) return;
        VertexStates& reg = vertex_states(vid);
        bool pruned = false;
        for (std::int32_t other : reg.frontier_ids)
          if (dominates_or_equal(states_[other].g, child_g)) {
            pruned = true;
            break;
          }
        if (pruned) {
          dom_back_prop(sid, child_v, child_g);
          return;
        }
        add_state(child_v, child_g, sid);
      });
}

bool MomStarSearch::step() {
  if (open_.empty()) return false;
  const std::int32_t sid = *open_.begin();
  move_to_closed(sid);
  if (filtered_by_found_goals(sid)) {
    states_[sid].loc = Location::Filtered;
    return true;
  }
  ++stats_.n_expanded;
  if (states_[sid].vid == goal_vid_) {
    std::erase_if(goal_f_seen_, [&](const CostVec& f) {
      return dominates(states_[sid].f, f);
    });
    goal_f_seen_.push_back(states_[sid].f);
    solutions_.push_back(reconstruct(sid));
    filter_open(sid);
    return true;
  }
  expand(sid);
  return true;
}

SolutionSet MomStarSearch::solve() {
  const auto t0 = std::chrono::steady_clock::now();
  SolveStatus status = SolveStatus::SolvedComplete;
  if (feasible_) {
    while (true) {
      if (opt_.budget.expand_limit >= 0 &&
          stats_.n_expanded >= opt_.budget.expand_limit) {
        status = SolveStatus::TimedOut;
        break;
      }
      const double elapsed_ms =
          std::chrono::duration<double, std::milli>(
              std::chrono::steady_clock::now() - t0)
              .count();
      if (elapsed_ms > opt_.budget.time_limit_ms) {
        status = SolveStatus::TimedOut;
        break;
      }
      if (!step()) break;
    }
  }
  SolutionSet result;
  result.solutions = solutions_;
  reduce_to_nondominated(result.solutions);
  result.stats = stats_;
  result.stats.status = status;
  result.stats.search_time_ms =
      std::chrono::duration<double, std::milli>(
          std::chrono::steady_clock::now() - t0)
          .count();
  return result;
}

SolutionSet solve_momstar(const Instance& inst,
                          const std::vector<ParetoPolicy>& policies,
                          const MomStarOptions& options) {
  MomStarSearch search(inst, policies, options);
  return search.solve();
}

}  // namespace momapf
