#pragma once

#include <cstdint>
#include <deque>
#include <memory>
#include <set>
#include <unordered_map>
#include <utility>
#include <vector>

#include "momapf/instance.hpp"
#include "momapf/joint.hpp"
#include "momapf/policy.hpp"
#include "momapf/solution.hpp"
#include "momapf/weight.hpp"

namespace momapf {

/// Pop order among equal f-vectors. Either choice satisfies the
/// "non-dominated f-vector is popped" contract; two orders exist so tests
/// can demonstrate that the w=1 cost set does not depend on tie-breaking.
enum class TieBreak { VertexLexFifo, VertexRevLexLifo };

struct MomStarOptions {
  Weight w{1, 1};
  Budget budget;
  TieBreak tie_break = TieBreak::VertexLexFifo;
};

/// Subdimensional-expansion search: agents follow their Pareto policies
/// until conflicts couple them, conflicts are back-propagated through
/// back_sets to widen earlier states, and per-joint-vertex dominance plus
/// goal-based open-list filtering prune the rest. The class exposes the
/// sub-procedures and the state arena so they can be exercised and
/// inspected directly; solve_momstar() below is the plain entry point.
class MomStarSearch {
 public:
  enum class Location { Open, Closed, Filtered };

  struct State {
    std::int32_t vid;  // interned joint vertex
    CostVec g;
    CostVec f;  // g*w.den + h*w.num, fixed at creation
    std::int32_t parent = -1;
    std::vector<std::int32_t> back_set;
    AgentSet collision;
    Location loc = Location::Open;
    std::uint64_t open_seq = 0;  // insertion stamp while in OPEN
  };

  MomStarSearch(const Instance& inst,
                const std::vector<ParetoPolicy>& policies,
                const MomStarOptions& options);
  ~MomStarSearch();
  MomStarSearch(const MomStarSearch&) = delete;
  MomStarSearch& operator=(const MomStarSearch&) = delete;

  /// False iff some agent's start cannot reach its goal; solve() then
  /// returns an empty complete result without searching.
  bool feasible() const { return feasible_; }

  SolutionSet solve();

  /// One main-loop iteration: pop the lexicographic-min f state, either
  /// harvest a goal state (reconstruct + filter OPEN) or expand its limited
  /// neighbors. Returns false when OPEN is empty.
  bool step();

  /// Per-agent moves multiplied out: policy successors for agents outside
  /// the collision set of s, every graph neighbor (wait included) for
  /// agents inside. Each entry carries the successor's accumulated g.
  std::vector<std::pair<JointVertex, CostVec>> limited_neighbors(
      std::int32_t sid) const;

  /// Collision-set back-propagation. If `incoming` is not already a subset
  /// of I_C(sid), merge it, reopen sid if it is not open, and recurse over
  /// back_set(sid).
  void back_prop(std::int32_t sid, AgentSet incoming);

  /// Dominance back-propagation after a child of parent_sid at (child_v,
  /// child_g) was pruned: every state at child_v whose g dominates-or-
  /// equals child_g propagates its collision set to parent_sid and records
  /// parent_sid in its back_set.
  void dom_back_prop(std::int32_t parent_sid, const JointVertex& child_v,
                     const CostVec& child_g);

  /// Remove every open state whose f is dominated-or-equaled by the goal
  /// state's f, moving it from OPEN(v) to CLOSED(v) where it keeps serving
  /// as a dominance pruner.
  void filter_open(std::int32_t goal_sid);

  /// The same test applied lazily at pop time against every goal f seen so
  /// far, so states that entered OPEN after a sweep (or re-entered through
  /// collision back-propagation) are still never expanded once dominated.
  bool filtered_by_found_goals(std::int32_t sid) const;

  // -- fixture construction and inspection ---------------------------------

  /// Create a state at v with cost g and insert it into OPEN and OPEN(v),
  /// bypassing Compare. parent also seeds the back_set when >= 0.
  std::int32_t add_state(const JointVertex& v, CostVec g,
                         std::int32_t parent = -1);

  /// What a pop does to bookkeeping, without goal handling or expansion.
  void move_to_closed(std::int32_t sid);

  State& state(std::int32_t sid) { return states_[sid]; }
  const State& state(std::int32_t sid) const { return states_[sid]; }
  std::size_t state_count() const { return states_.size(); }
  std::size_t open_size() const { return open_.size(); }
  const JointVertex& vertex_of(std::int32_t sid) const;
  /// All surviving states registered at v: OPEN(v) then CLOSED(v).
  std::vector<std::int32_t> states_at(const JointVertex& v) const;
  const std::vector<Solution>& solutions_so_far() const { return solutions_; }
  const SearchStats& stats() const { return stats_; }

 private:
  struct VertexStates {
    std::vector<std::int32_t> open_ids;
    std::vector<std::int32_t> closed_ids;  // closed and filtered states
    // Pareto frontier over the g of every state ever registered here; the
    // prune test only needs these, while back-propagation scans the full
    // lists above.
    std::vector<std::int32_t> frontier_ids;
  };
  struct OpenOrder {
    const MomStarSearch* self;
    bool operator()(std::int32_t a, std::int32_t b) const;
  };

  std::int32_t intern(const JointVertex& v);
  VertexStates& vertex_states(std::int32_t vid);
  void reopen(std::int32_t sid);
  void push_open(std::int32_t sid);
  void collect_moves(const State& s, const JointVertex& u,
                     std::vector<const std::vector<VertexId>*>& moves) const;
  bool goal_covers(const CostVec& g, std::int32_t vid) const;
  void expand(std::int32_t sid);
  Solution reconstruct(std::int32_t sid) const;

  const Instance* inst_;
  const std::vector<ParetoPolicy>* policies_;
  MomStarOptions opt_;
  bool feasible_ = true;

  std::unique_ptr<class MomStarTableImpl> table_;
  std::deque<State> states_;
  std::vector<VertexStates> at_vertex_;  // indexed by interned vid
  std::set<std::int32_t, OpenOrder> open_;
  std::uint64_t seq_counter_ = 0;
  std::int32_t goal_vid_ = -1;

  std::vector<Solution> solutions_;
  std::vector<CostVec> goal_f_seen_;  // non-dominated f of popped goal states
  SearchStats stats_;
};

SolutionSet solve_momstar(const Instance& inst,
                          const std::vector<ParetoPolicy>& policies,
                          const MomStarOptions& options);

}  // namespace momapf
