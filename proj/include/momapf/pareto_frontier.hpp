#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "momapf/cost_vec.hpp"

namespace momapf {

/// Flat non-dominated set of cost vectors, each optionally tagged with an
/// opaque payload id. Members are pairwise non-dominated and cost-unique.
/// Linear-scan representation; frontiers stay small (hundreds of members).
class ParetoFrontier {
 public:
  struct Entry {
    CostVec cost;
    std::int64_t payload = -1;
  };

  struct InsertResult {
    bool inserted = false;
    std::vector<Entry> evicted;
  };

  /// If any member dominates-or-equals v the frontier is unchanged and
  /// inserted=false. Otherwise v joins and every member v dominates is
  /// removed and returned.
  InsertResult insert(const CostVec& v, std::int64_t payload = -1) {
    InsertResult res;
    for (const Entry& e : members_) {
      if (dominates_or_equal(e.cost, v)) return res;
    }
    std::vector<Entry> kept;
    kept.reserve(members_.size() + 1);
    for (Entry& e : members_) {
      if (dominates(v, e.cost))
        res.evicted.push_back(std::move(e));
      else
        kept.push_back(std::move(e));
    }
    kept.push_back(Entry{v, payload});
    members_ = std::move(kept);
    res.inserted = true;
    return res;
  }

  bool would_prune(const CostVec& v) const {
    for (const Entry& e : members_)
      if (dominates_or_equal(e.cost, v)) return true;
    return false;
  }

  bool contains(const CostVec& v) const {
    for (const Entry& e : members_)
      if (e.cost == v) return true;
    return false;
  }

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const std::vector<Entry>& members() const { return members_; }

  std::vector<CostVec> costs() const {
    std::vector<CostVec> out;
    out.reserve(members_.size());
    for (const Entry& e : members_) out.push_back(e.cost);
    return out;
  }

 private:
  std::vector<Entry> members_;
};

/// Componentwise minimum over a nonempty set of equal-length vectors.
inline CostVec component_min(std::span<const CostVec> vs) {
  if (vs.empty())
    throw std::invalid_argument("component_min of empty vector set");
  CostVec out = vs[0];
  for (std::size_t i = 1; i < vs.size(); ++i) {
    CostVec::require_same_size(out, vs[i]);
    for (std::size_t m = 0; m < out.size(); ++m)
      if (vs[i][m] < out[m]) out[m] = vs[i][m];
  }
  return out;
}

inline CostVec component_min(const std::vector<CostVec>& vs) {
  return component_min(std::span<const CostVec>(vs.data(), vs.size()));
}

}  // namespace momapf
