#pragma once

#include <boost/container/small_vector.hpp>

#include <cstdint>
#include <vector>

#include "momapf/graph.hpp"

namespace momapf {

/// A configuration of all N agents: per-agent vertex ids.
using JointVertex = boost::container::small_vector<VertexId, 8>;

struct JointVertexHash {
  std::size_t operator()(const JointVertex& v) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (VertexId x : v) {
      h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) +
           (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

inline bool joint_lex_less(const JointVertex& a, const JointVertex& b) {
  const std::size_t n = a.size() < b.size() ? a.size() : b.size();
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return a.size() < b.size();
}

/// Set of agent ids as a bitmask. Solvers support up to 64 agents, well
/// beyond the instance sizes the search itself can handle.
class AgentSet {
 public:
  AgentSet() = default;
  static AgentSet full(int n) {
    AgentSet s;
    s.bits_ = (n >= 64) ? ~0ULL : ((1ULL << n) - 1);
    return s;
  }

  bool empty() const { return bits_ == 0; }
  bool has(int i) const { return (bits_ >> i) & 1ULL; }
  void add(int i) { bits_ |= (1ULL << i); }
  void merge(AgentSet o) { bits_ |= o.bits_; }
  bool is_subset_of(AgentSet o) const { return (bits_ & ~o.bits_) == 0; }
  int count() const { return __builtin_popcountll(bits_); }
  bool operator==(AgentSet o) const { return bits_ == o.bits_; }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (int i = 0; i < 64; ++i)
      if (has(i)) out.push_back(i);
    return out;
  }

 private:
  std::uint64_t bits_ = 0;
};

/// Collision function: agents involved in a vertex conflict (same
/// destination vertex) or a swap conflict (traversing one edge in opposite
/// directions) on the joint transition u -> v. Empty set means the
/// transition is conflict-free.
AgentSet psi(const JointVertex& u, const JointVertex& v);

}  // namespace momapf
