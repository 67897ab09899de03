#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace momapf {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

/// Undirected workspace graph. Every vertex carries an implicit self-loop
/// (the wait action), so `neighbors(v)` always contains v itself. The
/// non-loop edge list is kept in canonical (u<v, sorted) order; cost models
/// index into it by EdgeId.
class Graph {
 public:
  Graph() = default;
  Graph(VertexId vertex_count,
        std::vector<std::pair<VertexId, VertexId>> undirected_edges);

  VertexId vertex_count() const { return vertex_count_; }

  /// Sorted, includes v (self-loop).
  const std::vector<VertexId>& neighbors(VertexId v) const {
    return adjacency_[static_cast<std::size_t>(v)];
  }

  /// Canonical non-loop edge list: pairs with u < v, lexicographically
  /// sorted.
  const std::vector<std::pair<VertexId, VertexId>>& edges() const {
    return edges_;
  }

  /// EdgeId of the non-loop edge {u,v}; -1 if absent or u == v.
  EdgeId edge_index(VertexId u, VertexId v) const;

  bool has_edge(VertexId u, VertexId v) const {
    return u == v || edge_index(u, v) >= 0;
  }

  bool valid_vertex(VertexId v) const { return v >= 0 && v < vertex_count_; }

 private:
  VertexId vertex_count_ = 0;
  std::vector<std::pair<VertexId, VertexId>> edges_;
  std::vector<std::vector<VertexId>> adjacency_;
  // per vertex, (neighbor, edge id) sorted by neighbor, loops excluded
  std::vector<std::vector<std::pair<VertexId, EdgeId>>> incident_;
};

}  // namespace momapf
