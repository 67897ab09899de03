#include "momapf/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace momapf {

Graph::Graph(VertexId vertex_count,
             std::vector<std::pair<VertexId, VertexId>> undirected_edges)
    : vertex_count_(vertex_count) {
  if (vertex_count <= 0)
    throw std::invalid_argument("graph needs at least one vertex");
  for (auto& [u, v] : undirected_edges) {
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
      throw std::invalid_argument("edge endpoint out of range: (" +
                                  std::to_string(u) + "," +
                                  std::to_string(v) + ")");
    if (u == v)
      throw std::invalid_argument(
          "explicit self-loop in edge list; loops are implicit at every "
          "vertex");
    if (u > v) std::swap(u, v);
  }
  std::sort(undirected_edges.begin(), undirected_edges.end());
  undirected_edges.erase(
      std::unique(undirected_edges.begin(), undirected_edges.end()),
      undirected_edges.end());
  edges_ = std::move(undirected_edges);

  adjacency_.resize(static_cast<std::size_t>(vertex_count));
  incident_.resize(static_cast<std::size_t>(vertex_count));
  for (VertexId v = 0; v < vertex_count; ++v) adjacency_[v].push_back(v);
  for (EdgeId e = 0; e < static_cast<EdgeId>(edges_.size()); ++e) {
    const auto [u, v] = edges_[e];
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
    incident_[u].emplace_back(v, e);
    incident_[v].emplace_back(u, e);
  }
  for (VertexId v = 0; v < vertex_count; ++v) {
    std::sort(adjacency_[v].begin(), adjacency_[v].end());
    std::sort(incident_[v].begin(), incident_[v].end());
  }
}

EdgeId Graph::edge_index(VertexId u, VertexId v) const {
  if (u == v || !valid_vertex(u) || !valid_vertex(v)) return -1;
  const auto& inc = incident_[static_cast<std::size_t>(u)];
  auto it = std::lower_bound(
      inc.begin(), inc.end(), std::make_pair(v, EdgeId{0}),
      [](const auto& a, const auto& b) { return a.first < b.first; });
  if (it == inc.end() || it->first != v) return -1;
  return it->second;
}

}  // namespace momapf
