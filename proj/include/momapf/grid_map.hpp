#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "momapf/graph.hpp"

namespace momapf {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Four-connected grid workspace parsed from MovingAI-style ASCII text.
/// '.' and 'G' are passable, '@', 'T', 'O' blocked. One vertex per passable
/// cell, row-major.
struct GridMap {
  int width = 0;
  int height = 0;
  std::vector<char> cells;  // normalized to '.' / '@', row-major
  Graph graph;
  std::vector<VertexId> cell_to_vertex;  // -1 for blocked cells
  std::vector<std::int32_t> vertex_to_cell;

  bool passable(int row, int col) const {
    return cells[static_cast<std::size_t>(row) * width + col] == '.';
  }
};

GridMap parse_map(const std::string& text);
GridMap parse_map_file(const std::string& path);

/// Canonical text form; parse_map(render_map(g)) reproduces g and
/// render_map(parse_map(t)) == t for normalized t.
std::string render_map(const GridMap& map);

}  // namespace momapf
