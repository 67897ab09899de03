#include "momapf/grid_map.hpp"

#include <fstream>
#include <sstream>

namespace momapf {

namespace {

[[noreturn]] void fail(int line_no, const std::string& what) {
  throw ParseError("map line " + std::to_string(line_no) + ": " + what);
}

std::string strip_cr(std::string s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) s.pop_back();
  return s;
}

}  // namespace

GridMap parse_map(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  int width = -1, height = -1;
  bool saw_map = false;

  // Header: "type ..." optional, "height H" and "width W" in either order,
  // then the literal "map" line.
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_cr(line);
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (key == "type") continue;
    if (key == "height" || key == "width") {
      long value = -1;
      if (!(ls >> value) || value <= 0) fail(line_no, "bad " + key + " value");
      (key == "height" ? height : width) = static_cast<int>(value);
      continue;
    }
    if (key == "map") {
      saw_map = true;
      break;
    }
    fail(line_no, "unexpected header token '" + key + "'");
  }
  if (!saw_map) fail(line_no, "missing 'map' line");
  if (height <= 0) fail(line_no, "missing or invalid height");
  if (width <= 0) fail(line_no, "missing or invalid width");

  GridMap map;
  map.width = width;
  map.height = height;
  map.cells.reserve(static_cast<std::size_t>(width) * height);
  for (int r = 0; r < height; ++r) {
    if (!std::getline(in, line)) fail(line_no, "unexpected end of map rows");
    ++line_no;
    line = strip_cr(line);
    if (static_cast<int>(line.size()) != width)
      fail(line_no, "row length " + std::to_string(line.size()) +
                        " != width " + std::to_string(width));
    for (char ch : line) {
      switch (ch) {
        case '.':
        case 'G':
          map.cells.push_back('.');
          break;
        case '@':
        case 'T':
        case 'O':
          map.cells.push_back('@');
          break;
        default:
          fail(line_no, std::string("unknown cell character '") + ch + "'");
      }
    }
  }

  map.cell_to_vertex.assign(map.cells.size(), -1);
  for (std::size_t i = 0; i < map.cells.size(); ++i) {
    if (map.cells[i] == '.') {
      map.cell_to_vertex[i] = static_cast<VertexId>(map.vertex_to_cell.size());
      map.vertex_to_cell.push_back(static_cast<std::int32_t>(i));
    }
  }
  if (map.vertex_to_cell.empty()) fail(line_no, "map has no passable cells");

  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int r = 0; r < height; ++r) {
    for (int c = 0; c < width; ++c) {
      const VertexId v = map.cell_to_vertex[static_cast<std::size_t>(r) * width + c];
      if (v < 0) continue;
      if (c + 1 < width) {
        const VertexId right =
            map.cell_to_vertex[static_cast<std::size_t>(r) * width + c + 1];
        if (right >= 0) edges.emplace_back(v, right);
      }
      if (r + 1 < height) {
        const VertexId down =
            map.cell_to_vertex[static_cast<std::size_t>(r + 1) * width + c];
        if (down >= 0) edges.emplace_back(v, down);
      }
    }
  }
  map.graph = Graph(static_cast<VertexId>(map.vertex_to_cell.size()),
                    std::move(edges));
  return map;
}

GridMap parse_map_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open map file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_map(buf.str());
}

std::string render_map(const GridMap& map) {
  std::ostringstream out;
  out << "type octile\n";
  out << "height " << map.height << "\n";
  out << "width " << map.width << "\n";
  out << "map\n";
  for (int r = 0; r < map.height; ++r) {
    for (int c = 0; c < map.width; ++c)
      out << map.cells[static_cast<std::size_t>(r) * map.width + c];
    out << "\n";
  }
  return out.str();
}

}  // namespace momapf
