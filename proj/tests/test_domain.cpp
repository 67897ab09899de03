#include <doctest.h>

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>

#include "momapf/grid_map.hpp"
#include "momapf/instance.hpp"
#include "momapf/joint.hpp"
#include "momapf/rng.hpp"
#include "support/properties.hpp"

using namespace momapf;
namespace ts = momapf::testsupport;

TEST_CASE("parse_map: 2x2 with one blocked cell") {
  const GridMap map = parse_map("type octile\nheight 2\nwidth 2\nmap\n..\n.@\n");
  CHECK(map.graph.vertex_count() == 3);
  CHECK(map.graph.edges().size() == 2);  // (0,1) and (0,2); diagonal absent
  for (VertexId v = 0; v < 3; ++v) {
    const auto& nbrs = map.graph.neighbors(v);
    CHECK(std::count(nbrs.begin(), nbrs.end(), v) == 1);  // self-loop
  }
}

TEST_CASE("parse_map: 1x3 path graph") {
  const GridMap map = parse_map("type octile\nheight 1\nwidth 3\nmap\n...\n");
  CHECK(map.graph.vertex_count() == 3);
  REQUIRE(map.graph.edges().size() == 2);
  CHECK(map.graph.edges()[0] == std::pair<VertexId, VertexId>{0, 1});
  CHECK(map.graph.edges()[1] == std::pair<VertexId, VertexId>{1, 2});
}

TEST_CASE("parse_map errors carry line numbers") {
  CHECK_THROWS_WITH_AS(parse_map("type octile\nheight 1\nwidth 1\nmap\n@\n"),
                       doctest::Contains("no passable cells"), ParseError);
  CHECK_THROWS_WITH_AS(parse_map("height 2\nwidth 2\nmap\n..\n.\n"),
                       doctest::Contains("line 5"), ParseError);
  CHECK_THROWS_AS(parse_map("height 2\nmap\n..\n..\n"), ParseError);
  CHECK_THROWS_WITH_AS(parse_map("height 1\nwidth 2\nmap\n.x\n"),
                       doctest::Contains("unknown cell"), ParseError);
  CHECK_THROWS_AS(parse_map("bogus 3\nheight 1\nwidth 1\nmap\n.\n"),
                  ParseError);
}

TEST_CASE("render_map round trip on normalized text") {
  const std::string normalized =
      "type octile\nheight 3\nwidth 4\nmap\n..@.\n....\n.@..\n";
  CHECK(render_map(parse_map(normalized)) == normalized);
  // 'G' and 'T' normalize to '.' and '@'
  const GridMap map =
      parse_map("type octile\nheight 1\nwidth 3\nmap\n.GT\n");
  CHECK(render_map(map) == "type octile\nheight 1\nwidth 3\nmap\n..@\n");
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    const GridMap random = ts::random_connected_gridmap(rng, 5, 4, 0.2);
    CHECK(render_map(parse_map(render_map(random))) == render_map(random));
  }
}

TEST_CASE("gen_costs determinism and product definition") {
  const Graph g = ts::make_path_graph(4);
  const CostModel a = gen_costs(g, 2, 3, 99);
  const CostModel b = gen_costs(g, 2, 3, 99);
  CHECK(a.agent_vectors == b.agent_vectors);
  CHECK(a.edge_scales == b.edge_scales);
  const CostModel c = gen_costs(g, 2, 3, 100);
  CHECK(a.agent_vectors != c.agent_vectors);

  for (const auto& v : a.agent_vectors)
    for (std::size_t m = 0; m < v.size(); ++m) {
      CHECK(v[m] >= 1);
      CHECK(v[m] <= 10);
    }

  SUBCASE("degenerate range forces all-ones edge costs") {
    const CostModel ones = gen_costs(g, 2, 3, 7, 1, 1);
    for (int i = 0; i < 2; ++i)
      for (VertexId u = 0; u + 1 < 4; ++u)
        CHECK(ones.edge_cost(i, u, u + 1, g) == CostVec{1, 1, 1});
  }

  SUBCASE("edge cost is the componentwise product") {
    CostModel model;
    model.objectives = 2;
    model.agent_vectors = {CostVec{2, 3}};
    model.edge_scales.assign(g.edges().size(), CostVec{4, 1});
    CHECK(model.edge_cost(0, 0, 1, g) == CostVec{8, 3});
    CHECK(model.edge_cost(0, 1, 0, g) == CostVec{8, 3});
    CHECK(model.edge_cost(0, 1, 1, g) == CostVec{2, 3});  // wait costs a^i
  }
}

TEST_CASE("gen_endpoints") {
  const Graph g = ts::make_path_graph(6);
  std::vector<VertexId> starts, goals;
  gen_endpoints(g, 6, 42, starts, goals);
  std::vector<VertexId> sorted = starts;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::vector<VertexId>{0, 1, 2, 3, 4, 5});

  std::vector<VertexId> s2, g2;
  gen_endpoints(g, 6, 42, s2, g2);
  CHECK(s2 == starts);
  CHECK(g2 == goals);

  const Graph one = ts::make_path_graph(1);
  gen_endpoints(one, 1, 3, s2, g2);
  CHECK(s2 == std::vector<VertexId>{0});
  CHECK(g2 == std::vector<VertexId>{0});

  CHECK_THROWS_AS(gen_endpoints(one, 2, 3, s2, g2), std::invalid_argument);
}

TEST_CASE("psi on spec examples") {
  // two agents swapping across one edge
  AgentSet swap = psi(JointVertex{0, 1}, JointVertex{1, 0});
  CHECK(swap.to_vector() == std::vector<int>{0, 1});
  // vertex conflict at the shared destination
  AgentSet vertex = psi(JointVertex{0, 2}, JointVertex{1, 1});
  CHECK(vertex.to_vector() == std::vector<int>{0, 1});
  // both waiting at distinct vertices
  CHECK(psi(JointVertex{0, 1}, JointVertex{0, 1}).empty());
  // rotation along a cycle is not a swap
  CHECK(psi(JointVertex{0, 1, 2}, JointVertex{1, 2, 0}).empty());
}

TEST_CASE("psi properties") {
  const auto bad = ts::psi_properties(31, 3000);
  for (const auto& b : bad) MESSAGE(b);
  CHECK(bad.empty());
}

TEST_CASE("instance save/load round trip") {
  const auto bad = ts::instance_roundtrip_properties(12, 60);
  for (const auto& b : bad) MESSAGE(b);
  CHECK(bad.empty());
}

TEST_CASE("instance file validation errors name the field") {
  const Graph g = ts::make_path_graph(3);
  Instance inst;
  inst.graph = g;
  inst.agents = 2;
  inst.objectives = 2;
  inst.starts = {0, 1};
  inst.goals = {2, 1};
  inst.costs = ts::uniform_cost_model(g, 2, 2, 3);
  const std::string text = instance_to_json_text(inst);

  SUBCASE("valid text loads") {
    CHECK_NOTHROW(instance_from_json_text(text));
  }
  SUBCASE("duplicate starts rejected") {
    auto j = nlohmann::ordered_json::parse(text);
    j["starts"] = {1, 1};
    CHECK_THROWS_WITH_AS(instance_from_json_text(j.dump()),
                         doctest::Contains("starts"), ValidationError);
  }
  SUBCASE("zero cost component rejected") {
    auto j = nlohmann::ordered_json::parse(text);
    j["agent_vectors"][0][1] = 0;
    CHECK_THROWS_WITH_AS(instance_from_json_text(j.dump()),
                         doctest::Contains(">= 1"), ValidationError);
  }
  SUBCASE("zero edge scale rejected") {
    auto j = nlohmann::ordered_json::parse(text);
    j["edge_scales"][1][0] = 0;
    CHECK_THROWS_WITH_AS(instance_from_json_text(j.dump()),
                         doctest::Contains("edge_scales"), ValidationError);
  }
  SUBCASE("missing cost tables rejected") {
    CHECK_THROWS_AS(
        instance_from_json_text(
            R"({"version":1,"M":1,"N":1,"graph":{"vertex_count":1,"edges":[]},"starts":[0],"goals":[0]})"),
        ValidationError);
  }
}

TEST_CASE("instance files may carry a cost seed instead of tables") {
  const Graph g = ts::make_path_graph(4);
  const CostModel expect = gen_costs(g, 2, 2, 123);
  const std::string text = R"({
    "version": 1, "M": 2, "N": 2,
    "graph": {"vertex_count": 4, "edges": [[0,1],[1,2],[2,3]]},
    "starts": [0, 1], "goals": [2, 3],
    "cost_seed": 123, "generator_id": "mt19937_64-v1"
  })";
  const Instance inst = instance_from_json_text(text);
  CHECK(inst.costs.agent_vectors == expect.agent_vectors);
  CHECK(inst.costs.edge_scales == expect.edge_scales);
  CHECK_THROWS_WITH_AS(
      instance_from_json_text(
          R"({"version":1,"M":1,"N":1,"graph":{"vertex_count":1,"edges":[]},
             "starts":[0],"goals":[0],"cost_seed":1,"generator_id":"other"})"),
      doctest::Contains("generator_id"), ValidationError);
}

TEST_CASE("graph rejects malformed input") {
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(2, {{1, 1}}), std::invalid_argument);
  const Graph g(3, {{0, 1}, {1, 0}, {1, 2}});  // duplicate collapses
  CHECK(g.edges().size() == 2);
  CHECK(g.edge_index(0, 1) == 0);
  CHECK(g.edge_index(1, 0) == 0);
  CHECK(g.edge_index(0, 2) == -1);
}
