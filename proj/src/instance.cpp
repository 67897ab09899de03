#include "momapf/instance.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "momapf/grid_map.hpp"
#include "momapf/rng.hpp"

namespace momapf {

namespace {

using Json = nlohmann::ordered_json;

CostVec random_cost_vec(Rng& rng, int m, Cost lo, Cost hi) {
  CostVec v = CostVec::zeros(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) v[k] = rng.uniform_int(lo, hi);
  return v;
}

Json cost_vec_to_json(const CostVec& v) {
  Json arr = Json::array();
  for (std::size_t m = 0; m < v.size(); ++m) arr.push_back(v[m]);
  return arr;
}

CostVec cost_vec_from_json(const Json& arr, const std::string& field) {
  if (!arr.is_array() || arr.empty())
    throw ValidationError(field + ": expected nonempty integer array");
  CostVec v;
  for (const auto& x : arr) {
    if (!x.is_number_integer())
      throw ValidationError(field + ": cost components must be integers");
    v.c.push_back(x.get<Cost>());
  }
  return v;
}

}  // namespace

CostModel gen_costs(const Graph& graph, int agents, int objectives,
                    std::uint64_t seed, Cost lo, Cost hi) {
  if (agents < 1 || objectives < 1)
    throw std::invalid_argument("gen_costs: need N >= 1 and M >= 1");
  Rng rng(seed);
  CostModel model;
  model.objectives = objectives;
  model.agent_vectors.reserve(static_cast<std::size_t>(agents));
  for (int i = 0; i < agents; ++i)
    model.agent_vectors.push_back(random_cost_vec(rng, objectives, lo, hi));
  model.edge_scales.reserve(graph.edges().size());
  for (std::size_t e = 0; e < graph.edges().size(); ++e)
    model.edge_scales.push_back(random_cost_vec(rng, objectives, lo, hi));
  return model;
}

void gen_endpoints(const Graph& graph, int agents, std::uint64_t seed,
                   std::vector<VertexId>& starts,
                   std::vector<VertexId>& goals) {
  if (agents < 1) throw std::invalid_argument("gen_endpoints: need N >= 1");
  if (agents > graph.vertex_count())
    throw std::invalid_argument(
        "gen_endpoints: more agents than passable vertices (" +
        std::to_string(agents) + " > " +
        std::to_string(graph.vertex_count()) + ")");
  Rng rng(seed);
  starts = rng.sample_without_replacement(graph.vertex_count(), agents);
  goals = rng.sample_without_replacement(graph.vertex_count(), agents);
}

void validate_instance(const Instance& inst) {
  if (inst.agents < 1) throw ValidationError("N: must be >= 1");
  if (inst.objectives < 1) throw ValidationError("M: must be >= 1");
  if (static_cast<int>(inst.starts.size()) != inst.agents)
    throw ValidationError("starts: length != N");
  if (static_cast<int>(inst.goals.size()) != inst.agents)
    throw ValidationError("goals: length != N");
  for (std::size_t i = 0; i < inst.starts.size(); ++i) {
    if (!inst.graph.valid_vertex(inst.starts[i]))
      throw ValidationError("starts[" + std::to_string(i) +
                            "]: invalid vertex id");
    if (!inst.graph.valid_vertex(inst.goals[i]))
      throw ValidationError("goals[" + std::to_string(i) +
                            "]: invalid vertex id");
    for (std::size_t j = i + 1; j < inst.starts.size(); ++j) {
      if (inst.starts[i] == inst.starts[j])
        throw ValidationError("starts: duplicate vertex between agents " +
                              std::to_string(i) + " and " + std::to_string(j));
      if (inst.goals[i] == inst.goals[j])
        throw ValidationError("goals: duplicate vertex between agents " +
                              std::to_string(i) + " and " + std::to_string(j));
    }
  }
  if (inst.costs.objectives != inst.objectives)
    throw ValidationError("costs.M: does not match instance M");
  if (static_cast<int>(inst.costs.agent_vectors.size()) != inst.agents)
    throw ValidationError("agent_vectors: length != N");
  if (inst.costs.edge_scales.size() != inst.graph.edges().size())
    throw ValidationError("edge_scales: length != edge count");
  for (std::size_t i = 0; i < inst.costs.agent_vectors.size(); ++i) {
    const CostVec& a = inst.costs.agent_vectors[i];
    if (static_cast<int>(a.size()) != inst.objectives)
      throw ValidationError("agent_vectors[" + std::to_string(i) +
                            "]: length != M");
    for (std::size_t m = 0; m < a.size(); ++m)
      if (a[m] < 1)
        throw ValidationError("agent_vectors[" + std::to_string(i) + "][" +
                              std::to_string(m) +
                              "]: cost components must be >= 1");
  }
  for (std::size_t e = 0; e < inst.costs.edge_scales.size(); ++e) {
    const CostVec& b = inst.costs.edge_scales[e];
    if (static_cast<int>(b.size()) != inst.objectives)
      throw ValidationError("edge_scales[" + std::to_string(e) +
                            "]: length != M");
    for (std::size_t m = 0; m < b.size(); ++m)
      if (b[m] < 1)
        throw ValidationError("edge_scales[" + std::to_string(e) + "][" +
                              std::to_string(m) +
                              "]: cost components must be >= 1");
  }
}

std::string instance_to_json_text(const Instance& inst) {
  Json j;
  j["version"] = 1;
  j["M"] = inst.objectives;
  j["N"] = inst.agents;
  Json graph;
  graph["vertex_count"] = inst.graph.vertex_count();
  Json edges = Json::array();
  for (const auto& [u, v] : inst.graph.edges()) {
    edges.push_back(Json::array({u, v}));
  }
  graph["edges"] = std::move(edges);
  j["graph"] = std::move(graph);
  j["starts"] = inst.starts;
  j["goals"] = inst.goals;
  Json avs = Json::array();
  for (const auto& a : inst.costs.agent_vectors)
    avs.push_back(cost_vec_to_json(a));
  j["agent_vectors"] = std::move(avs);
  Json scales = Json::array();
  for (const auto& b : inst.costs.edge_scales)
    scales.push_back(cost_vec_to_json(b));
  j["edge_scales"] = std::move(scales);
  return j.dump(2) + "\n";
}

Instance instance_from_json_text(const std::string& text,
                                 const std::string& origin_dir) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const std::exception& e) {
    throw ValidationError(std::string("instance file: invalid JSON: ") +
                          e.what());
  }
  if (!j.is_object()) throw ValidationError("instance file: not an object");
  if (!j.contains("version") || j["version"] != 1)
    throw ValidationError("version: missing or unsupported");

  Instance inst;
  if (!j.contains("M") || !j["M"].is_number_integer())
    throw ValidationError("M: missing integer");
  if (!j.contains("N") || !j["N"].is_number_integer())
    throw ValidationError("N: missing integer");
  inst.objectives = j["M"].get<int>();
  inst.agents = j["N"].get<int>();

  if (j.contains("graph")) {
    const Json& g = j["graph"];
    if (!g.contains("vertex_count") || !g["vertex_count"].is_number_integer())
      throw ValidationError("graph.vertex_count: missing integer");
    std::vector<std::pair<VertexId, VertexId>> edges;
    if (!g.contains("edges") || !g["edges"].is_array())
      throw ValidationError("graph.edges: missing array");
    for (const auto& e : g["edges"]) {
      if (!e.is_array() || e.size() != 2)
        throw ValidationError("graph.edges: entries must be [u,v] pairs");
      edges.emplace_back(e[0].get<VertexId>(), e[1].get<VertexId>());
    }
    try {
      inst.graph = Graph(g["vertex_count"].get<VertexId>(), std::move(edges));
    } catch (const std::exception& e) {
      throw ValidationError(std::string("graph: ") + e.what());
    }
  } else if (j.contains("map_ref")) {
    const std::string rel = j["map_ref"].get<std::string>();
    const std::string path =
        (origin_dir.empty() || rel.find('/') == 0) ? rel
                                                   : origin_dir + "/" + rel;
    inst.graph = parse_map_file(path).graph;
  } else {
    throw ValidationError("instance file: needs 'graph' or 'map_ref'");
  }

  if (!j.contains("starts") || !j["starts"].is_array())
    throw ValidationError("starts: missing array");
  if (!j.contains("goals") || !j["goals"].is_array())
    throw ValidationError("goals: missing array");
  inst.starts = j["starts"].get<std::vector<VertexId>>();
  inst.goals = j["goals"].get<std::vector<VertexId>>();

  inst.costs.objectives = inst.objectives;
  if (j.contains("agent_vectors") && j.contains("edge_scales")) {
    for (std::size_t i = 0; i < j["agent_vectors"].size(); ++i)
      inst.costs.agent_vectors.push_back(cost_vec_from_json(
          j["agent_vectors"][i], "agent_vectors[" + std::to_string(i) + "]"));
    for (std::size_t e = 0; e < j["edge_scales"].size(); ++e)
      inst.costs.edge_scales.push_back(cost_vec_from_json(
          j["edge_scales"][e], "edge_scales[" + std::to_string(e) + "]"));
  } else if (j.contains("cost_seed")) {
    if (!j.contains("generator_id") ||
        j["generator_id"].get<std::string>() != Rng::kGeneratorId)
      throw ValidationError(
          std::string("generator_id: missing or not '") + Rng::kGeneratorId +
          "'");
    inst.costs = gen_costs(inst.graph, inst.agents, inst.objectives,
                           j["cost_seed"].get<std::uint64_t>());
  } else {
    throw ValidationError(
        "instance file: needs agent_vectors+edge_scales or "
        "cost_seed+generator_id");
  }

  validate_instance(inst);
  return inst;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open instance file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  const auto slash = path.find_last_of('/');
  const std::string dir =
      slash == std::string::npos ? std::string(".") : path.substr(0, slash);
  return instance_from_json_text(buf.str(), dir);
}

void save_instance(const Instance& inst, const std::string& path) {
  validate_instance(inst);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ValidationError("cannot write instance file: " + path);
  out << instance_to_json_text(inst);
}

}  // namespace momapf
