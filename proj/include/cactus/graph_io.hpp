#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "cactus/backtrack.hpp"
#include "cactus/graph.hpp"
#include "cactus/tree.hpp"

namespace cactus {

using Json = nlohmann::ordered_json;

namespace detail {

inline std::int64_t read_int(const nlohmann::json& obj, const char* key, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw GraphError(GraphErrorKind::kParse, where, where + ": missing '" + key + "'");
  if (!it->is_number_integer()) {
    throw GraphError(GraphErrorKind::kParse, where, where + ": '" + key + "' must be an integer");
  }
  return it->get<std::int64_t>();
}

inline std::optional<std::int64_t> read_opt_int(const nlohmann::json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key) || obj.at(key).is_null()) return std::nullopt;
  return read_int(obj, key, where);
}

inline std::string read_str(const nlohmann::json& obj, const char* key, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end() || !it->is_string()) {
    throw GraphError(GraphErrorKind::kParse, where, where + ": '" + key + "' must be a string");
  }
  return it->get<std::string>();
}

}  // namespace detail

inline RawGraph parse_graph(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw GraphError(GraphErrorKind::kParse, "", std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array()) {
    throw GraphError(GraphErrorKind::kParse, "", "graph document needs a 'vertices' array");
  }
  if (doc.contains("edges") && !doc["edges"].is_array()) {
    throw GraphError(GraphErrorKind::kParse, "", "'edges' must be an array");
  }
  RawGraph g;
  std::size_t i = 0;
  for (const auto& v : doc["vertices"]) {
    const std::string where = "vertex #" + std::to_string(i++);
    if (!v.is_object()) throw GraphError(GraphErrorKind::kParse, where, where + " is not an object");
    g.vertices.push_back({detail::read_str(v, "id", where), detail::read_int(v, "weight", where),
                          detail::read_opt_int(v, "size", where)});
  }
  i = 0;
  for (const auto& e : doc.value("edges", nlohmann::json::array())) {
    const std::string where = "edge #" + std::to_string(i++);
    if (!e.is_object()) throw GraphError(GraphErrorKind::kParse, where, where + " is not an object");
    g.edges.push_back({detail::read_str(e, "u", where), detail::read_str(e, "v", where),
                       detail::read_opt_int(e, "cost", where), detail::read_opt_int(e, "capacity", where)});
  }
  return g;
}

inline RawGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError(GraphErrorKind::kParse, path, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

inline Json to_json(const RawGraph& g) {
  Json doc;
  doc["vertices"] = Json::array();
  for (const auto& v : g.vertices) {
    Json jv{{"id", v.id}, {"weight", v.weight}};
    if (v.size) jv["size"] = *v.size;
    doc["vertices"].push_back(std::move(jv));
  }
  doc["edges"] = Json::array();
  for (const auto& e : g.edges) {
    Json je{{"u", e.u}, {"v", e.v}};
    if (e.cost) je["cost"] = *e.cost;
    if (e.capacity) je["capacity"] = *e.capacity;
    doc["edges"].push_back(std::move(je));
  }
  return doc;
}

/// Rooted tree plus cycle records, keyed by vertex ids.
inline Json tree_to_json(const CactusGraph& g, const CactusTree& t) {
  Json doc;
  doc["root"] = g.id(t.root());
  Json nodes = Json::array();
  for (Vertex v = 0; v < t.num_vertices(); ++v) {
    Json kids = Json::array();
    for (const auto& c : t.children(v)) kids.push_back(g.id(c.vertex));
    Json node{{"id", g.id(v)}, {"children", std::move(kids)}};
    node["parent"] = v == t.root() ? Json(nullptr) : Json(g.id(t.parent(v)));
    nodes.push_back(std::move(node));
  }
  doc["nodes"] = std::move(nodes);
  Json cycles = Json::array();
  for (const auto& c : t.cycles()) {
    Json path = Json::array();
    for (Vertex v : c.path) path.push_back(g.id(v));
    const Edge& closing = g.edge(c.closing_edge);
    cycles.push_back(Json{{"start", g.id(c.start())},
                          {"end", g.id(c.end())},
                          {"length", c.length()},
                          {"path", std::move(path)},
                          {"closing_edge", {g.id(closing.u), g.id(closing.v)}},
                          {"child_index_at_start", c.child_index_at_start}});
  }
  doc["cycles"] = std::move(cycles);
  return doc;
}

inline Json stats_to_json(const SolveStats& s) {
  return Json{{"vertices", s.vertices},         {"cycles", s.cycles},       {"max_cycle_length", s.max_cycle_length},
              {"dp_steps", s.dp_steps},         {"dp_elements", s.dp_elements},
              {"max_set_size", s.max_set_size}, {"wall_ms", s.wall_ms}};
}

inline Json result_to_json(const CactusGraph& g, const PartitionResult& r) {
  Json doc;
  doc["feasible"] = r.feasible();
  doc["status"] = to_string(r.status);
  if (r.feasible()) doc["objective"] = r.objective;
  if (r.feasible() && r.partition) {
    Json clusters = Json::array();
    for (const auto& c : r.partition->clusters) {
      Json ids = Json::array();
      for (Vertex v : c.vertices) ids.push_back(g.id(v));
      clusters.push_back(std::move(ids));
    }
    doc["clusters"] = std::move(clusters);
    Json cut = Json::array();
    for (EdgeId e : r.partition->cut_edges) cut.push_back({g.id(g.edge(e).u), g.id(g.edge(e).v)});
    doc["cut_edges"] = std::move(cut);
  }
  doc["stats"] = stats_to_json(r.stats);
  return doc;
}

}  // namespace cactus
