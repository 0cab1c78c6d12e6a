#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "orthocompact/drawing.hpp"
#include "orthocompact/graph.hpp"

namespace orthocompact {

// Returns a copy in canonical form: nodes sorted by id, each chain oriented so
// its first id is not lexicographically greater than its last, and edges
// sorted by chain.  Two equal drawings always serialize byte-identically.
inline Drawing canonical_form(const Drawing& d) {
  Drawing out = d;
  std::sort(out.nodes.begin(), out.nodes.end(),
            [](const Node& a, const Node& b) { return a.id < b.id; });
  for (auto& e : out.edges) {
    std::vector<std::string> rev(e.chain.rbegin(), e.chain.rend());
    if (rev < e.chain) e.chain = std::move(rev);
  }
  std::sort(out.edges.begin(), out.edges.end(),
            [](const Edge& a, const Edge& b) { return a.chain < b.chain; });
  return out;
}

inline nlohmann::json drawing_to_json(const Drawing& d) {
  Drawing c = canonical_form(d);
  nlohmann::json j;
  j["dimension"] = c.dimension;
  j["nodes"] = nlohmann::json::array();
  for (const auto& n : c.nodes) {
    nlohmann::json pos = nlohmann::json::array();
    pos.push_back(n.pos.x);
    pos.push_back(n.pos.y);
    if (c.dimension == 3) pos.push_back(n.pos.z);
    j["nodes"].push_back({{"id", n.id},
                          {"kind", n.kind == NodeKind::Vertex ? "vertex" : "bend"},
                          {"pos", pos}});
  }
  j["edges"] = nlohmann::json::array();
  for (const auto& e : c.edges) j["edges"].push_back(e.chain);
  if (!c.labels.empty()) {
    nlohmann::json labels = nlohmann::json::object();
    for (const auto& [id, v] : c.labels) labels[id] = v;
    j["labels"] = labels;
  }
  return j;
}

inline std::string emit_drawing(const Drawing& d) {
  return drawing_to_json(d).dump(2) + "\n";
}

inline Drawing drawing_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::runtime_error("drawing: expected JSON object");
  Drawing d;
  d.dimension = j.at("dimension").get<int>();
  if (d.dimension != 2 && d.dimension != 3)
    throw std::runtime_error("drawing: dimension must be 2 or 3");
  for (const auto& jn : j.at("nodes")) {
    Node n;
    n.id = jn.at("id").get<std::string>();
    std::string kind = jn.at("kind").get<std::string>();
    if (kind == "vertex")
      n.kind = NodeKind::Vertex;
    else if (kind == "bend")
      n.kind = NodeKind::Bend;
    else
      throw std::runtime_error("drawing: node kind must be 'vertex' or 'bend'");
    const auto& pos = jn.at("pos");
    if (!pos.is_array() || int(pos.size()) != d.dimension)
      throw std::runtime_error("drawing: pos must list exactly 'dimension' coordinates");
    n.pos.x = pos.at(0).get<Coord>();
    n.pos.y = pos.at(1).get<Coord>();
    if (d.dimension == 3) n.pos.z = pos.at(2).get<Coord>();
    d.nodes.push_back(std::move(n));
  }
  for (const auto& je : j.at("edges")) {
    Edge e;
    for (const auto& id : je) e.chain.push_back(id.get<std::string>());
    d.edges.push_back(std::move(e));
  }
  if (j.contains("labels"))
    for (const auto& [id, v] : j.at("labels").items()) d.labels[id] = v.get<int>();
  return d;
}

inline Drawing parse_drawing(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("drawing: invalid JSON: ") + e.what());
  }
  try {
    return drawing_from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("drawing: bad schema: ") + e.what());
  }
}

inline nlohmann::json graph_to_json(const Graph& g) {
  Graph c = normalized(g);
  nlohmann::json j;
  j["n"] = c.n;
  j["edges"] = nlohmann::json::array();
  for (auto [u, v] : c.edges) j["edges"].push_back({u, v});
  return j;
}

inline std::string emit_graph(const Graph& g) { return graph_to_json(g).dump(2) + "\n"; }

inline Graph parse_graph(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("graph: invalid JSON: ") + e.what());
  }
  Graph g;
  try {
    g.n = j.at("n").get<int>();
    for (const auto& je : j.at("edges")) {
      if (!je.is_array() || je.size() != 2)
        throw std::runtime_error("graph: each edge must be a pair");
      g.edges.emplace_back(je.at(0).get<int>(), je.at(1).get<int>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("graph: bad schema: ") + e.what());
  }
  return normalized(g);
}

// Row assignments serialize as {"<input y>": output index}.
inline std::string emit_row_assignment(const std::map<Coord, Coord>& a) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [y, r] : a) j[std::to_string(y)] = r;
  return j.dump(2) + "\n";
}

inline std::map<Coord, Coord> parse_row_assignment(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("row assignment: invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::runtime_error("row assignment: expected JSON object");
  std::map<Coord, Coord> a;
  for (const auto& [key, v] : j.items()) {
    try {
      a[std::stoll(key)] = v.get<Coord>();
    } catch (const std::exception&) {
      throw std::runtime_error("row assignment: key '" + key + "' is not an integer row");
    }
  }
  return a;
}

// Feature assignments serialize as {"<node id>": y} (vertical moves) or
// {"<node id>": [x, y]} / [x, y, z] (free moves).
inline std::string emit_feature_assignment_vertical(const std::map<std::string, Coord>& a) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [id, y] : a) j[id] = y;
  return j.dump(2) + "\n";
}

inline std::string emit_feature_assignment_free(const std::map<std::string, Point>& a,
                                                int dimension) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [id, p] : a) {
    nlohmann::json pos = nlohmann::json::array();
    pos.push_back(p.x);
    pos.push_back(p.y);
    if (dimension == 3) pos.push_back(p.z);
    j[id] = pos;
  }
  return j.dump(2) + "\n";
}

inline std::map<std::string, Coord> parse_feature_assignment_vertical(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.is_object()) throw std::runtime_error("feature assignment: expected JSON object");
  std::map<std::string, Coord> a;
  for (const auto& [id, v] : j.items()) a[id] = v.get<Coord>();
  return a;
}

inline std::map<std::string, Point> parse_feature_assignment_free(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.is_object()) throw std::runtime_error("feature assignment: expected JSON object");
  std::map<std::string, Point> a;
  for (const auto& [id, v] : j.items()) {
    if (!v.is_array() || v.size() < 2 || v.size() > 3)
      throw std::runtime_error("feature assignment: positions must be [x,y] or [x,y,z]");
    Point p;
    p.x = v.at(0).get<Coord>();
    p.y = v.at(1).get<Coord>();
    if (v.size() == 3) p.z = v.at(2).get<Coord>();
    a[id] = p;
  }
  return a;
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

inline Drawing load_drawing(const std::string& path) { return parse_drawing(read_text_file(path)); }
inline Graph load_graph(const std::string& path) { return parse_graph(read_text_file(path)); }

}  // namespace orthocompact
