#pragma once

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "orthocompact/geometry.hpp"

namespace orthocompact {

enum class NodeKind { Vertex, Bend };

struct Node {
  std::string id;
  NodeKind kind = NodeKind::Vertex;
  Point pos;
};

// An edge is a chain of node ids; consecutive ids form axis-parallel segments.
struct Edge {
  std::vector<std::string> chain;
};

struct Drawing {
  int dimension = 2;  // 2 or 3
  std::vector<Node> nodes;
  std::vector<Edge> edges;
  // Optional: node id -> source-graph vertex, for drawings built from graphs.
  std::map<std::string, int> labels;

  std::unordered_map<std::string, std::size_t> node_index() const {
    std::unordered_map<std::string, std::size_t> m;
    m.reserve(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) m.emplace(nodes[i].id, i);
    return m;
  }
};

enum class ViolationKind {
  // Structural: the drawing data is malformed.
  BadDimension,
  EmptyNodeId,
  DuplicateNodeId,
  NonPlanarCoordinate,  // z != 0 in a 2-dimensional drawing
  UnknownNodeRef,
  ChainTooShort,
  RepeatedNodeInChain,
  ZeroLengthSegment,
  DiagonalSegment,     // consecutive chain nodes differ in more than one coordinate
  StraightBend,        // consecutive segments of one chain lie on the same axis
  EndpointNotVertex,
  InteriorNotBend,
  BendInMultipleChains,
  IsolatedBend,
  // Geometric: the placement breaks the drawing rules.
  CoincidentNodes,
  NodeInsideForeignSegment,
  NodeInsideOwnSegment,
  OverlappingSegments,
};

inline bool is_structural(ViolationKind k) {
  switch (k) {
    case ViolationKind::CoincidentNodes:
    case ViolationKind::NodeInsideForeignSegment:
    case ViolationKind::NodeInsideOwnSegment:
    case ViolationKind::OverlappingSegments:
      return false;
    default:
      return true;
  }
}

inline const char* violation_name(ViolationKind k) {
  switch (k) {
    case ViolationKind::BadDimension: return "bad-dimension";
    case ViolationKind::EmptyNodeId: return "empty-node-id";
    case ViolationKind::DuplicateNodeId: return "duplicate-node-id";
    case ViolationKind::NonPlanarCoordinate: return "non-planar-coordinate";
    case ViolationKind::UnknownNodeRef: return "unknown-node-ref";
    case ViolationKind::ChainTooShort: return "chain-too-short";
    case ViolationKind::RepeatedNodeInChain: return "repeated-node-in-chain";
    case ViolationKind::ZeroLengthSegment: return "zero-length-segment";
    case ViolationKind::DiagonalSegment: return "diagonal-segment";
    case ViolationKind::StraightBend: return "straight-bend";
    case ViolationKind::EndpointNotVertex: return "endpoint-not-vertex";
    case ViolationKind::InteriorNotBend: return "interior-not-bend";
    case ViolationKind::BendInMultipleChains: return "bend-in-multiple-chains";
    case ViolationKind::IsolatedBend: return "isolated-bend";
    case ViolationKind::CoincidentNodes: return "coincident-nodes";
    case ViolationKind::NodeInsideForeignSegment: return "node-inside-foreign-segment";
    case ViolationKind::NodeInsideOwnSegment: return "node-inside-own-segment";
    case ViolationKind::OverlappingSegments: return "overlapping-segments";
  }
  return "unknown";
}

struct Violation {
  ViolationKind kind;
  std::string message;
};

struct ValidityReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }

  bool has(ViolationKind k) const {
    for (const auto& v : violations)
      if (v.kind == k) return true;
    return false;
  }

  std::string to_string() const {
    if (ok()) return "ok";
    std::string out;
    for (const auto& v : violations) {
      out += is_structural(v.kind) ? "[structural] " : "[geometric] ";
      out += violation_name(v.kind);
      out += ": ";
      out += v.message;
      out += "\n";
    }
    return out;
  }
};

namespace detail {

// A maximal straight line of the grid: the axis the line runs along plus the
// two (in 2D, one meaningful) fixed coordinates, in axis order.
struct LineKey {
  int axis;
  Coord a;
  Coord b;
  friend bool operator==(const LineKey&, const LineKey&) = default;
};

struct LineKeyHash {
  std::size_t operator()(const LineKey& k) const {
    std::size_t h = std::hash<int>()(k.axis);
    h ^= std::hash<Coord>()(k.a) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= std::hash<Coord>()(k.b) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

inline LineKey line_of_segment(const Point& p, Axis axis) {
  switch (axis) {
    case Axis::X: return {0, p.y, p.z};
    case Axis::Y: return {1, p.x, p.z};
    case Axis::Z: return {2, p.x, p.y};
  }
  throw std::invalid_argument("bad axis");
}

inline LineKey line_through_node(const Point& p, Axis axis) {
  return line_of_segment(p, axis);
}

}  // namespace detail

// Checks every structural and geometric rule and reports all violations.
//
// Structural rules: dimension is 2 or 3 (z must be 0 in 2D); node ids are
// nonempty and unique; every chain id resolves, chains have at least two
// nodes, all distinct; consecutive chain nodes differ in exactly one
// coordinate; consecutive segments of a chain alternate axes; chain endpoints
// are vertices and interior nodes are bends; every bend lies on exactly one
// chain and no bend is isolated.
//
// Geometric rules: no two nodes coincide; no node lies strictly inside any
// segment; no two collinear segments overlap for a positive length.
// Perpendicular segment crossings away from nodes are legal, as is a
// degree-2 vertex joining collinear segments of two different edges.
inline ValidityReport validate(const Drawing& d) {
  ValidityReport rep;
  auto add = [&rep](ViolationKind k, std::string msg) {
    rep.violations.push_back({k, std::move(msg)});
  };

  if (d.dimension != 2 && d.dimension != 3)
    add(ViolationKind::BadDimension,
        "dimension must be 2 or 3, got " + std::to_string(d.dimension));

  std::unordered_map<std::string, std::size_t> index;
  index.reserve(d.nodes.size());
  for (std::size_t i = 0; i < d.nodes.size(); ++i) {
    const Node& n = d.nodes[i];
    if (n.id.empty()) add(ViolationKind::EmptyNodeId, "node #" + std::to_string(i));
    if (!index.emplace(n.id, i).second)
      add(ViolationKind::DuplicateNodeId, "id '" + n.id + "'");
    if (d.dimension == 2 && n.pos.z != 0)
      add(ViolationKind::NonPlanarCoordinate,
          "node '" + n.id + "' has z=" + std::to_string(n.pos.z));
  }

  // Per-chain structure.  Segments of well-formed steps are collected for the
  // geometric checks; steps that are themselves malformed are excluded.
  struct Seg {
    std::size_t edge;
    Coord lo, hi;
    Axis axis;
  };
  std::unordered_map<detail::LineKey, std::vector<Seg>, detail::LineKeyHash> seg_lines;
  std::vector<std::unordered_set<std::string>> chain_sets(d.edges.size());

  std::unordered_map<std::string, int> bend_uses;  // bend id -> chain memberships
  for (std::size_t e = 0; e < d.edges.size(); ++e) {
    const auto& chain = d.edges[e].chain;
    std::string edge_tag = "edge #" + std::to_string(e);
    if (chain.size() < 2) {
      add(ViolationKind::ChainTooShort, edge_tag + " has " + std::to_string(chain.size()) + " node(s)");
      continue;
    }
    bool resolved = true;
    std::unordered_set<std::string> seen;
    for (const auto& id : chain) {
      if (!index.count(id)) {
        add(ViolationKind::UnknownNodeRef, edge_tag + " references '" + id + "'");
        resolved = false;
      }
      if (!seen.insert(id).second)
        add(ViolationKind::RepeatedNodeInChain, edge_tag + " repeats '" + id + "'");
    }
    if (!resolved) continue;
    chain_sets[e] = std::move(seen);

    for (std::size_t i = 0; i < chain.size(); ++i) {
      const Node& n = d.nodes[index.at(chain[i])];
      bool endpoint = (i == 0 || i + 1 == chain.size());
      if (endpoint && n.kind != NodeKind::Vertex)
        add(ViolationKind::EndpointNotVertex, edge_tag + " endpoint '" + n.id + "'");
      if (!endpoint && n.kind != NodeKind::Bend)
        add(ViolationKind::InteriorNotBend, edge_tag + " interior '" + n.id + "'");
      if (n.kind == NodeKind::Bend) bend_uses[n.id]++;
    }

    std::optional<Axis> prev_axis;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      const Point& p = d.nodes[index.at(chain[i])].pos;
      const Point& q = d.nodes[index.at(chain[i + 1])].pos;
      int dc = diff_count(p, q);
      if (dc == 0) {
        add(ViolationKind::ZeroLengthSegment,
            edge_tag + " between '" + chain[i] + "' and '" + chain[i + 1] + "'");
        prev_axis.reset();
        continue;
      }
      if (dc > 1) {
        add(ViolationKind::DiagonalSegment,
            edge_tag + " between '" + chain[i] + "' and '" + chain[i + 1] + "'");
        prev_axis.reset();
        continue;
      }
      Axis ax = single_axis_between(p, q);
      if (prev_axis && *prev_axis == ax)
        add(ViolationKind::StraightBend,
            edge_tag + " at '" + chain[i] + "' stays on axis " + axis_name(ax));
      prev_axis = ax;
      Coord lo = std::min(p[ax], q[ax]);
      Coord hi = std::max(p[ax], q[ax]);
      seg_lines[detail::line_of_segment(p, ax)].push_back({e, lo, hi, ax});
    }
  }

  for (const auto& n : d.nodes) {
    if (n.kind != NodeKind::Bend) continue;
    auto it = bend_uses.find(n.id);
    int uses = it == bend_uses.end() ? 0 : it->second;
    if (uses == 0)
      add(ViolationKind::IsolatedBend, "bend '" + n.id + "' lies on no chain");
    else if (uses > 1)
      add(ViolationKind::BendInMultipleChains, "bend '" + n.id + "'");
  }

  // Geometric rule 1: no coincident nodes.
  {
    std::unordered_map<Point, std::size_t, PointHash> at;
    at.reserve(d.nodes.size());
    for (std::size_t i = 0; i < d.nodes.size(); ++i) {
      auto [it, fresh] = at.emplace(d.nodes[i].pos, i);
      if (!fresh)
        add(ViolationKind::CoincidentNodes,
            "'" + d.nodes[it->second].id + "' and '" + d.nodes[i].id + "'");
    }
  }

  // Nodes grouped by the grid lines through them, for rule 2.
  std::unordered_map<detail::LineKey, std::vector<std::pair<Coord, std::size_t>>,
                     detail::LineKeyHash>
      node_lines;
  int naxes = d.dimension == 3 ? 3 : 2;
  for (std::size_t i = 0; i < d.nodes.size(); ++i) {
    const Point& p = d.nodes[i].pos;
    for (int a = 0; a < naxes; ++a) {
      Axis ax = Axis(a);
      auto key = detail::line_through_node(p, ax);
      if (seg_lines.count(key)) node_lines[key].push_back({p[ax], i});
    }
  }
  for (auto& [key, v] : node_lines) std::sort(v.begin(), v.end());

  for (auto& [key, segs] : seg_lines) {
    // Geometric rule 2: no node strictly inside a segment.
    auto nit = node_lines.find(key);
    if (nit != node_lines.end()) {
      const auto& line_nodes = nit->second;
      for (const Seg& s : segs) {
        auto lo_it = std::upper_bound(line_nodes.begin(), line_nodes.end(),
                                      std::make_pair(s.lo, std::size_t(-1)));
        for (auto it = lo_it; it != line_nodes.end() && it->first < s.hi; ++it) {
          const Node& n = d.nodes[it->second];
          bool own = chain_sets[s.edge].count(n.id) > 0;
          add(own ? ViolationKind::NodeInsideOwnSegment
                  : ViolationKind::NodeInsideForeignSegment,
              "node '" + n.id + "' inside a segment of edge #" + std::to_string(s.edge));
        }
      }
    }
    // Geometric rule 3: no positive-length overlap of collinear segments.
    std::sort(segs.begin(), segs.end(), [](const Seg& a, const Seg& b) {
      return a.lo != b.lo ? a.lo < b.lo : a.hi < b.hi;
    });
    Coord reach = std::numeric_limits<Coord>::min();
    std::size_t reach_edge = 0;
    for (const Seg& s : segs) {
      if (reach != std::numeric_limits<Coord>::min() && s.lo < reach)
        add(ViolationKind::OverlappingSegments,
            "edges #" + std::to_string(reach_edge) + " and #" + std::to_string(s.edge) +
                " share a " + axis_name(s.axis) + "-collinear stretch");
      if (s.hi > reach || reach == std::numeric_limits<Coord>::min()) {
        reach = s.hi;
        reach_edge = s.edge;
      }
    }
  }

  return rep;
}

struct Metrics {
  std::size_t node_count = 0;
  int rows = 0;  // distinct y-coordinates occupied by nodes
  Coord width = 0;
  Coord height = 0;
  Coord depth = 0;  // 3D only
  Coord area = 0;   // width * height
  Coord volume = 0;  // width * height * depth, 3D only
  Coord longest_edge = 0;
  Coord total_edge_length = 0;
  Coord longest_vertical_edge = 0;  // longest among edges of solely vertical segments
};

inline Metrics metrics(const Drawing& d) {
  Metrics m;
  m.node_count = d.nodes.size();
  if (d.nodes.empty()) return m;

  auto index = d.node_index();
  std::unordered_set<Coord> ys;
  Point lo = d.nodes.front().pos, hi = d.nodes.front().pos;
  for (const auto& n : d.nodes) {
    ys.insert(n.pos.y);
    lo.x = std::min(lo.x, n.pos.x);
    lo.y = std::min(lo.y, n.pos.y);
    lo.z = std::min(lo.z, n.pos.z);
    hi.x = std::max(hi.x, n.pos.x);
    hi.y = std::max(hi.y, n.pos.y);
    hi.z = std::max(hi.z, n.pos.z);
  }
  m.rows = int(ys.size());
  m.width = hi.x - lo.x;
  m.height = hi.y - lo.y;
  m.depth = hi.z - lo.z;
  m.area = checked_mul(m.width, m.height);
  if (d.dimension == 3) m.volume = checked_mul(m.area, m.depth);

  for (const auto& e : d.edges) {
    Coord len = 0;
    bool all_vertical = true;
    for (std::size_t i = 0; i + 1 < e.chain.size(); ++i) {
      auto pit = index.find(e.chain[i]);
      auto qit = index.find(e.chain[i + 1]);
      if (pit == index.end() || qit == index.end())
        throw std::invalid_argument("metrics: chain references unknown node id");
      const Point& p = d.nodes[pit->second].pos;
      const Point& q = d.nodes[qit->second].pos;
      if (diff_count(p, q) != 1)
        throw std::invalid_argument("metrics: chain step is not a grid segment");
      Axis ax = single_axis_between(p, q);
      len += abs_coord(p[ax] - q[ax]);
      if (ax != Axis::Y) all_vertical = false;
    }
    m.total_edge_length += len;
    m.longest_edge = std::max(m.longest_edge, len);
    if (all_vertical && e.chain.size() >= 2)
      m.longest_vertical_edge = std::max(m.longest_vertical_edge, len);
  }
  return m;
}

// Distinct y-coordinates in ascending order, each with the sorted ids of the
// nodes occupying that row.
inline std::vector<std::pair<Coord, std::vector<std::string>>> rows_of(const Drawing& d) {
  std::map<Coord, std::vector<std::string>> rows;
  for (const auto& n : d.nodes) rows[n.pos.y].push_back(n.id);
  std::vector<std::pair<Coord, std::vector<std::string>>> out;
  out.reserve(rows.size());
  for (auto& [y, ids] : rows) {
    std::sort(ids.begin(), ids.end());
    out.emplace_back(y, std::move(ids));
  }
  return out;
}

}  // namespace orthocompact
