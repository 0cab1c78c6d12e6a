#pragma once

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "orthocompact/compaction.hpp"
#include "orthocompact/drawing.hpp"
#include "orthocompact/fpt.hpp"
#include "orthocompact/graph.hpp"

namespace orthocompact {

// A vertex coloring of a graph: colors[v] is the color of vertex v.
struct Coloring {
  std::vector<int> colors;

  int count() const { return color_count(colors); }
};

namespace detail {

inline std::string red_id(const char* prefix, long long a) {
  return std::string(prefix) + std::to_string(a);
}

inline void red_add_node(Drawing& d, const std::string& id, Coord x, Coord y, Coord z = 0) {
  d.nodes.push_back(Node{id, NodeKind::Vertex, Point{x, y, z}});
}

inline void red_add_edge(Drawing& d, const std::string& a, const std::string& b) {
  d.edges.push_back(Edge{{a, b}});
}

// Chains a run of already-added nodes into consecutive two-node edges, so every
// interior point of the run is a vertex, not a bend.
inline void red_chain_run(Drawing& d, const std::vector<std::string>& ids) {
  for (std::size_t i = 0; i + 1 < ids.size(); ++i) red_add_edge(d, ids[i], ids[i + 1]);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Chinese postman walk
// ---------------------------------------------------------------------------

// Walk visiting every edge of a connected graph at least once, with at most
// 2*m - 1 steps: Euler tour of the doubled multigraph, minus its closing step.
// Deterministic: starts at vertex 0, takes the smallest available neighbor.
inline std::vector<int> chinese_postman_walk(const Graph& g_in) {
  Graph g = normalized(g_in);
  if (g.edges.empty()) throw std::invalid_argument("postman walk: graph has no edges");
  if (!is_connected(g)) throw std::invalid_argument("postman walk: graph is not connected");

  // Doubled multigraph: each undirected edge contributes two traversable copies,
  // so every vertex degree is even and an Euler circuit exists.
  struct Arc {
    int to;
    std::size_t twin;  // index into arcs[] of the reverse arc
    bool used = false;
  };
  std::vector<std::vector<Arc>> arcs(g.n);
  for (auto [u, v] : g.edges) {
    for (int copy = 0; copy < 2; ++copy) {
      arcs[u].push_back(Arc{v, 0});
      arcs[v].push_back(Arc{u, 0});
    }
  }
  for (auto& a : arcs)
    std::sort(a.begin(), a.end(), [](const Arc& l, const Arc& r) { return l.to < r.to; });
  // Pair each arc with its reverse copy (stable within equal endpoints).
  {
    std::map<std::pair<int, int>, std::vector<std::pair<int, std::size_t>>> slots;
    for (int u = 0; u < g.n; ++u)
      for (std::size_t i = 0; i < arcs[u].size(); ++i) slots[{u, arcs[u][i].to}].emplace_back(u, i);
    for (auto& [key, list] : slots) {
      auto [u, v] = key;
      if (u > v) continue;
      auto& rev = slots[{v, u}];
      for (std::size_t i = 0; i < list.size(); ++i) {
        arcs[list[i].first][list[i].second].twin = rev[i].second;
        arcs[rev[i].first][rev[i].second].twin = list[i].second;
      }
    }
  }

  // Iterative Hierholzer from vertex 0.
  std::vector<std::size_t> next_arc(g.n, 0);
  std::vector<int> stack = {0}, circuit;
  while (!stack.empty()) {
    int u = stack.back();
    while (next_arc[u] < arcs[u].size() && arcs[u][next_arc[u]].used) ++next_arc[u];
    if (next_arc[u] == arcs[u].size()) {
      circuit.push_back(u);
      stack.pop_back();
    } else {
      Arc& a = arcs[u][next_arc[u]];
      a.used = true;
      arcs[a.to][a.twin].used = true;
      stack.push_back(a.to);
    }
  }
  std::reverse(circuit.begin(), circuit.end());
  // circuit has 2m steps and closes at vertex 0; dropping the final step keeps
  // every edge covered (its twin copy remains) and makes the walk open.
  circuit.pop_back();
  return circuit;
}

// ---------------------------------------------------------------------------
// Path drawing from a walk
// ---------------------------------------------------------------------------

// Lays out a walk u_0..u_k as a path drawing: visit i becomes a unit horizontal
// segment at row label(u_i) = u_i + 1 spanning columns [i, i+1]; consecutive
// visits are joined by a vertical step. Node labels record the walk vertex.
inline Drawing build_path_drawing(const Graph& g_in, const std::vector<int>& walk) {
  Graph g = normalized(g_in);
  if (!is_connected(g)) throw std::invalid_argument("path drawing: graph is not connected");
  if (walk.size() < 2) throw std::invalid_argument("path drawing: walk needs at least one step");
  std::set<std::pair<int, int>> covered;
  for (std::size_t i = 0; i < walk.size(); ++i) {
    if (walk[i] < 0 || walk[i] >= g.n)
      throw std::invalid_argument("path drawing: walk vertex out of range");
    if (i + 1 < walk.size()) {
      auto e = std::minmax(walk[i], walk[i + 1]);
      if (!std::binary_search(g.edges.begin(), g.edges.end(), std::make_pair(e.first, e.second)))
        throw std::invalid_argument("path drawing: walk step is not a graph edge");
      covered.insert({e.first, e.second});
    }
  }
  if (covered.size() != g.edges.size())
    throw std::invalid_argument("path drawing: walk does not cover every edge");

  Drawing d;
  d.dimension = 2;
  const std::size_t k = walk.size() - 1;  // number of steps
  for (std::size_t i = 0; i <= k; ++i) {
    Coord row = walk[i] + 1;
    std::string p = detail::red_id("p", i), q = detail::red_id("q", i);
    detail::red_add_node(d, p, Coord(i), row);
    detail::red_add_node(d, q, Coord(i) + 1, row);
    d.labels[p] = walk[i];
    d.labels[q] = walk[i];
    detail::red_add_edge(d, p, q);
    if (i > 0) detail::red_add_edge(d, detail::red_id("q", i - 1), p);
  }
  return d;
}

inline Drawing build_path_drawing(const Graph& g) {
  return build_path_drawing(g, chinese_postman_walk(g));
}

// ---------------------------------------------------------------------------
// Row frame around a path drawing
// ---------------------------------------------------------------------------

// Frames the path drawing with a full-width bottom chain (row 0), a full-width
// top chain (row n+1), and phi tall vertical edges on the right, keeping the
// whole drawing a single path. Every horizontal piece is unit length, so after
// any row-by-row compaction the longest edge is a right-hand vertical.
inline Drawing add_row_frame(const Graph& g_in, int phi, const std::vector<int>& walk) {
  if (phi <= 0) throw std::invalid_argument("row frame: phi must be positive");
  Graph g = normalized(g_in);
  Drawing d = build_path_drawing(g, walk);
  const long long k = static_cast<long long>(walk.size()) - 1;
  const Coord top = g.n + 1;

  // Bottom chain: (-1,0) .. (k+1,0), unit steps.
  std::vector<std::string> bot;
  for (long long c = -1; c <= k + 1; ++c) {
    std::string id = detail::red_id("fb", c);
    detail::red_add_node(d, id, c, 0);
    bot.push_back(id);
  }
  detail::red_chain_run(d, bot);
  // Top chain: (-1,top) .. (k+1,top), unit steps.
  std::vector<std::string> topc;
  for (long long c = -1; c <= k + 1; ++c) {
    std::string id = detail::red_id("ft", c);
    detail::red_add_node(d, id, c, top);
    topc.push_back(id);
  }
  detail::red_chain_run(d, topc);

  // Down arm: path end q_k down to the bottom chain's right end.
  detail::red_add_edge(d, detail::red_id("q", k), detail::red_id("fb", k + 1));
  // Left arm: top chain's left end down to row label(u_0), then into p_0.
  std::string fl = "fl";
  detail::red_add_node(d, fl, -1, walk.front() + 1);
  detail::red_add_edge(d, detail::red_id("ft", -1), fl);
  detail::red_add_edge(d, fl, "p0");

  // Right serpentine: phi tall verticals at columns k+2 .. k+1+phi, joined by
  // unit jogs alternating between the top and bottom rows.
  std::string prev = detail::red_id("ft", k + 1);
  bool at_top = true;
  for (int j = 1; j <= phi; ++j) {
    Coord col = k + 1 + j;
    std::string near = detail::red_id(at_top ? "frt" : "frb", j);
    std::string far = detail::red_id(at_top ? "frb" : "frt", j);
    detail::red_add_node(d, near, col, at_top ? top : 0);
    detail::red_add_node(d, far, col, at_top ? 0 : top);
    detail::red_add_edge(d, prev, near);  // horizontal jog
    detail::red_add_edge(d, near, far);   // tall vertical
    prev = far;
    at_top = !at_top;
  }
  return d;
}

inline Drawing add_row_frame(const Graph& g, int phi) {
  return add_row_frame(g, phi, chinese_postman_walk(g));
}

// ---------------------------------------------------------------------------
// Vertex bundles with edge gadgets
// ---------------------------------------------------------------------------

// Column/row bookkeeping for the bundle construction, exposed for tests.
struct BundleLayout {
  struct VertexCols {
    Coord left = 0, right = 0, tie = 0;  // serpentine ends and frame-tie column
  };
  struct EdgeSlots {
    int u = 0, v = 0;          // lower and upper endpoint (u < v)
    Coord cu = 0, du = 0;      // B attachment and guard column inside u's range
    Coord cv = 0, dv = 0;      // A attachment and guard column inside v's range
    Coord top = 0, bottom = 0; // rectangle rows (top = bottom + 1)
  };
  std::vector<VertexCols> vertex;
  std::vector<Coord> base_row;  // bottom row of each vertex's bundle
  std::vector<EdgeSlots> edge;
};

namespace detail {

inline BundleLayout bundle_layout(const Graph& g, int theta) {
  std::vector<int> deg(g.n, 0);
  for (auto [u, v] : g.edges) {
    ++deg[u];
    ++deg[v];
  }
  BundleLayout lay;
  lay.vertex.resize(g.n);
  lay.base_row.resize(g.n);
  const long long m = static_cast<long long>(g.edges.size());
  Coord cursor = 0;
  for (int i = 0; i < g.n; ++i) {
    lay.vertex[i].left = cursor;
    lay.vertex[i].right = cursor + 2 * deg[i] + 2;
    lay.vertex[i].tie = lay.vertex[i].right - 1;
    cursor = lay.vertex[i].right + 2;
    lay.base_row[i] = Coord(i) * (theta + 2 * m + 2);
  }
  std::vector<int> slot(g.n, 0), stacked(g.n, 0);
  lay.edge.resize(g.edges.size());
  for (std::size_t kk = 0; kk < g.edges.size(); ++kk) {
    auto [u, v] = g.edges[kk];
    BundleLayout::EdgeSlots& e = lay.edge[kk];
    e.u = u;
    e.v = v;
    e.cu = lay.vertex[u].left + 1 + 2 * slot[u];
    e.du = e.cu + 1;
    ++slot[u];
    e.cv = lay.vertex[v].left + 1 + 2 * slot[v];
    e.dv = e.cv + 1;
    ++slot[v];
    e.top = lay.base_row[v] - 2 - 2 * stacked[v];
    e.bottom = e.top - 1;
    ++stacked[v];
  }
  return lay;
}

// Shared builder for the bundle drawing, optionally adding the two frame-tie
// subdivision nodes used by add_vxv_frame.
inline Drawing build_bundle_impl(const Graph& g, int theta, bool tie_nodes, BundleLayout* out) {
  BundleLayout lay = bundle_layout(g, theta);
  Drawing d;
  d.dimension = 2;

  // Interior subdivision points per (vertex, segment), keyed by column.
  std::vector<std::map<Coord, std::string>> bottom_seg(g.n), top_seg(g.n);
  for (std::size_t kk = 0; kk < g.edges.size(); ++kk) {
    const auto& e = lay.edge[kk];
    // A sits on the upper vertex's bottom segment, guarded one column right.
    bottom_seg[e.v][e.cv] = red_id("e", kk) + "_A";
    bottom_seg[e.v][e.dv] = red_id("e", kk) + "_ga";
    // B sits on the lower vertex's top segment, guarded one column right.
    top_seg[e.u][e.cu] = red_id("e", kk) + "_B";
    top_seg[e.u][e.du] = red_id("e", kk) + "_gb";
  }
  if (tie_nodes && g.n > 0) {
    bottom_seg[0][lay.vertex[0].tie] = "f_tieb_s";
    top_seg[g.n - 1][lay.vertex[g.n - 1].tie] = "f_tiet_s";
  }

  for (int i = 0; i < g.n; ++i) {
    std::vector<std::string> ends_l(theta), ends_r(theta);
    for (int j = 0; j < theta; ++j) {
      Coord row = lay.base_row[i] + j;
      std::vector<std::pair<Coord, std::string>> run;
      run.emplace_back(lay.vertex[i].left, red_id("v", i) + "_s" + std::to_string(j) + "_l");
      if (j == 0)
        for (const auto& [col, id] : bottom_seg[i]) run.emplace_back(col, id);
      if (j == theta - 1)
        for (const auto& [col, id] : top_seg[i]) run.emplace_back(col, id);
      run.emplace_back(lay.vertex[i].right, red_id("v", i) + "_s" + std::to_string(j) + "_r");
      std::sort(run.begin(), run.end());
      std::vector<std::string> ids;
      for (const auto& [col, id] : run) {
        red_add_node(d, id, col, row);
        d.labels[id] = i;
        ids.push_back(id);
      }
      red_chain_run(d, ids);
      ends_l[j] = run.front().second;
      ends_r[j] = run.back().second;
    }
    // Serpentine: consecutive segments joined at alternating ends.
    for (int j = 0; j + 1 < theta; ++j) {
      if (j % 2 == 0)
        red_add_edge(d, ends_r[j], ends_r[j + 1]);
      else
        red_add_edge(d, ends_l[j], ends_l[j + 1]);
    }
  }

  for (std::size_t kk = 0; kk < g.edges.size(); ++kk) {
    const auto& e = lay.edge[kk];
    const std::string p = red_id("e", kk) + "_";
    const std::vector<std::pair<Coord, std::string>> cols = {
        {lay.vertex[e.u].left, "l"},  {e.cu, "cu"}, {e.du, "du"}, {lay.vertex[e.u].right, "ru"},
        {lay.vertex[e.v].left, "lv"}, {e.cv, "cv"}, {e.dv, "dv"}, {lay.vertex[e.v].right, "r"}};
    std::vector<std::string> top_ids, bot_ids;
    for (const auto& [col, suffix] : cols) {
      red_add_node(d, p + "t" + suffix, col, e.top);
      red_add_node(d, p + "b" + suffix, col, e.bottom);
      top_ids.push_back(p + "t" + suffix);
      bot_ids.push_back(p + "b" + suffix);
    }
    red_chain_run(d, top_ids);
    red_chain_run(d, bot_ids);
    red_add_edge(d, p + "tdu", p + "bdu");  // side at the u guard column
    red_add_edge(d, p + "tdv", p + "bdv");  // side at the v guard column
    red_add_edge(d, p + "A", p + "tcv");    // A's attachment vertical
    red_add_edge(d, p + "B", p + "bcu");    // B's attachment vertical
  }

  if (out) *out = lay;
  return d;
}

}  // namespace detail

// One vertex bundle (theta stacked parallel segments, serpentine-chained) per
// graph vertex, plus one edge gadget per graph edge whose central rectangle
// forces the two endpoint bundles onto opposite sides in every vertical
// compaction. Node count is exactly 2*theta*n + 20*m; max degree 3.
inline Drawing build_bundle_drawing(const Graph& g_in, int theta) {
  if (theta <= 0) throw std::invalid_argument("bundle drawing: theta must be positive");
  Graph g = normalized(g_in);
  return detail::build_bundle_impl(g, theta, false, nullptr);
}

inline BundleLayout bundle_drawing_layout(const Graph& g_in, int theta) {
  if (theta <= 0) throw std::invalid_argument("bundle drawing: theta must be positive");
  Graph g = normalized(g_in);
  return detail::bundle_layout(g, theta);
}

// The pure six-node edge gadget on its own: central rectangle with attachment
// verticals for A (above) and B (below). In every vertical compaction A and B
// end up strictly on opposite sides of the rectangle.
inline Drawing isolated_edge_gadget() {
  Drawing d;
  d.dimension = 2;
  detail::red_add_node(d, "bl", 0, 0);
  detail::red_add_node(d, "br", 4, 0);
  detail::red_add_node(d, "tl", 0, 1);
  detail::red_add_node(d, "tr", 4, 1);
  detail::red_add_node(d, "A", 4, 3);
  detail::red_add_node(d, "B", 0, -2);
  detail::red_add_edge(d, "tl", "tr");
  detail::red_add_edge(d, "bl", "br");
  detail::red_add_edge(d, "tl", "bl");
  detail::red_add_edge(d, "tr", "br");
  detail::red_add_edge(d, "A", "tr");
  detail::red_add_edge(d, "B", "bl");
  return d;
}

// ---------------------------------------------------------------------------
// Frame for vertical compaction objectives
// ---------------------------------------------------------------------------

// Sandwiches the bundle drawing between full-width top and bottom chains that
// are subdivided at every column carrying a vertical edge, and adds phi tall
// verticals on the right. In every vertical compaction the interior stays
// strictly between the chains, so the tall verticals realize row-count - 1 as
// the longest vertical edge.
inline Drawing add_vxv_frame(const Graph& g_in, int theta, int phi) {
  if (theta <= 0) throw std::invalid_argument("vxv frame: theta must be positive");
  if (phi <= 0) throw std::invalid_argument("vxv frame: phi must be positive");
  Graph g = normalized(g_in);
  if (g.n < 2) throw std::invalid_argument("vxv frame: needs at least two vertices");

  BundleLayout lay;
  Drawing d = detail::build_bundle_impl(g, theta, true, &lay);

  const Coord interior_top = lay.base_row[g.n - 1] + theta - 1;
  const Coord t_row = interior_top + 2, b_row = -2;

  // Columns where the chains need nodes: every column carrying a vertical edge,
  // the chain ends, and the rung columns.
  std::set<Coord> cuts;
  for (int i = 0; i < g.n; ++i) {
    cuts.insert(lay.vertex[i].left);
    cuts.insert(lay.vertex[i].right);
  }
  for (const auto& e : lay.edge) {
    cuts.insert(e.cu);
    cuts.insert(e.du);
    cuts.insert(e.cv);
    cuts.insert(e.dv);
  }
  cuts.insert(lay.vertex[0].tie);
  cuts.insert(lay.vertex[g.n - 1].tie);
  const Coord right_edge = lay.vertex[g.n - 1].right;
  std::vector<Coord> rungs;
  for (int j = 1; j <= phi; ++j) rungs.push_back(right_edge + 2 * j);
  cuts.insert(-2);
  for (Coord c : rungs) cuts.insert(c);

  std::vector<std::string> top_ids, bot_ids;
  for (Coord c : cuts) {
    std::string t = detail::red_id("f_t_", c), b = detail::red_id("f_b_", c);
    detail::red_add_node(d, t, c, t_row);
    detail::red_add_node(d, b, c, b_row);
    top_ids.push_back(t);
    bot_ids.push_back(b);
  }
  detail::red_chain_run(d, top_ids);
  detail::red_chain_run(d, bot_ids);
  for (Coord c : rungs)
    detail::red_add_edge(d, detail::red_id("f_t_", c), detail::red_id("f_b_", c));
  // Ties: top chain to the highest bundle's top segment, bottom chain to the
  // lowest bundle's bottom segment.
  detail::red_add_edge(d, "f_tiet_s", detail::red_id("f_t_", lay.vertex[g.n - 1].tie));
  detail::red_add_edge(d, "f_tieb_s", detail::red_id("f_b_", lay.vertex[0].tie));
  return d;
}

// ---------------------------------------------------------------------------
// Fix-bar
// ---------------------------------------------------------------------------

// Adds a chained bottom bar with one node at every integer column of the
// drawing's x-span, attached by a single vertical at the rightmost bottom-row
// point. Folding the bar would overlap its own segments, so its width can
// never drop below the original x-span: the bar pins the drawing horizontally
// at the cost of exactly one extra row.
inline Drawing add_fixbar(const Drawing& d_in) {
  ValidityReport rep = validate(d_in);
  if (!rep.ok()) throw std::invalid_argument("fixbar: input drawing is invalid: " + rep.to_string());
  if (d_in.dimension != 2) throw std::invalid_argument("fixbar: input must be 2-dimensional");
  if (d_in.nodes.empty()) throw std::invalid_argument("fixbar: input drawing is empty");
  for (const Node& n : d_in.nodes)
    if (n.id.rfind("fixbar_", 0) == 0)
      throw std::invalid_argument("fixbar: input already uses fixbar_ node ids");

  Drawing d = d_in;
  Coord min_x = d.nodes.front().pos.x, max_x = min_x;
  Coord min_y = d.nodes.front().pos.y;
  for (const Node& n : d.nodes) {
    min_x = std::min(min_x, n.pos.x);
    max_x = std::max(max_x, n.pos.x);
    min_y = std::min(min_y, n.pos.y);
  }
  Coord attach_x = std::numeric_limits<Coord>::min();
  std::string attach_id;
  for (const Node& n : d.nodes)
    if (n.pos.y == min_y && n.pos.x > attach_x) {
      attach_x = n.pos.x;
      attach_id = n.id;
    }

  const Coord bar_row = min_y - 1;
  std::vector<std::string> bar;
  std::string attach_bar;
  for (Coord x = min_x; x <= max_x; ++x) {
    std::string id = detail::red_id("fixbar_", x - min_x);
    detail::red_add_node(d, id, x, bar_row);
    bar.push_back(id);
    if (x == attach_x) attach_bar = id;
  }
  detail::red_chain_run(d, bar);
  detail::red_add_edge(d, attach_bar, attach_id);
  return d;
}

// ---------------------------------------------------------------------------
// 3D drawing from a graph
// ---------------------------------------------------------------------------

// One L-gadget (corner plus two arms) per vertex on its own layer, arranged so
// all pairs of L's cross in the top-down projection, and one vertical two-node
// connector per edge at the crossing point of its endpoints' arms. Two L's can
// share a layer exactly when their vertices are non-adjacent, so the optimal
// layer count equals the chromatic number. Node count is exactly 3n + 2m.
inline Drawing build_3d_drawing(const Graph& g_in) {
  Graph g = normalized(g_in);
  Drawing d;
  d.dimension = 3;
  const Coord far_x = 2 * Coord(g.n) - 1, far_z = 2 * Coord(g.n) - 1;

  // Subdivision points per arm, keyed by position along the arm.
  std::vector<std::map<Coord, std::string>> x_arm(g.n), z_arm(g.n);
  for (std::size_t kk = 0; kk < g.edges.size(); ++kk) {
    auto [u, v] = g.edges[kk];
    x_arm[u][2 * Coord(v)] = detail::red_id("e", kk) + "_lo";
    z_arm[v][2 * Coord(g.n) - 2 - 2 * Coord(u)] = detail::red_id("e", kk) + "_hi";
  }

  for (int i = 0; i < g.n; ++i) {
    const Coord cx = 2 * Coord(i), cz = 2 * Coord(g.n) - 2 - 2 * Coord(i), layer = i;
    std::vector<std::string> xr = {detail::red_id("c", i)};
    detail::red_add_node(d, xr.front(), cx, layer, cz);
    d.labels[xr.front()] = i;
    for (const auto& [x, id] : x_arm[i]) {
      detail::red_add_node(d, id, x, layer, cz);
      d.labels[id] = i;
      xr.push_back(id);
    }
    detail::red_add_node(d, detail::red_id("xe", i), far_x, layer, cz);
    d.labels[detail::red_id("xe", i)] = i;
    xr.push_back(detail::red_id("xe", i));
    detail::red_chain_run(d, xr);

    std::vector<std::string> zr = {detail::red_id("c", i)};
    for (const auto& [z, id] : z_arm[i]) {
      detail::red_add_node(d, id, cx, layer, z);
      d.labels[id] = i;
      zr.push_back(id);
    }
    detail::red_add_node(d, detail::red_id("ze", i), cx, layer, far_z);
    d.labels[detail::red_id("ze", i)] = i;
    zr.push_back(detail::red_id("ze", i));
    detail::red_chain_run(d, zr);
  }
  for (std::size_t kk = 0; kk < g.edges.size(); ++kk)
    detail::red_add_edge(d, detail::red_id("e", kk) + "_lo", detail::red_id("e", kk) + "_hi");
  return d;
}

// ---------------------------------------------------------------------------
// 3D frame
// ---------------------------------------------------------------------------

// Adds a full top mesh above the 3D drawing, a sub-diagonal bottom mesh below
// it, one frame-to-frame vertical at every sub-diagonal grid point (there are
// 1 + 2 + ... + (2n-2) of them), and one tie from the top mesh down to each
// L-gadget's far arm end. The top mesh conflicts with every L-gadget, so the
// optimal layer count of the framed drawing is chi + 1.
inline Drawing add_3d_frame(const Graph& g_in) {
  Graph g = normalized(g_in);
  if (g.n <= 4) throw std::invalid_argument("3d frame: needs more than four vertices");
  Drawing d = build_3d_drawing(g);
  const Coord side = 2 * Coord(g.n);  // grid coordinates 0 .. side-1
  const Coord t_layer = g.n, b_layer = -1;

  // Top mesh: full square grid of unit steps along x, tied together by a unit
  // column along z at x = 0.
  for (Coord z = 0; z < side; ++z) {
    std::vector<std::string> run;
    for (Coord x = 0; x < side; ++x) {
      std::string id = "f_t_" + std::to_string(x) + "_" + std::to_string(z);
      detail::red_add_node(d, id, x, t_layer, z);
      run.push_back(id);
    }
    detail::red_chain_run(d, run);
  }
  for (Coord z = 0; z + 1 < side; ++z)
    detail::red_add_edge(d, "f_t_0_" + std::to_string(z), "f_t_0_" + std::to_string(z + 1));

  // Bottom mesh: rows shortened to the strict sub-diagonal region x+z <= 2n-3.
  for (Coord z = 0; z <= side - 3; ++z) {
    std::vector<std::string> run;
    for (Coord x = 0; x + z <= side - 3; ++x) {
      std::string id = "f_b_" + std::to_string(x) + "_" + std::to_string(z);
      detail::red_add_node(d, id, x, b_layer, z);
      run.push_back(id);
    }
    detail::red_chain_run(d, run);
  }
  for (Coord z = 0; z + 1 <= side - 3; ++z)
    detail::red_add_edge(d, "f_b_0_" + std::to_string(z), "f_b_0_" + std::to_string(z + 1));

  // One frame-to-frame vertical per bottom-mesh node.
  for (Coord z = 0; z <= side - 3; ++z)
    for (Coord x = 0; x + z <= side - 3; ++x) {
      std::string suffix = std::to_string(x) + "_" + std::to_string(z);
      detail::red_add_edge(d, "f_b_" + suffix, "f_t_" + suffix);
    }

  // Ties: top mesh down to each L-gadget's far z-arm end.
  for (int i = 0; i < g.n; ++i)
    detail::red_add_edge(d, detail::red_id("ze", i),
                         "f_t_" + std::to_string(2 * Coord(i)) + "_" + std::to_string(side - 1));
  return d;
}

// ---------------------------------------------------------------------------
// Coloring extraction
// ---------------------------------------------------------------------------

// Reads a proper coloring off a row-by-row compaction of a labeled path
// drawing: each vertex's color is the rank of its compacted row.
inline Coloring coloring_from_row_compaction(const Drawing& original, const Drawing& compacted) {
  CompactionCheck chk = is_compaction(original, compacted, row_by_row());
  if (!chk.ok)
    throw std::invalid_argument("row coloring: candidate is not a row-by-row compaction");
  if (original.labels.empty())
    throw std::invalid_argument("row coloring: original carries no vertex labels");

  int n = 0;
  for (const auto& [id, v] : original.labels) n = std::max(n, v + 1);
  std::unordered_map<std::string, std::size_t> idx = compacted.node_index();
  std::vector<Coord> row_of(n, 0);
  std::vector<char> seen(n, 0);
  for (const auto& [id, v] : original.labels) {
    auto it = idx.find(id);
    if (it == idx.end()) throw std::invalid_argument("row coloring: labeled node missing");
    row_of[v] = compacted.nodes[it->second].pos.y;
    seen[v] = 1;
  }
  for (int v = 0; v < n; ++v)
    if (!seen[v]) throw std::invalid_argument("row coloring: vertex has no labeled node");

  std::vector<Coord> rows = row_of;
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  Coloring col;
  col.colors.resize(n);
  for (int v = 0; v < n; ++v)
    col.colors[v] =
        int(std::lower_bound(rows.begin(), rows.end(), row_of[v]) - rows.begin());
  return col;
}

// Reads a proper coloring off a vertical compaction of a bundle drawing:
// orient each edge from the bundle above its gadget's rectangle to the bundle
// below it, then color by longest path from a source in the resulting DAG.
inline Coloring coloring_from_bundle_compaction(const Drawing& original, const Drawing& compacted) {
  CompactionCheck chk = is_compaction(original, compacted, vertex_vertical());
  if (!chk.ok)
    throw std::invalid_argument("bundle coloring: candidate is not a vertical compaction");
  if (original.labels.empty())
    throw std::invalid_argument("bundle coloring: original carries no vertex labels");

  int n = 0;
  for (const auto& [id, v] : original.labels) n = std::max(n, v + 1);
  std::unordered_map<std::string, std::size_t> idx = compacted.node_index();
  auto row = [&](const std::string& id) {
    auto it = idx.find(id);
    if (it == idx.end()) throw std::invalid_argument("bundle coloring: gadget node missing");
    return compacted.nodes[it->second].pos.y;
  };
  auto label_of = [&](const std::string& id) {
    auto it = original.labels.find(id);
    if (it == original.labels.end())
      throw std::invalid_argument("bundle coloring: attachment node unlabeled");
    return it->second;
  };

  std::vector<std::vector<int>> out(n);
  std::vector<int> indeg(n, 0);
  for (std::size_t kk = 0;; ++kk) {
    std::string p = detail::red_id("e", kk) + "_";
    if (idx.find(p + "A") == idx.end()) break;
    Coord ra = row(p + "A"), rb = row(p + "B");
    Coord rt = row(p + "tl"), rbot = row(p + "bl");
    Coord hi = std::max(rt, rbot), lo = std::min(rt, rbot);
    bool a_above = ra > hi && rb < lo;
    bool b_above = rb > hi && ra < lo;
    if (!a_above && !b_above)
      throw std::logic_error(
          "bundle coloring: gadget attachments are not separated by its central rectangle");
    int va = label_of(p + "A"), vb = label_of(p + "B");
    int upper = a_above ? va : vb, lower = a_above ? vb : va;
    out[upper].push_back(lower);
    ++indeg[lower];
  }

  // Longest path from a source, via Kahn's ordering; a cycle is impossible for
  // genuine compactions because "above" totally orders disjoint row intervals.
  std::vector<int> color(n, 0);
  std::deque<int> q;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) q.push_back(v);
  int processed = 0;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    ++processed;
    for (int w : out[u]) {
      color[w] = std::max(color[w], color[u] + 1);
      if (--indeg[w] == 0) q.push_back(w);
    }
  }
  if (processed != n)
    throw std::logic_error("bundle coloring: gadget orientation is cyclic");
  Coloring col;
  col.colors = std::move(color);
  return col;
}

// ---------------------------------------------------------------------------
// Incompatibility graph and the coloring counterexample
// ---------------------------------------------------------------------------

// One graph vertex per tandem-moving horizontal feature; edges join pairs that
// are linked by a vertical connector or whose x-intervals overlap with
// positive length. Coloring this graph is necessary but NOT sufficient for
// row compaction; see counterexample_instance().
inline Graph incompatibility_graph(const Drawing& d) {
  std::vector<SweepFeature> feats = extract_features(d);
  Graph g;
  g.n = int(feats.size());
  std::set<std::pair<int, int>> edges;
  for (const SweepFeature& f : feats)
    for (const auto& c : f.connectors)
      edges.insert({std::min(f.id, c.peer), std::max(f.id, c.peer)});
  for (std::size_t i = 0; i < feats.size(); ++i)
    for (std::size_t j = i + 1; j < feats.size(); ++j) {
      Coord lo = std::max(feats[i].x_lo, feats[j].x_lo);
      Coord hi = std::min(feats[i].x_hi, feats[j].x_hi);
      if (lo < hi) edges.insert({int(i), int(j)});
    }
  g.edges.assign(edges.begin(), edges.end());
  return g;
}

// The drawing whose incompatibility graph is a path (2-colorable) but which
// admits no row-saving vertical compaction at all: a tower of five features
// that all touch column 0 without positive overlap.
inline Drawing counterexample_instance() {
  Drawing d;
  d.dimension = 2;
  detail::red_add_node(d, "top_l", -3, 4);
  detail::red_add_node(d, "top_r", 0, 4);
  detail::red_add_node(d, "m3", 0, 3);
  detail::red_add_node(d, "m2", 0, 2);
  detail::red_add_node(d, "m1", 0, 1);
  detail::red_add_node(d, "bot_l", 0, 0);
  detail::red_add_node(d, "bot_r", 3, 0);
  detail::red_add_edge(d, "top_l", "top_r");
  detail::red_add_edge(d, "top_r", "m3");
  detail::red_add_edge(d, "m3", "m2");
  detail::red_add_edge(d, "m2", "m1");
  detail::red_add_edge(d, "m1", "bot_l");
  detail::red_add_edge(d, "bot_l", "bot_r");
  return d;
}

}  // namespace orthocompact
