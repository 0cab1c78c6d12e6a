#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "orthocompact/compaction.hpp"
#include "orthocompact/drawing.hpp"
#include "orthocompact/graph.hpp"

namespace orthocompact {

// Thrown when an input exceeds the brute-force size caps.  The caps guard
// against silently endless searches; they can be lifted for a beefier machine
// through the ORTHOCOMPACT_ORACLE_CAP environment variable.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline int oracle_cap(int default_cap) {
  if (const char* s = std::getenv("ORTHOCOMPACT_ORACLE_CAP")) {
    try {
      return std::stoi(s);
    } catch (const std::exception&) {
      throw std::invalid_argument("ORTHOCOMPACT_ORACLE_CAP must be an integer");
    }
  }
  return default_cap;
}

// ---------------------------------------------------------------------------
// Chromatic number by exhaustive backtracking.

namespace detail {

inline bool colorable_with(const std::vector<std::vector<int>>& adj, int k,
                           std::vector<int>& colors, std::size_t v) {
  if (v == colors.size()) return true;
  // Symmetry breaking: vertex v may open at most one fresh color.
  int used = 0;
  for (std::size_t u = 0; u < v; ++u) used = std::max(used, colors[u] + 1);
  int limit = std::min(k, used + 1);
  for (int c = 0; c < limit; ++c) {
    bool clash = false;
    for (int u : adj[v])
      if (std::size_t(u) < v && colors[u] == c) {
        clash = true;
        break;
      }
    if (clash) continue;
    colors[v] = c;
    if (colorable_with(adj, k, colors, v + 1)) return true;
    colors[v] = -1;
  }
  return false;
}

}  // namespace detail

// Minimum proper-coloring size together with one witness coloring.
inline std::pair<int, std::vector<int>> brute_chromatic_coloring(const Graph& graph) {
  Graph g = normalized(graph);
  int cap = oracle_cap(10);
  if (g.n > cap)
    throw CapExceeded("brute_chromatic: " + std::to_string(g.n) + " vertices exceeds cap " +
                      std::to_string(cap));
  if (g.n == 0) return {0, {}};
  auto adj = adjacency(g);
  for (int k = 1; k <= g.n; ++k) {
    std::vector<int> colors(g.n, -1);
    if (detail::colorable_with(adj, k, colors, 0)) return {k, colors};
  }
  return {g.n, {}};  // unreachable: n colors always suffice
}

inline int brute_chromatic(const Graph& g) { return brute_chromatic_coloring(g).first; }

// ---------------------------------------------------------------------------
// Objectives.

enum class Objective {
  Rows,
  Area,
  Volume,
  LongestEdge,
  LongestVerticalEdge,
  TotalLength,
  Width,
};

inline const char* objective_name(Objective o) {
  switch (o) {
    case Objective::Rows: return "rows";
    case Objective::Area: return "area";
    case Objective::Volume: return "volume";
    case Objective::LongestEdge: return "longest";
    case Objective::LongestVerticalEdge: return "longest-vertical";
    case Objective::TotalLength: return "total";
    case Objective::Width: return "width";
  }
  return "?";
}

inline Coord objective_value(const Metrics& m, Objective o, int dimension) {
  switch (o) {
    case Objective::Rows: return m.rows;
    case Objective::Area: return m.area;
    case Objective::Volume:
      if (dimension != 3)
        throw std::invalid_argument("objective 'volume' requires a 3-dimensional drawing");
      return m.volume;
    case Objective::LongestEdge: return m.longest_edge;
    case Objective::LongestVerticalEdge: return m.longest_vertical_edge;
    case Objective::TotalLength: return m.total_edge_length;
    case Objective::Width: return m.width;
  }
  throw std::invalid_argument("unknown objective");
}

struct OracleResult {
  Coord value = 0;
  Drawing witness;
};

namespace detail {

// Lexicographic key of a candidate's node positions in canonical node order;
// ties between equal-value witnesses are broken toward the smaller key.
inline std::vector<Point> witness_key(const Drawing& canon) {
  std::vector<Point> key;
  key.reserve(canon.nodes.size());
  for (const auto& n : canon.nodes) key.push_back(n.pos);
  return key;
}

struct BestTracker {
  std::optional<Coord> value;
  Drawing witness;
  std::vector<Point> key;

  void offer(Coord v, const Drawing& canon) {
    auto k = witness_key(canon);
    if (!value || v < *value || (v == *value && k < key)) {
      value = v;
      witness = canon;
      key = std::move(k);
    }
  }
};

// Node adjacency through chain segments, with each incident segment's axis.
inline std::vector<std::vector<std::pair<std::size_t, Axis>>> segment_adjacency(
    const Drawing& canon) {
  auto index = canon.node_index();
  std::vector<std::vector<std::pair<std::size_t, Axis>>> adj(canon.nodes.size());
  for (const auto& e : canon.edges) {
    for (std::size_t i = 0; i + 1 < e.chain.size(); ++i) {
      std::size_t a = index.at(e.chain[i]);
      std::size_t b = index.at(e.chain[i + 1]);
      Axis ax = single_axis_between(canon.nodes[a].pos, canon.nodes[b].pos);
      adj[a].push_back({b, ax});
      adj[b].push_back({a, ax});
    }
  }
  return adj;
}

// Groups node indices into features: maximal sets connected by non-vertical
// segments.  All members share one row in the original and must keep sharing
// one in any vertex-vertical candidate.  Features are ordered by their
// smallest node index, members ascending.
inline std::vector<std::vector<std::size_t>> horizontal_features(const Drawing& canon,
                                                                 Axis vertical) {
  auto adj = segment_adjacency(canon);
  std::vector<int> feature_of(canon.nodes.size(), -1);
  std::vector<std::vector<std::size_t>> features;
  for (std::size_t start = 0; start < canon.nodes.size(); ++start) {
    if (feature_of[start] != -1) continue;
    std::vector<std::size_t> members;
    std::vector<std::size_t> stack = {start};
    feature_of[start] = int(features.size());
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      members.push_back(u);
      for (auto [v, ax] : adj[u])
        if (ax != vertical && feature_of[v] == -1) {
          feature_of[v] = int(features.size());
          stack.push_back(v);
        }
    }
    std::sort(members.begin(), members.end());
    features.push_back(std::move(members));
  }
  return features;
}

// True when placing the two features on one shared row is impossible no
// matter where everything else goes: a node pair would coincide, a node
// would land strictly inside a horizontal segment, two collinear horizontal
// segments would overlap, or a vertical segment joins the two features (it
// would become zero-length).  Used only to prune; the full compaction check
// remains the final word on every surviving candidate.
inline bool features_clash_on_one_row(const Drawing& canon,
                                      const std::vector<std::vector<std::pair<std::size_t, Axis>>>& adj,
                                      const std::vector<std::size_t>& f,
                                      const std::vector<std::size_t>& g, Axis vertical) {
  auto same_cross = [&](const Point& p, const Point& q, Axis along) {
    for (Axis t : {Axis::X, Axis::Y, Axis::Z}) {
      if (t == along || t == vertical) continue;
      if (p[t] != q[t]) return false;
    }
    return true;
  };
  auto horizontal_pos_equal = [&](const Point& p, const Point& q) {
    for (Axis t : {Axis::X, Axis::Y, Axis::Z}) {
      if (t == vertical) continue;
      if (p[t] != q[t]) return false;
    }
    return true;
  };

  struct HSeg {
    Axis axis;
    Point anchor;
    Coord lo, hi;
  };
  auto segs_of = [&](const std::vector<std::size_t>& members) {
    std::vector<HSeg> out;
    for (std::size_t u : members)
      for (auto [v, ax] : adj[u]) {
        if (ax == vertical || v < u) continue;  // each segment once
        const Point& p = canon.nodes[u].pos;
        const Point& q = canon.nodes[v].pos;
        out.push_back({ax, p, std::min(p[ax], q[ax]), std::max(p[ax], q[ax])});
      }
    return out;
  };

  // A vertical segment between the features forbids sharing a row outright.
  std::vector<char> in_g(canon.nodes.size(), 0);
  for (std::size_t u : g) in_g[u] = 1;
  for (std::size_t u : f)
    for (auto [v, ax] : adj[u])
      if (ax == vertical && in_g[v]) return true;

  for (std::size_t u : f)
    for (std::size_t v : g)
      if (horizontal_pos_equal(canon.nodes[u].pos, canon.nodes[v].pos)) return true;

  auto fs = segs_of(f);
  auto gs = segs_of(g);
  auto node_inside = [&](const std::vector<std::size_t>& members, const std::vector<HSeg>& segs) {
    for (std::size_t u : members)
      for (const HSeg& s : segs) {
        const Point& p = canon.nodes[u].pos;
        if (!same_cross(p, s.anchor, s.axis)) continue;
        if (s.lo < p[s.axis] && p[s.axis] < s.hi) return true;
      }
    return false;
  };
  if (node_inside(f, gs) || node_inside(g, fs)) return true;

  for (const HSeg& a : fs)
    for (const HSeg& b : gs) {
      if (a.axis != b.axis || !same_cross(a.anchor, b.anchor, a.axis)) continue;
      if (std::max(a.lo, b.lo) < std::min(a.hi, b.hi)) return true;
    }
  return false;
}

// Enumerates ordered set partitions of `count` items with a pairwise veto:
// items sharing a group must be pairwise compatible.  For every partition and
// every ordering of its groups, calls leaf(group_index_per_item, group_count).
// The leaf order is deterministic.
inline void ordered_partitions(
    std::size_t count, const std::function<bool(std::size_t, std::size_t)>& compatible,
    const std::function<void(const std::vector<int>&, int)>& leaf) {
  std::vector<std::vector<std::size_t>> groups;
  std::vector<int> group_of(count, -1);

  std::function<void(std::size_t)> place = [&](std::size_t item) {
    if (item == count) {
      int t = int(groups.size());
      std::vector<int> order(t);
      std::iota(order.begin(), order.end(), 0);
      // order[g] lists the group placed at row g; permute deterministically.
      std::vector<int> row_of_group(t);
      do {
        for (int row = 0; row < t; ++row) row_of_group[order[row]] = row;
        std::vector<int> assignment(count);
        for (std::size_t i = 0; i < count; ++i) assignment[i] = row_of_group[group_of[i]];
        leaf(assignment, t);
      } while (std::next_permutation(order.begin(), order.end()));
      return;
    }
    for (std::size_t g = 0; g < groups.size(); ++g) {
      bool ok = true;
      for (std::size_t other : groups[g])
        if (!compatible(item, other)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      groups[g].push_back(item);
      group_of[item] = int(g);
      place(item + 1);
      groups[g].pop_back();
    }
    groups.push_back({item});
    group_of[item] = int(groups.size()) - 1;
    place(item + 1);
    groups.pop_back();
    group_of[item] = -1;
  };
  place(0);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Sufficient search box for free-mode compaction of a connected drawing.
//
// Width: the sum of all horizontal segment lengths.  In a candidate whose
// every column holds a node (reachable by deleting empty columns, which
// preserves validity and never worsens an objective), each of the `width`
// unit strips is crossed by some horizontal segment — connectivity forces a
// crossing, and vertical segments never leave their column — so the total
// horizontal length bounds the width.  Height: one row per node bounds the
// row count after the same compression argument applied to rows.
struct FreeBox {
  Coord width = 0;
  Coord height = 0;
};

inline FreeBox free_bounding_box(const Drawing& d) {
  auto index = d.node_index();
  Coord horizontal = 0;
  for (const auto& e : d.edges)
    for (std::size_t i = 0; i + 1 < e.chain.size(); ++i) {
      const Point& p = d.nodes[index.at(e.chain[i])].pos;
      const Point& q = d.nodes[index.at(e.chain[i + 1])].pos;
      if (diff_count(p, q) != 1)
        throw std::invalid_argument("free_bounding_box: malformed chain step");
      Axis ax = single_axis_between(p, q);
      if (ax != Axis::Y) horizontal += abs_coord(p[ax] - q[ax]);
    }
  return {horizontal, Coord(d.nodes.size())};
}

// ---------------------------------------------------------------------------
// Brute-force optimal compaction.

namespace detail {

struct RowSearchInput {
  Drawing canon;
  CompactionMode mode;
  std::vector<Coord> rows;  // distinct original vertical coordinates, ascending
};

// Row-by-row: every candidate is an ordered set partition of the original
// rows (which rows merge, and in which vertical order the merged groups
// appear).  Renumbering the output rows to 0..t-1 is lossless for every
// objective: a strictly monotone relabeling of the vertical coordinates of
// all nodes preserves validity in both directions and never lengthens
// anything.
inline void row_by_row_search(const Drawing& canon, CompactionMode mode,
                              const std::function<void(const Drawing&)>& visit) {
  std::map<Coord, std::size_t> row_index;
  for (const auto& n : canon.nodes) row_index.emplace(n.pos[mode.vertical], 0);
  std::vector<Coord> rows;
  for (auto& [y, idx] : row_index) {
    idx = rows.size();
    rows.push_back(y);
  }
  int cap = oracle_cap(8);
  if (int(rows.size()) > cap)
    throw CapExceeded("row-by-row oracle: " + std::to_string(rows.size()) +
                      " rows exceeds cap " + std::to_string(cap));
  if (rows.empty()) {
    visit(canon);
    return;
  }

  // Pairwise merge vetoes, purely as pruning.
  std::vector<std::vector<std::size_t>> row_members(rows.size());
  for (std::size_t i = 0; i < canon.nodes.size(); ++i)
    row_members[row_index.at(canon.nodes[i].pos[mode.vertical])].push_back(i);
  auto adj = segment_adjacency(canon);
  std::vector<std::vector<char>> clash(rows.size(), std::vector<char>(rows.size(), 0));
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = a + 1; b < rows.size(); ++b)
      clash[a][b] = clash[b][a] = features_clash_on_one_row(
          canon, adj, row_members[a], row_members[b], mode.vertical);

  Drawing candidate = canon;
  ordered_partitions(
      rows.size(), [&](std::size_t a, std::size_t b) { return !clash[a][b]; },
      [&](const std::vector<int>& row_target, int) {
        for (auto& n : candidate.nodes) {
          std::size_t r = row_index.at(canon.nodes[&n - candidate.nodes.data()].pos[mode.vertical]);
          n.pos[mode.vertical] = row_target[r];
        }
        if (compaction_core(canon, candidate, mode).ok) visit(candidate);
      });
}

// Vertex-vertical: a candidate assigns one row to each horizontal feature;
// ordered set partitions of the features cover all candidates after the same
// renumbering argument as above.
inline void vertex_vertical_search(const Drawing& canon, CompactionMode mode,
                                   const std::function<void(const Drawing&)>& visit) {
  auto features = horizontal_features(canon, mode.vertical);
  int cap = oracle_cap(9);
  if (int(features.size()) > cap)
    throw CapExceeded("vertex-vertical oracle: " + std::to_string(features.size()) +
                      " features exceeds cap " + std::to_string(cap));
  if (features.empty()) {
    visit(canon);
    return;
  }
  auto adj = segment_adjacency(canon);
  std::vector<std::vector<char>> clash(features.size(), std::vector<char>(features.size(), 0));
  for (std::size_t a = 0; a < features.size(); ++a)
    for (std::size_t b = a + 1; b < features.size(); ++b)
      clash[a][b] = clash[b][a] =
          features_clash_on_one_row(canon, adj, features[a], features[b], mode.vertical);

  Drawing candidate = canon;
  ordered_partitions(
      features.size(), [&](std::size_t a, std::size_t b) { return !clash[a][b]; },
      [&](const std::vector<int>& row_of_feature, int) {
        for (std::size_t f = 0; f < features.size(); ++f)
          for (std::size_t u : features[f])
            candidate.nodes[u].pos[mode.vertical] = row_of_feature[f];
        if (compaction_core(canon, candidate, mode).ok) visit(candidate);
      });
}

// Vertex-free (2D): depth-first placement of nodes in a connectivity order.
// Positions are normalized so the first node sits at the origin; every
// candidate fitting the box appears translated accordingly.  Incremental
// geometric checks prune as nodes are placed; the full compaction check still
// decides at the leaves.
struct FreeSearch {
  const Drawing& canon;
  CompactionMode mode;
  Coord box_w, box_h;
  std::vector<std::vector<std::pair<std::size_t, Axis>>> adj;
  std::vector<std::size_t> order;    // placement order, a BFS over segments
  std::vector<char> placed;
  std::vector<Point> pos;
  const std::function<void(const Drawing&)>* visit;
  Drawing scratch;

  FreeSearch(const Drawing& c, CompactionMode m, Coord w, Coord h,
             const std::function<void(const Drawing&)>& v)
      : canon(c), mode(m), box_w(w), box_h(h), visit(&v), scratch(c) {
    adj = segment_adjacency(canon);
    std::vector<char> seen(canon.nodes.size(), 0);
    std::vector<std::size_t> queue = {0};
    seen[0] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      std::size_t u = queue[head];
      order.push_back(u);
      for (auto [v2, ax] : adj[u])
        if (!seen[v2]) {
          seen[v2] = 1;
          queue.push_back(v2);
        }
    }
    if (order.size() != canon.nodes.size())
      throw std::invalid_argument("free-mode oracle requires a connected drawing");
    placed.assign(canon.nodes.size(), 0);
    pos.assign(canon.nodes.size(), Point{});
  }

  bool geometry_ok(std::size_t v) const {
    const Point& p = pos[v];
    // Against placed nodes: coincidence.
    for (std::size_t u : order) {
      if (!placed[u] || u == v) continue;
      if (pos[u] == p) return false;
    }
    // New node strictly inside a fully placed segment.
    auto inside = [](const Point& n, const Point& a, const Point& b, Axis ax) {
      for (Axis t : {Axis::X, Axis::Y, Axis::Z})
        if (t != ax && n[t] != a[t]) return false;
      Coord lo = std::min(a[ax], b[ax]), hi = std::max(a[ax], b[ax]);
      return lo < n[ax] && n[ax] < hi;
    };
    for (std::size_t u : order) {
      if (!placed[u] || u == v) continue;
      for (auto [w2, ax] : adj[u]) {
        if (w2 < u || !placed[w2] || w2 == v) continue;
        if (inside(p, pos[u], pos[w2], ax)) return false;
      }
    }
    // Segments completed by v: against placed nodes and placed segments.
    for (auto [u, ax] : adj[v]) {
      if (!placed[u]) continue;
      const Point& q = pos[u];
      Coord lo = std::min(p[ax], q[ax]), hi = std::max(p[ax], q[ax]);
      if (lo == hi) return false;  // zero length
      for (std::size_t w2 : order) {
        if (!placed[w2] || w2 == v || w2 == u) continue;
        if (inside(pos[w2], p, q, ax)) return false;
      }
      for (std::size_t a = 0; a < canon.nodes.size(); ++a) {
        if (!placed[a] || a == v) continue;
        for (auto [b, ax2] : adj[a]) {
          if (b < a || !placed[b] || b == v) continue;
          if (ax2 != ax) continue;
          bool same_line = true;
          for (Axis t : {Axis::X, Axis::Y, Axis::Z})
            if (t != ax && pos[a][t] != p[t]) {
              same_line = false;
              break;
            }
          if (!same_line) continue;
          Coord lo2 = std::min(pos[a][ax], pos[b][ax]);
          Coord hi2 = std::max(pos[a][ax], pos[b][ax]);
          if (std::max(lo, lo2) < std::min(hi, hi2)) return false;
        }
      }
    }
    return true;
  }

  bool span_ok() const {
    Coord min_x = 0, max_x = 0, min_y = 0, max_y = 0;
    bool any = false;
    for (std::size_t u = 0; u < placed.size(); ++u) {
      if (!placed[u]) continue;
      if (!any) {
        min_x = max_x = pos[u].x;
        min_y = max_y = pos[u].y;
        any = true;
      } else {
        min_x = std::min(min_x, pos[u].x);
        max_x = std::max(max_x, pos[u].x);
        min_y = std::min(min_y, pos[u].y);
        max_y = std::max(max_y, pos[u].y);
      }
    }
    return (max_x - min_x) <= box_w && (max_y - min_y) <= box_h;
  }

  void run(std::size_t depth) {
    if (depth == order.size()) {
      for (std::size_t u = 0; u < pos.size(); ++u) scratch.nodes[u].pos = pos[u];
      if (compaction_core(canon, scratch, mode).ok) (*visit)(scratch);
      return;
    }
    std::size_t v = order[depth];
    std::optional<Coord> fixed_x, fixed_y;
    bool dead = false;
    for (auto [u, ax] : adj[v]) {
      if (!placed[u]) continue;
      if (ax == Axis::X) {
        if (fixed_y && *fixed_y != pos[u].y) dead = true;
        fixed_y = pos[u].y;
      } else {
        if (fixed_x && *fixed_x != pos[u].x) dead = true;
        fixed_x = pos[u].x;
      }
    }
    if (dead) return;

    auto try_at = [&](Coord x, Coord y) {
      pos[v] = {x, y, 0};
      placed[v] = 1;
      if (span_ok() && geometry_ok(v)) run(depth + 1);
      placed[v] = 0;
    };

    if (depth == 0) {
      try_at(0, 0);  // translation normalization
      return;
    }
    if (fixed_x && fixed_y) {
      try_at(*fixed_x, *fixed_y);
    } else if (fixed_y) {
      for (Coord x = -box_w; x <= box_w; ++x) try_at(x, *fixed_y);
    } else if (fixed_x) {
      for (Coord y = -box_h; y <= box_h; ++y) try_at(*fixed_x, y);
    }
  }
};

inline void vertex_free_search(const Drawing& canon, CompactionMode mode, Coord box_w,
                               Coord box_h, const std::function<void(const Drawing&)>& visit) {
  if (canon.dimension != 2)
    throw std::invalid_argument("free-mode oracle supports 2-dimensional drawings only");
  int cap = oracle_cap(8);
  if (int(canon.nodes.size()) > cap)
    throw CapExceeded("free-mode oracle: " + std::to_string(canon.nodes.size()) +
                      " nodes exceeds cap " + std::to_string(cap));
  if (canon.nodes.empty()) {
    visit(canon);
    return;
  }
  FreeSearch search(canon, mode, box_w, box_h, visit);
  search.run(0);
}

}  // namespace detail

// Visits every compaction of `d` under `mode`, deterministically.  Row-by-row
// and vertex-vertical candidates are visited with rows renumbered 0..t-1
// (every candidate's row order appears exactly once); free-mode candidates
// are visited in normalized position, the first canonical node at the origin.
inline void enumerate_compactions(const Drawing& d, CompactionMode mode,
                                  const std::function<void(const Drawing&)>& visit) {
  ValidityReport rep = validate(d);
  if (!rep.ok())
    throw std::invalid_argument("oracle: input drawing is invalid:\n" + rep.to_string());
  Drawing canon = canonical_form(d);
  switch (mode.kind) {
    case CompactionKind::RowByRow:
      detail::row_by_row_search(canon, mode, visit);
      return;
    case CompactionKind::VertexVertical:
      detail::vertex_vertical_search(canon, mode, visit);
      return;
    case CompactionKind::VertexFree: {
      FreeBox box = free_bounding_box(canon);
      detail::vertex_free_search(canon, mode, box.width, box.height, visit);
      return;
    }
  }
}

// Global optimum of the objective over all compactions of `d` under `mode`,
// with a witness realizing it.  Ties go to the witness whose node positions
// are lexicographically smallest in canonical node order.
inline OracleResult brute_optimal_compaction(const Drawing& d, CompactionMode mode,
                                             Objective obj) {
  detail::BestTracker best;
  int dimension = d.dimension;
  enumerate_compactions(d, mode, [&](const Drawing& candidate) {
    best.offer(objective_value(metrics(candidate), obj, dimension), candidate);
  });
  if (!best.value) throw std::logic_error("oracle: no candidate found (identity should exist)");
  return {*best.value, best.witness};
}

// Free-mode optimum within an explicitly sized search box; used to check
// experimentally that the default box loses nothing.
inline OracleResult brute_optimal_free_in_box(const Drawing& d, Objective obj, Coord box_w,
                                              Coord box_h) {
  ValidityReport rep = validate(d);
  if (!rep.ok())
    throw std::invalid_argument("oracle: input drawing is invalid:\n" + rep.to_string());
  Drawing canon = canonical_form(d);
  detail::BestTracker best;
  detail::vertex_free_search(canon, vertex_free(), box_w, box_h, [&](const Drawing& candidate) {
    best.offer(objective_value(metrics(candidate), obj, d.dimension), candidate);
  });
  if (!best.value) throw std::logic_error("oracle: empty free search");
  return {*best.value, best.witness};
}

}  // namespace orthocompact
