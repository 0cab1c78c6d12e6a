#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "orthocompact/drawing.hpp"
#include "orthocompact/json_io.hpp"

namespace orthocompact {

// A maximal run of same-axis segments along a path drawing's walk.
struct Subpath {
  Axis axis;
  std::vector<std::string> nodes;  // in walk order; adjacent subpaths share one node
};

// The walk of a path drawing split into alternating horizontal and vertical
// subpaths; k is the largest node count over vertical subpaths (1 when the
// path is entirely horizontal).
struct SubpathDecomposition {
  std::vector<Subpath> subpaths;
  int k = 1;
};

namespace detail {

// Orders the nodes of a drawing whose underlying graph is a simple path,
// starting from the lexicographically smallest endpoint id.  Throws on
// branching, cycles, or disconnection.
inline std::vector<std::size_t> path_walk(const Drawing& canon) {
  auto index = canon.node_index();
  if (canon.nodes.empty())
    throw std::invalid_argument("path walk: drawing has no nodes");
  std::vector<std::vector<std::size_t>> adjacent(canon.nodes.size());
  for (const auto& e : canon.edges)
    for (std::size_t i = 0; i + 1 < e.chain.size(); ++i) {
      std::size_t a = index.at(e.chain[i]);
      std::size_t b = index.at(e.chain[i + 1]);
      adjacent[a].push_back(b);
      adjacent[b].push_back(a);
    }

  std::vector<std::size_t> endpoints;
  for (std::size_t i = 0; i < canon.nodes.size(); ++i) {
    if (adjacent[i].size() > 2)
      throw std::invalid_argument("path walk: node '" + canon.nodes[i].id +
                                  "' has more than two incident segments");
    if (adjacent[i].size() == 1) endpoints.push_back(i);
  }

  if (canon.nodes.size() == 1 && adjacent[0].empty()) return {0};
  if (endpoints.size() != 2)
    throw std::invalid_argument(endpoints.empty()
                                    ? "path walk: drawing closes into a cycle"
                                    : "path walk: drawing is not a single path");

  // Canonical order sorts nodes by id, so the smaller index is the
  // lexicographically smaller endpoint.
  std::size_t start = std::min(endpoints[0], endpoints[1]);
  std::vector<std::size_t> walk;
  std::size_t prev = canon.nodes.size(), cur = start;
  for (;;) {
    walk.push_back(cur);
    std::size_t next = canon.nodes.size();
    for (std::size_t nb : adjacent[cur])
      if (nb != prev) next = nb;
    if (next == canon.nodes.size()) break;
    prev = cur;
    cur = next;
  }
  if (walk.size() != canon.nodes.size())
    throw std::invalid_argument("path walk: drawing is disconnected");
  return walk;
}

struct WalkRun {
  Axis axis;
  std::vector<std::size_t> nodes;  // canon indices, shares endpoints with neighbors
};

inline std::vector<WalkRun> walk_runs(const Drawing& canon,
                                      const std::vector<std::size_t>& walk) {
  std::vector<WalkRun> runs;
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
    Axis axis = single_axis_between(canon.nodes[walk[i]].pos, canon.nodes[walk[i + 1]].pos);
    if (runs.empty() || runs.back().axis != axis)
      runs.push_back({axis, {walk[i]}});
    runs.back().nodes.push_back(walk[i + 1]);
  }
  return runs;
}

inline Drawing checked_canonical_path(const Drawing& d) {
  ValidityReport rep = validate(d);
  if (!rep.ok())
    throw std::invalid_argument("path compaction: input drawing is invalid:\n" +
                                rep.to_string());
  if (d.dimension != 2)
    throw std::invalid_argument("path compaction: only 2-dimensional drawings are supported");
  return canonical_form(d);
}

}  // namespace detail

// Walks a valid 2-dimensional path drawing and splits it into maximal
// horizontal and vertical subpaths.
inline SubpathDecomposition decompose_path(const Drawing& d) {
  Drawing canon = detail::checked_canonical_path(d);
  auto walk = detail::path_walk(canon);
  auto runs = detail::walk_runs(canon, walk);
  SubpathDecomposition out;
  for (const auto& run : runs) {
    Subpath sp{run.axis, {}};
    for (std::size_t i : run.nodes) sp.nodes.push_back(canon.nodes[i].id);
    out.subpaths.push_back(std::move(sp));
    if (run.axis == Axis::Y) out.k = std::max<int>(out.k, int(run.nodes.size()));
  }
  return out;
}

// Redraws a path drawing onto the fewest rows any free compaction can reach:
// k, the node count of its longest vertical subpath.  Horizontal subpaths
// alternate between the bottom row and the top row, marching left to right
// with their segment lengths preserved; each vertical subpath climbs at the
// junction column with unit steps and all slack on its last segment.
inline Drawing free_compact_path(const Drawing& d) {
  Drawing canon = detail::checked_canonical_path(d);
  auto walk = detail::path_walk(canon);
  auto runs = detail::walk_runs(canon, walk);

  int k = 1;
  for (const auto& run : runs)
    if (run.axis == Axis::Y) k = std::max<int>(k, int(run.nodes.size()));

  std::vector<Point> pos(canon.nodes.size(), Point{0, 0, 0});
  Coord bottom = 0, top = Coord(k) - 1;

  bool any_horizontal = false;
  for (const auto& run : runs) any_horizontal |= run.axis == Axis::X;

  // The first horizontal subpath sits on the bottom row; a leading vertical
  // subpath therefore descends into it.  A purely vertical path just climbs.
  Coord col = 0;
  Coord row = bottom;
  if (any_horizontal && !runs.empty() && runs.front().axis == Axis::Y) row = top;
  if (!walk.empty()) pos[walk.front()] = {col, row, 0};

  for (const auto& run : runs) {
    if (run.axis == Axis::X) {
      for (std::size_t i = 0; i + 1 < run.nodes.size(); ++i) {
        Coord len = abs_coord(canon.nodes[run.nodes[i + 1]].pos.x -
                              canon.nodes[run.nodes[i]].pos.x);
        col += len;
        pos[run.nodes[i + 1]] = {col, row, 0};
      }
    } else {
      Coord target = row == bottom ? top : bottom;
      Coord step = target > row ? 1 : -1;
      Coord at = row;
      std::size_t segments = run.nodes.size() - 1;
      for (std::size_t i = 1; i < run.nodes.size(); ++i) {
        at = (i == segments) ? target : at + step;
        pos[run.nodes[i]] = {col, at, 0};
      }
      row = target;
    }
  }

  Drawing out = canon;
  for (std::size_t i = 0; i < out.nodes.size(); ++i) out.nodes[i].pos = pos[i];
  return out;
}

}  // namespace orthocompact
