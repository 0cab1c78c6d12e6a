#pragma once

// Deterministic generators for test corpora and benchmark families.
//
// Every generator is a pure function of its arguments (including the seed), so
// test failures reproduce exactly.  All drawing generators produce valid
// drawings by construction; suites still validate defensively.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "orthocompact/drawing.hpp"
#include "orthocompact/graph.hpp"

namespace orthocompact {

namespace detail {

// Deterministic uniform draw from [0, span) independent of library
// distribution internals.
inline int rng_below(std::mt19937_64& rng, int span) {
  return int(rng() % std::uint64_t(span));
}

}  // namespace detail

// Random connected graph: a random attachment tree plus `extra_edges` distinct
// further edges (silently capped at the complete graph).
inline Graph random_connected_graph(int n, int extra_edges, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random graph: need at least one vertex");
  if (extra_edges < 0) throw std::invalid_argument("random graph: negative edge count");
  std::mt19937_64 rng(seed);
  std::set<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) {
    int parent = detail::rng_below(rng, v);
    edges.insert({parent, v});
  }
  long long all = static_cast<long long>(n) * (n - 1) / 2;
  long long want = std::min<long long>(all, static_cast<long long>(edges.size()) + extra_edges);
  while (static_cast<long long>(edges.size()) < want) {
    int u = detail::rng_below(rng, n);
    int v = detail::rng_below(rng, n);
    if (u == v) continue;
    edges.insert({std::min(u, v), std::max(u, v)});
  }
  Graph g{n, {edges.begin(), edges.end()}};
  return g;
}

// Random orthogonal path: runs alternate between horizontal (always advancing
// x) and vertical (random direction), each run made of unit steps with a node
// at every grid point.  Monotone x makes self-intersection impossible.
inline Drawing random_path_drawing(int runs, std::uint64_t seed) {
  if (runs < 1) throw std::invalid_argument("random path: need at least one run");
  std::mt19937_64 rng(seed);
  Drawing d;
  d.dimension = 2;
  Coord x = 0, y = 0;
  int next_id = 0;
  auto add_node = [&]() {
    d.nodes.push_back({"n" + std::to_string(next_id++), NodeKind::Vertex, {x, y, 0}});
  };
  add_node();
  bool horizontal = detail::rng_below(rng, 2) == 0;
  for (int r = 0; r < runs; ++r, horizontal = !horizontal) {
    int len = 1 + detail::rng_below(rng, 3);
    Coord dy = detail::rng_below(rng, 2) == 0 ? 1 : -1;
    for (int s = 0; s < len; ++s) {
      if (horizontal)
        x += 1;
      else
        y += dy;
      add_node();
      d.edges.push_back({{d.nodes[d.nodes.size() - 2].id, d.nodes.back().id}});
    }
  }
  return d;
}

// Unit staircase path with `runs` alternating unit runs; runs+1 nodes.
inline Drawing staircase_drawing(int runs) {
  if (runs < 1) throw std::invalid_argument("staircase: need at least one run");
  Drawing d;
  d.dimension = 2;
  Coord x = 0, y = 0;
  d.nodes.push_back({"t0", NodeKind::Vertex, {0, 0, 0}});
  for (int r = 0; r < runs; ++r) {
    if (r % 2 == 0)
      x += 1;
    else
      y += 1;
    d.nodes.push_back({"t" + std::to_string(r + 1), NodeKind::Vertex, {x, y, 0}});
    d.edges.push_back({{d.nodes[d.nodes.size() - 2].id, d.nodes.back().id}});
  }
  return d;
}

// `chains` horizontal chains of `cols` nodes each, joined end-to-end in an
// S-shape.  The drawing has exactly `chains` horizontal features regardless of
// `cols`, which makes it the fixed-parameter family for runtime tests.
inline Drawing serpentine_drawing(int chains, int cols) {
  if (chains < 1 || cols < 2)
    throw std::invalid_argument("serpentine: need >= 1 chains of >= 2 columns");
  Drawing d;
  d.dimension = 2;
  auto id = [](int r, int c) { return "s" + std::to_string(r) + "_" + std::to_string(c); };
  for (int r = 0; r < chains; ++r)
    for (int c = 0; c < cols; ++c) {
      d.nodes.push_back({id(r, c), NodeKind::Vertex, {c, r, 0}});
      if (c > 0) d.edges.push_back({{id(r, c - 1), id(r, c)}});
    }
  for (int r = 0; r + 1 < chains; ++r) {
    int c = (r % 2 == 0) ? cols - 1 : 0;
    d.edges.push_back({{id(r, c), id(r + 1, c)}});
  }
  return d;
}

// Feature soup for oracle-versus-search comparisons: `features` horizontal
// chains on shuffled rows with nodes at every covered column, plus random
// unit vertical connectors between row-neighboring chains at a shared column.
inline Drawing random_feature_drawing(int features, std::uint64_t seed) {
  if (features < 1) throw std::invalid_argument("feature soup: need at least one feature");
  std::mt19937_64 rng(seed);

  std::vector<int> row_of(features);
  for (int i = 0; i < features; ++i) row_of[i] = i;
  for (int i = features - 1; i > 0; --i)
    std::swap(row_of[i], row_of[detail::rng_below(rng, i + 1)]);

  struct Chain {
    Coord x_lo, x_hi, row;
  };
  std::vector<Chain> chains(features);
  Drawing d;
  d.dimension = 2;
  auto id = [](int f, Coord c) { return "f" + std::to_string(f) + "_" + std::to_string(c); };
  for (int f = 0; f < features; ++f) {
    Coord x_lo = detail::rng_below(rng, 7);
    Coord len = detail::rng_below(rng, 4);  // 1..4 nodes
    chains[f] = {x_lo, x_lo + len, row_of[f]};
    for (Coord c = x_lo; c <= x_lo + len; ++c) {
      d.nodes.push_back({id(f, c), NodeKind::Vertex, {c, row_of[f], 0}});
      if (c > x_lo) d.edges.push_back({{id(f, c - 1), id(f, c)}});
    }
  }

  // Features sorted by row; connect some vertically adjacent pairs.
  std::vector<int> by_row(features);
  for (int i = 0; i < features; ++i) by_row[row_of[i]] = i;
  for (int r = 0; r + 1 < features; ++r) {
    if (detail::rng_below(rng, 2) != 0) continue;
    int a = by_row[r], b = by_row[r + 1];
    std::vector<Coord> shared;
    for (Coord c = std::max(chains[a].x_lo, chains[b].x_lo);
         c <= std::min(chains[a].x_hi, chains[b].x_hi); ++c)
      shared.push_back(c);
    if (shared.empty()) continue;
    Coord c = shared[detail::rng_below(rng, int(shared.size()))];
    d.edges.push_back({{id(a, c), id(b, c)}});
  }
  return d;
}

}  // namespace orthocompact
