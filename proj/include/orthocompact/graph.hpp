#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace orthocompact {

// Simple undirected graph on vertices 0..n-1.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

// Returns a copy with every edge stored as (min,max), sorted and deduplicated.
// Throws on self-loops or out-of-range endpoints.
inline Graph normalized(const Graph& g) {
  Graph out;
  out.n = g.n;
  if (g.n < 0) throw std::invalid_argument("graph: negative vertex count");
  out.edges.reserve(g.edges.size());
  for (auto [u, v] : g.edges) {
    if (u < 0 || v < 0 || u >= g.n || v >= g.n)
      throw std::invalid_argument("graph: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("graph: self-loop");
    out.edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(out.edges.begin(), out.edges.end());
  out.edges.erase(std::unique(out.edges.begin(), out.edges.end()), out.edges.end());
  return out;
}

inline std::vector<std::vector<int>> adjacency(const Graph& g) {
  std::vector<std::vector<int>> adj(g.n);
  for (auto [u, v] : g.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

inline bool is_connected(const Graph& g) {
  if (g.n == 0) return true;
  auto adj = adjacency(g);
  std::vector<char> seen(g.n, 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : adj[u])
      if (!seen[v]) {
        seen[v] = 1;
        ++count;
        stack.push_back(v);
      }
  }
  return count == g.n;
}

// Proper-coloring check: colors[v] in 0..k-1 for some k, adjacent distinct.
inline bool is_proper_coloring(const Graph& g, const std::vector<int>& colors) {
  if (int(colors.size()) != g.n) return false;
  for (int c : colors)
    if (c < 0) return false;
  for (auto [u, v] : g.edges)
    if (colors[u] == colors[v]) return false;
  return true;
}

inline int color_count(const std::vector<int>& colors) {
  int k = 0;
  for (int c : colors) k = std::max(k, c + 1);
  return k;
}

// A few named small graphs used throughout the tests.
inline Graph complete_graph(int n) {
  Graph g;
  g.n = n;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.edges.emplace_back(u, v);
  return g;
}

inline Graph cycle_graph(int n) {
  Graph g;
  g.n = n;
  for (int u = 0; u < n; ++u) g.edges.emplace_back(std::min(u, (u + 1) % n), std::max(u, (u + 1) % n));
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

inline Graph path_graph(int n) {
  Graph g;
  g.n = n;
  for (int u = 0; u + 1 < n; ++u) g.edges.emplace_back(u, u + 1);
  return g;
}

}  // namespace orthocompact
