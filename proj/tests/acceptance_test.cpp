// Acceptance sweep: one self-contained check per headline guarantee of the
// library.  Each criterion prints exactly one [PASS]/[FAIL] line; the binary
// exits nonzero if any criterion fails.  All tolerances are pinned as named
// constants below.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "orthocompact/bench.hpp"
#include "orthocompact/compaction.hpp"
#include "orthocompact/drawing.hpp"
#include "orthocompact/fpt.hpp"
#include "orthocompact/generators.hpp"
#include "orthocompact/graph.hpp"
#include "orthocompact/json_io.hpp"
#include "orthocompact/oracle.hpp"
#include "orthocompact/path_compact.hpp"
#include "orthocompact/reductions.hpp"

namespace oc = orthocompact;

namespace {

// ---- pinned tolerances -----------------------------------------------------

// "Linear within a factor of two" on a decade ladder: the least-squares
// log-log slope must sit within log10(2) of 1.
constexpr double kSlopeLo = 0.699;
constexpr double kSlopeHi = 1.301;

// Wall-clock budget for the two exhaustive identity sweeps (criteria 1 and 2).
constexpr double kTimeBudgetSeconds = 60.0;

// Quadratic slack constant for the bundle sandwich: rows <= theta*chi + C*n^2.
constexpr long long kBundleQuadraticC = 2;

// Minimum instance counts for the randomized sweeps.
constexpr int kPathIdentityInstances = 200;
constexpr int kSweepVsOracleInstances = 500;
constexpr int kPathCompactInstances = 500;
constexpr int kTinyPathOracleInstances = 50;
constexpr int kFixbarInstances = 20;

// ---- reporting -------------------------------------------------------------

int g_failures = 0;
std::vector<std::string> g_errors;  // reset per criterion
std::vector<std::string> g_notes;   // reset per criterion

void fail(std::string msg) { g_errors.push_back(std::move(msg)); }

bool expect(bool cond, const std::string& msg) {
  if (!cond) fail(msg);
  return cond;
}

void note(std::string msg) { g_notes.push_back(std::move(msg)); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::duration<double>>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

template <typename Fn>
void run_criterion(int num, const std::string& name, Fn body) {
  g_errors.clear();
  g_notes.clear();
  auto t0 = std::chrono::steady_clock::now();
  try {
    body();
  } catch (const std::exception& e) {
    fail(std::string("unexpected exception: ") + e.what());
  }
  bool ok = g_errors.empty();
  std::printf("[%s] %02d %s (%.1fs)\n", ok ? "PASS" : "FAIL", num, name.c_str(),
              seconds_since(t0));
  if (!ok) {
    ++g_failures;
    for (const std::string& msg : g_errors) std::printf("       %s\n", msg.c_str());
  }
  for (const std::string& msg : g_notes) std::printf("       note: %s\n", msg.c_str());
  std::fflush(stdout);
}

// ---- shared fixtures -------------------------------------------------------

std::vector<std::pair<std::string, oc::Graph>> named_family() {
  return {{"K2", oc::complete_graph(2)}, {"P3", oc::path_graph(3)},
          {"K3", oc::complete_graph(3)}, {"P4", oc::path_graph(4)},
          {"C4", oc::cycle_graph(4)},    {"K4", oc::complete_graph(4)},
          {"C5", oc::cycle_graph(5)}};
}

oc::Graph wheel6() {
  return oc::Graph{6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5},
                       {1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}}};
}

oc::Drawing two_node_wide_edge() {
  oc::Drawing d;
  d.dimension = 2;
  d.nodes = {{"a", oc::NodeKind::Vertex, {0, 0, 0}}, {"b", oc::NodeKind::Vertex, {3, 0, 0}}};
  d.edges = {oc::Edge{{"a", "b"}}};
  return d;
}

oc::Drawing tromino() {
  oc::Drawing d;
  d.dimension = 2;
  d.nodes = {{"a", oc::NodeKind::Vertex, {0, 0, 0}},
             {"b", oc::NodeKind::Vertex, {1, 0, 0}},
             {"c", oc::NodeKind::Vertex, {1, 1, 0}}};
  d.edges = {oc::Edge{{"a", "b"}}, oc::Edge{{"b", "c"}}};
  return d;
}

oc::Drawing unit_h() {
  oc::Drawing d;
  d.dimension = 2;
  d.nodes = {{"a", oc::NodeKind::Vertex, {0, 0, 0}}, {"b", oc::NodeKind::Vertex, {1, 0, 0}}};
  d.edges = {oc::Edge{{"a", "b"}}};
  return d;
}

oc::Drawing unit_v() {
  oc::Drawing d;
  d.dimension = 2;
  d.nodes = {{"a", oc::NodeKind::Vertex, {0, 0, 0}}, {"b", oc::NodeKind::Vertex, {0, 1, 0}}};
  d.edges = {oc::Edge{{"a", "b"}}};
  return d;
}

long long x_span(const oc::Drawing& d) {
  long long lo = d.nodes.front().pos.x, hi = lo;
  for (const oc::Node& n : d.nodes) {
    lo = std::min<long long>(lo, n.pos.x);
    hi = std::max<long long>(hi, n.pos.x);
  }
  return hi - lo;
}

bool drawing_connected(const oc::Drawing& d) {
  if (d.nodes.empty()) return true;
  auto idx = d.node_index();
  std::vector<std::vector<std::size_t>> adj(d.nodes.size());
  for (const oc::Edge& e : d.edges)
    for (std::size_t i = 0; i + 1 < e.chain.size(); ++i) {
      std::size_t a = idx.at(e.chain[i]), b = idx.at(e.chain[i + 1]);
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
  std::vector<char> seen(d.nodes.size(), 0);
  std::vector<std::size_t> queue{0};
  seen[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (std::size_t v : adj[queue[head]])
      if (!seen[v]) {
        seen[v] = 1;
        queue.push_back(v);
      }
  return queue.size() == d.nodes.size();
}

// ---- criterion 1: path drawings compact to exactly chi rows ----------------

void criterion_path_identity() {
  auto t0 = std::chrono::steady_clock::now();
  int checked = 0;
  auto check_graph = [&](const oc::Graph& g, const std::string& label) {
    oc::Drawing d = oc::build_path_drawing(g);
    if (!expect(oc::validate(d).ok(), label + ": path drawing invalid")) return;
    auto res = oc::brute_optimal_compaction(d, oc::row_by_row(), oc::Objective::Rows);
    long long chi = oc::brute_chromatic(g);
    expect(res.value == chi, label + ": minimum rows " + std::to_string((long long)res.value) +
                                 " != chromatic number " + std::to_string(chi));
    expect(oc::is_compaction(d, res.witness, oc::row_by_row()).ok,
           label + ": oracle witness is not a row-by-row compaction");
    ++checked;
  };
  for (const auto& [name, g] : named_family()) check_graph(g, name);
  for (int n = 2; n <= 6; ++n) {
    int max_extra = n * (n - 1) / 2 - (n - 1);
    for (int i = 0; i < 40; ++i) {
      std::uint64_t seed = 1000ull * n + i;
      int extra = max_extra == 0 ? 0 : int(seed % std::uint64_t(max_extra + 1));
      oc::Graph g = oc::random_connected_graph(n, extra, seed);
      check_graph(g, "random n=" + std::to_string(n) + " seed=" + std::to_string(seed));
    }
  }
  expect(checked >= kPathIdentityInstances, "fewer than " + std::to_string(kPathIdentityInstances) +
                                             " instances checked");
  double secs = seconds_since(t0);
  expect(secs < kTimeBudgetSeconds,
         "sweep took " + std::to_string(secs) + "s, budget " +
             std::to_string(kTimeBudgetSeconds) + "s");
}

// ---- criterion 2: row frames pin the longest edge to chi + 1 ---------------

void criterion_row_frame() {
  auto t0 = std::chrono::steady_clock::now();
  for (const auto& [name, g] : named_family()) {
    long long chi = oc::brute_chromatic(g);
    for (int phi = 1; phi <= 3; ++phi) {
      std::string label = name + " phi=" + std::to_string(phi);
      oc::Drawing f = oc::add_row_frame(g, phi);
      if (!expect(oc::validate(f).ok(), label + ": framed drawing invalid")) continue;
      auto res = oc::brute_optimal_compaction(f, oc::row_by_row(), oc::Objective::LongestEdge);
      expect(res.value == chi + 1, label + ": minimum longest edge " +
                                       std::to_string((long long)res.value) + " != chi+1 = " +
                                       std::to_string(chi + 1));
    }
  }
  double secs = seconds_since(t0);
  expect(secs < kTimeBudgetSeconds,
         "sweep took " + std::to_string(secs) + "s, budget " +
             std::to_string(kTimeBudgetSeconds) + "s");
}

// ---- criterion 3: bundle row count sandwiched by theta * chi ---------------

void criterion_bundle() {
  struct Case {
    std::string label;
    oc::Graph g;
    int theta;
    bool via_oracle;     // false: via the vertical sweep
    long long frozen;    // expected optimum; -1 when only the sandwich is pinned
  };
  std::vector<Case> cases = {
      {"K2 theta=1", oc::complete_graph(2), 1, true, 4},
      {"K2 theta=2", oc::complete_graph(2), 2, true, -1},
      {"K2 theta=3", oc::complete_graph(2), 3, true, -1},
      {"P3 theta=1", oc::path_graph(3), 1, true, -1},
      {"P3 theta=2", oc::path_graph(3), 2, false, -1},
      {"P3 theta=3", oc::path_graph(3), 3, false, -1},
      {"K3 theta=1", oc::complete_graph(3), 1, true, 8},
      {"P4 theta=1", oc::path_graph(4), 1, false, 6},
      {"P4 theta=2", oc::path_graph(4), 2, false, 8},
      {"P4 theta=3", oc::path_graph(4), 3, false, 10},
      {"C4 theta=1", oc::cycle_graph(4), 1, false, 8},
      {"C4 theta=2", oc::cycle_graph(4), 2, false, 10},
      {"K3 theta=2", oc::complete_graph(3), 2, false, 10},
  };
  for (const Case& c : cases) {
    oc::Drawing d = oc::build_bundle_drawing(c.g, c.theta);
    if (!expect(oc::validate(d).ok(), c.label + ": bundle drawing invalid")) continue;
    long long lambda;
    oc::Drawing witness;
    if (c.via_oracle) {
      auto res = oc::brute_optimal_compaction(d, oc::vertex_vertical(), oc::Objective::Rows);
      lambda = res.value;
      witness = res.witness;
    } else {
      auto [best, rows] = oc::optimal_vertical_compaction(d);
      lambda = rows;
      witness = std::move(best);
    }
    long long chi = oc::brute_chromatic(c.g);
    long long n = c.g.n;
    long long m = (long long)c.g.edges.size();
    long long lo = c.theta * chi;
    expect(lambda >= lo, c.label + ": rows " + std::to_string(lambda) + " below theta*chi = " +
                             std::to_string(lo));
    expect(lambda <= lo + 2 * m + 2,
           c.label + ": rows " + std::to_string(lambda) + " above theta*chi + 2m+2 = " +
               std::to_string(lo + 2 * m + 2));
    expect(lambda <= lo + kBundleQuadraticC * n * n,
           c.label + ": rows " + std::to_string(lambda) + " above theta*chi + " +
               std::to_string(kBundleQuadraticC) + "*n^2 = " +
               std::to_string(lo + kBundleQuadraticC * n * n));
    if (c.frozen >= 0)
      expect(lambda == c.frozen, c.label + ": rows " + std::to_string(lambda) +
                                     " != frozen optimum " + std::to_string(c.frozen));
    expect(oc::is_compaction(d, witness, oc::vertex_vertical()).ok,
           c.label + ": witness is not a vertex-vertical compaction");
    oc::Coloring col = oc::coloring_from_bundle_compaction(d, witness);
    expect(col.colors.size() == std::size_t(c.g.n), c.label + ": extracted coloring size wrong");
    expect(oc::is_proper_coloring(c.g, col.colors), c.label + ": extracted coloring improper");
    expect((long long)col.count() * c.theta <= lambda,
           c.label + ": extracted coloring uses " + std::to_string(col.count()) +
               " colors, inconsistent with " + std::to_string(lambda) + " rows");
    if (c.label == "K3 theta=1")
      expect(col.count() == 3, "K3 theta=1: extraction found " + std::to_string(col.count()) +
                                   " colors, expected 3");
  }

  // Route cross-check: both the oracle and the sweep on the same instance.
  {
    oc::Drawing d = oc::build_bundle_drawing(oc::path_graph(3), 1);
    auto res = oc::brute_optimal_compaction(d, oc::vertex_vertical(), oc::Objective::Rows);
    auto [best, rows] = oc::optimal_vertical_compaction(d);
    (void)best;
    expect(res.value == rows, "P3 theta=1: oracle (" + std::to_string((long long)res.value) +
                                  ") and sweep (" + std::to_string(rows) + ") disagree");
  }

  note("C4 theta=3 skipped: the vertical sweep needs ~190s on this hardware");
  note("K3 theta=3 skipped: the vertical sweep exceeds 300s");
  note("K4 skipped for every theta: 16 horizontal features exceed the 9-feature "
       "oracle cap, and the sweep's state table exhausts memory");
}

// ---- criterion 4: one-gadget-per-layer drawings compact to chi layers ------

void criterion_3d_identity() {
  for (const auto& [name, g] : named_family()) {
    oc::Drawing d = oc::build_3d_drawing(g);
    if (!expect(oc::validate(d).ok(), name + ": 3d drawing invalid")) continue;
    expect(oc::metrics(d).node_count == std::size_t(3 * g.n) + 2 * g.edges.size(),
           name + ": 3d drawing node count differs from 3n + 2m");
    auto res = oc::brute_optimal_compaction(d, oc::vertex_vertical(), oc::Objective::Rows);
    long long chi = oc::brute_chromatic(g);
    expect(res.value == chi, name + ": minimum layers " + std::to_string((long long)res.value) +
                                 " != chromatic number " + std::to_string(chi));
  }
}

// ---- criterion 5: framed 3d drawings need chi + 1 layers -------------------

void criterion_3d_frame() {
  auto check = [&](const std::string& label, const oc::Graph& g) {
    oc::Drawing f = oc::add_3d_frame(g);
    if (!expect(oc::validate(f).ok(), label + ": framed 3d drawing invalid")) return;
    // One frame-to-frame vertical per sub-diagonal grid point: 1 + 2 + ... + (2n-2).
    long long frame_verticals = 0;
    for (const oc::Edge& e : f.edges)
      if (e.chain.size() == 2 && e.chain[0].rfind("f_b_", 0) == 0 &&
          e.chain[1].rfind("f_t_", 0) == 0)
        ++frame_verticals;
    long long expected = (2ll * g.n - 2) * (2ll * g.n - 1) / 2;
    expect(frame_verticals == expected,
           label + ": " + std::to_string(frame_verticals) + " frame verticals, expected " +
               std::to_string(expected));
    auto res = oc::brute_optimal_compaction(f, oc::vertex_vertical(), oc::Objective::Rows);
    long long chi = oc::brute_chromatic(g);
    expect(res.value == chi + 1, label + ": minimum layers " +
                                     std::to_string((long long)res.value) + " != chi+1 = " +
                                     std::to_string(chi + 1));
  };
  check("C5", oc::cycle_graph(5));
  check("W5", wheel6());
}

// ---- criterion 6: vertical sweep matches the brute-force oracle ------------

void criterion_sweep_vs_oracle() {
  int checked = 0;
  auto check_one = [&](int features, std::uint64_t seed) {
    oc::Drawing d = oc::random_feature_drawing(features, seed);
    std::string label = "soup f=" + std::to_string(features) + " seed=" + std::to_string(seed);
    auto ores = oc::brute_optimal_compaction(d, oc::vertex_vertical(), oc::Objective::Rows);
    oc::SweepStats stats;
    auto [best, rows] = oc::optimal_vertical_compaction(d, &stats);
    expect(rows == ores.value, label + ": sweep " + std::to_string(rows) + " != oracle " +
                                   std::to_string((long long)ores.value));
    expect(oc::is_compaction(d, best, oc::vertex_vertical()).ok,
           label + ": sweep witness is not a vertex-vertical compaction");
    expect(oc::is_compaction(d, ores.witness, oc::vertex_vertical()).ok,
           label + ": oracle witness is not a vertex-vertical compaction");
    expect(stats.state_bound_respected, label + ": sweep state table exceeded its bound");
    ++checked;
  };
  for (std::uint64_t seed = 1; seed <= 480; ++seed) check_one(1 + int(seed % 7), seed);
  for (std::uint64_t seed = 481; seed <= 500; ++seed) check_one(8, seed);
  expect(checked >= kSweepVsOracleInstances,
         "fewer than " + std::to_string(kSweepVsOracleInstances) + " instances checked");
}

// ---- criterion 7: vertical sweep scales linearly at fixed row budget -------

void criterion_sweep_runtime() {
  oc::BenchTable t = oc::bench_family({99, 999, 9999}, [](long long n) {
    oc::Drawing d = oc::serpentine_drawing(3, int(n / 3));
    return [d] { oc::optimal_vertical_compaction(d); };
  });
  double slope = t.loglog_slope();
  expect(slope >= kSlopeLo && slope <= kSlopeHi,
         "log-log slope " + std::to_string(slope) + " outside [" + std::to_string(kSlopeLo) +
             ", " + std::to_string(kSlopeHi) + "]");
  note("sweep on three-chain serpentines, sizes 99/999/9999: slope " + std::to_string(slope));
}

// ---- criterion 8: path free-compaction is exact and linear -----------------

void criterion_path_compact() {
  // Independent recomputation of the optimum: the largest number of nodes in a
  // maximal same-column streak along the path (plus nothing else).
  auto independent_rows = [](const oc::Drawing& d) {
    std::vector<oc::Point> walk(d.nodes.size());
    auto idx = d.node_index();
    for (std::size_t i = 0; i < d.nodes.size(); ++i)
      walk[i] = d.nodes[idx.at("n" + std::to_string(i))].pos;
    long long best = 0, streak = 0;
    for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
      if (walk[i].x == walk[i + 1].x)
        ++streak;
      else
        streak = 0;
      best = std::max(best, streak);
    }
    return best + 1;
  };

  int checked = 0;
  for (std::uint64_t seed = 0; seed < std::uint64_t(kPathCompactInstances); ++seed) {
    oc::Drawing d = oc::random_path_drawing(2 + int(seed % 12), seed);
    oc::Drawing c = oc::free_compact_path(d);
    std::string label = "path seed=" + std::to_string(seed);
    expect(oc::is_compaction(d, c, oc::vertex_free()).ok,
           label + ": result is not a direction-free compaction");
    expect((long long)oc::metrics(c).rows == independent_rows(d),
           label + ": rows " + std::to_string(oc::metrics(c).rows) +
               " != independently recomputed optimum " + std::to_string(independent_rows(d)));
    ++checked;
  }
  expect(checked >= kPathCompactInstances, "fewer than " +
                                               std::to_string(kPathCompactInstances) +
                                               " paths checked");

  // Tiny instances double-checked against the exhaustive direction-free oracle.
  int tiny = 0;
  for (std::uint64_t seed = 0; seed < 2 * std::uint64_t(kTinyPathOracleInstances); ++seed) {
    if (tiny >= kTinyPathOracleInstances) break;
    oc::Drawing d = oc::random_path_drawing(2, seed);
    if (d.nodes.size() > 7) continue;
    auto res = oc::brute_optimal_compaction(d, oc::vertex_free(), oc::Objective::Rows);
    expect(res.value == (long long)oc::metrics(oc::free_compact_path(d)).rows,
           "tiny path seed=" + std::to_string(seed) + ": compactor disagrees with oracle");
    ++tiny;
  }
  expect(tiny >= kTinyPathOracleInstances,
         "fewer than " + std::to_string(kTinyPathOracleInstances) + " tiny paths checked");

  oc::BenchTable t = oc::bench_family({101, 1001, 10001}, [](long long n) {
    oc::Drawing d = oc::staircase_drawing(int(n - 1));
    return [d] { oc::free_compact_path(d); };
  });
  double slope = t.loglog_slope();
  expect(slope >= kSlopeLo && slope <= kSlopeHi,
         "log-log slope " + std::to_string(slope) + " outside [" + std::to_string(kSlopeLo) +
             ", " + std::to_string(kSlopeHi) + "]");
  note("compactor on staircases, sizes 101/1001/10001: slope " + std::to_string(slope));
}

// ---- criterion 9: the tower resists vertex-vertical compaction -------------

void criterion_tower() {
  oc::Drawing d = oc::counterexample_instance();
  expect(oc::validate(d).ok(), "tower drawing invalid");

  oc::Graph inc = oc::incompatibility_graph(d);
  // The clash graph must be a simple path: connected, n-1 edges, max degree 2.
  expect(oc::is_connected(inc), "clash graph is not connected");
  expect(inc.edges.size() == std::size_t(inc.n) - 1, "clash graph is not a tree");
  std::vector<int> deg(inc.n, 0);
  for (auto [a, b] : inc.edges) {
    ++deg[a];
    ++deg[b];
  }
  expect(*std::max_element(deg.begin(), deg.end()) <= 2, "clash graph has degree above 2");
  expect(oc::brute_chromatic(inc) == 2, "clash graph is not 2-chromatic");

  auto res = oc::brute_optimal_compaction(d, oc::vertex_vertical(), oc::Objective::Rows);
  long long initial = (long long)oc::metrics(d).rows;
  expect(res.value == initial, "vertex-vertical optimum " + std::to_string((long long)res.value) +
                                   " != initial rows " + std::to_string(initial));
  expect(initial == 5, "tower has " + std::to_string(initial) + " rows, expected 5");
}

// ---- criterion 10: fixbar adds exactly one row and pins the width ----------

void criterion_fixbar() {
  std::vector<std::pair<std::string, oc::Drawing>> cases = {
      {"unit-h", unit_h()},
      {"unit-v", unit_v()},
      {"tromino", tromino()},
      {"wide-edge", two_node_wide_edge()},
      {"tower", oc::counterexample_instance()},
      {"K2 bundle", oc::build_bundle_drawing(oc::complete_graph(2), 1)},
  };
  for (std::uint64_t i = 0; cases.size() < std::size_t(kFixbarInstances); ++i)
    cases.emplace_back("soup seed=" + std::to_string(9000 + i),
                       oc::random_feature_drawing(1 + int(i % 6), 9000 + i));

  int width_checked = 0;
  for (const auto& [label, d] : cases) {
    oc::Drawing b = oc::add_fixbar(d);
    if (!expect(oc::validate(b).ok(), label + ": fixbar'd drawing invalid")) continue;
    auto before = oc::brute_optimal_compaction(d, oc::vertex_vertical(), oc::Objective::Rows);
    auto after = oc::brute_optimal_compaction(b, oc::vertex_vertical(), oc::Objective::Rows);
    expect(after.value == before.value + 1,
           label + ": rows went " + std::to_string((long long)before.value) + " -> " +
               std::to_string((long long)after.value) + ", expected +1");
    if (b.nodes.size() <= 8 && drawing_connected(b)) {
      auto w = oc::brute_optimal_compaction(b, oc::vertex_free(), oc::Objective::Width);
      expect(w.value == x_span(d), label + ": direction-free minimum width " +
                                       std::to_string((long long)w.value) +
                                       " != original span " + std::to_string(x_span(d)));
      ++width_checked;
    }
  }
  expect(width_checked >= 3, "width pin verified on only " + std::to_string(width_checked) +
                                 " instances");
  note("the width pin runs on the " + std::to_string(width_checked) +
       " connected instances small enough for the direction-free oracle (8 nodes)");
}

// ---- criterion 11: generators emit valid, byte-stable drawings -------------

void criterion_generators() {
  auto check_drawing = [&](const std::string& label, const oc::Drawing& d) {
    expect(oc::validate(d).ok(), label + ": invalid drawing");
    std::string once = oc::emit_drawing(d);
    std::string twice = oc::emit_drawing(oc::parse_drawing(once));
    expect(once == twice, label + ": serialization is not byte-stable");
  };
  check_drawing("random-path", oc::random_path_drawing(6, 42));
  check_drawing("staircase", oc::staircase_drawing(7));
  check_drawing("serpentine", oc::serpentine_drawing(3, 4));
  check_drawing("feature-soup", oc::random_feature_drawing(5, 42));
  check_drawing("path-of-K3", oc::build_path_drawing(oc::complete_graph(3)));
  check_drawing("row-frame-of-P3", oc::add_row_frame(oc::path_graph(3), 2));
  check_drawing("bundle-of-P3", oc::build_bundle_drawing(oc::path_graph(3), 1));
  check_drawing("framed-bundle-of-K3", oc::add_vxv_frame(oc::complete_graph(3), 1, 1));
  check_drawing("fixbar-of-unit-h", oc::add_fixbar(unit_h()));
  check_drawing("3d-of-K3", oc::build_3d_drawing(oc::complete_graph(3)));
  check_drawing("framed-3d-of-C5", oc::add_3d_frame(oc::cycle_graph(5)));
  check_drawing("tower", oc::counterexample_instance());

  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    oc::Graph g = oc::random_connected_graph(5, 3, seed);
    std::string label = "random-graph seed=" + std::to_string(seed);
    expect(oc::is_connected(g), label + ": not connected");
    std::string once = oc::emit_graph(g);
    std::string twice = oc::emit_graph(oc::parse_graph(once));
    expect(once == twice, label + ": serialization is not byte-stable");
  }
}

}  // namespace

int main() {
  run_criterion(1, "row-minimal path drawings match the chromatic number", criterion_path_identity);
  run_criterion(2, "row frames pin the longest edge to chi + 1", criterion_row_frame);
  run_criterion(3, "bundle row count is sandwiched by theta * chi", criterion_bundle);
  run_criterion(4, "one-gadget-per-layer drawings compact to chi layers", criterion_3d_identity);
  run_criterion(5, "framed 3d drawings need chi + 1 layers", criterion_3d_frame);
  run_criterion(6, "vertical sweep matches the brute-force oracle", criterion_sweep_vs_oracle);
  run_criterion(7, "vertical sweep scales linearly at a fixed row budget",
                criterion_sweep_runtime);
  run_criterion(8, "path free-compaction is exact and linear", criterion_path_compact);
  run_criterion(9, "the tower resists vertex-vertical compaction", criterion_tower);
  run_criterion(10, "fixbar adds exactly one row and pins the width", criterion_fixbar);
  run_criterion(11, "generators emit valid, byte-stable drawings", criterion_generators);

  if (g_failures == 0) {
    std::printf("all 11 criteria passed\n");
    return 0;
  }
  std::printf("%d criteria failed\n", g_failures);
  return 1;
}
