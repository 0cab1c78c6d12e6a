#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orthocompact/compaction.hpp"
#include "orthocompact/drawing.hpp"

namespace orthocompact {

// A maximal horizontal run: nodes connected by horizontal segments (or one
// isolated node), spanning the closed column interval [x_lo, x_hi].  All
// members share one row in the original and in every vertical compaction.
struct SweepFeature {
  int id = 0;
  Coord x_lo = 0;
  Coord x_hi = 0;
  std::vector<std::string> members;  // node ids, by ascending column
  struct Connector {
    Coord column;
    int peer;  // feature id of the other endpoint
  };
  std::vector<Connector> connectors;
};

namespace detail {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = parent[find(b)]; }
};

// Everything the sweep needs, precomputed over the canonical drawing.
struct FeaturePlan {
  Drawing canon;
  std::vector<SweepFeature> features;
  std::vector<std::vector<Coord>> columns;          // sorted member columns per feature
  std::vector<std::vector<std::size_t>> member_idx;  // canon node indices per feature
  std::vector<int> feature_of;                       // canon node index -> feature id
  // Vertical segments, one entry each: column, endpoint features.
  struct VSeg {
    Coord column;
    int fa, fb;
  };
  std::vector<VSeg> connectors;
  std::map<Coord, std::vector<std::size_t>> connectors_at;  // column -> connector indices

  bool feature_has_node_at(int f, Coord x) const {
    const auto& c = columns[f];
    return std::binary_search(c.begin(), c.end(), x);
  }
};

inline FeaturePlan build_feature_plan(const Drawing& d) {
  ValidityReport rep = validate(d);
  if (!rep.ok())
    throw std::invalid_argument("sweep: input drawing is invalid:\n" + rep.to_string());
  if (d.dimension != 2)
    throw std::invalid_argument("sweep: only 2-dimensional drawings are supported");

  FeaturePlan plan;
  plan.canon = canonical_form(d);
  const Drawing& canon = plan.canon;
  auto index = canon.node_index();

  DisjointSets sets(canon.nodes.size());
  for (const auto& e : canon.edges)
    for (std::size_t i = 0; i + 1 < e.chain.size(); ++i) {
      std::size_t a = index.at(e.chain[i]);
      std::size_t b = index.at(e.chain[i + 1]);
      if (single_axis_between(canon.nodes[a].pos, canon.nodes[b].pos) == Axis::X)
        sets.unite(int(a), int(b));
    }

  // Features numbered by their smallest canonical node index.
  plan.feature_of.assign(canon.nodes.size(), -1);
  for (std::size_t i = 0; i < canon.nodes.size(); ++i) {
    int root = sets.find(int(i));
    if (plan.feature_of[root] == -1) {
      plan.feature_of[root] = int(plan.features.size());
      plan.features.push_back({});
      plan.member_idx.push_back({});
    }
    int f = plan.feature_of[root];
    plan.feature_of[i] = f;
    plan.member_idx[f].push_back(i);
  }

  plan.columns.resize(plan.features.size());
  for (std::size_t f = 0; f < plan.features.size(); ++f) {
    SweepFeature& feat = plan.features[f];
    feat.id = int(f);
    auto& members = plan.member_idx[f];
    std::sort(members.begin(), members.end(), [&](std::size_t a, std::size_t b) {
      return canon.nodes[a].pos.x < canon.nodes[b].pos.x;
    });
    for (std::size_t i : members) {
      feat.members.push_back(canon.nodes[i].id);
      plan.columns[f].push_back(canon.nodes[i].pos.x);
    }
    feat.x_lo = plan.columns[f].front();
    feat.x_hi = plan.columns[f].back();
  }

  for (const auto& e : canon.edges)
    for (std::size_t i = 0; i + 1 < e.chain.size(); ++i) {
      std::size_t a = index.at(e.chain[i]);
      std::size_t b = index.at(e.chain[i + 1]);
      if (single_axis_between(canon.nodes[a].pos, canon.nodes[b].pos) != Axis::Y) continue;
      int fa = plan.feature_of[a];
      int fb = plan.feature_of[b];
      Coord col = canon.nodes[a].pos.x;
      plan.connectors_at[col].push_back(plan.connectors.size());
      plan.connectors.push_back({col, fa, fb});
      plan.features[fa].connectors.push_back({col, fb});
      plan.features[fb].connectors.push_back({col, fa});
    }
  for (auto& f : plan.features)
    std::sort(f.connectors.begin(), f.connectors.end(),
              [](const SweepFeature::Connector& a, const SweepFeature::Connector& b) {
                return a.column != b.column ? a.column < b.column : a.peer < b.peer;
              });
  return plan;
}

}  // namespace detail

// Splits a 2-dimensional drawing into sweep features and their vertical
// connectors.
inline std::vector<SweepFeature> extract_features(const Drawing& d) {
  return detail::build_feature_plan(d).features;
}

struct SweepStats {
  std::size_t max_states = 0;       // largest stored state count at any event
  bool state_bound_respected = true;  // states <= l! * C(k,l) throughout
};

namespace detail {

inline unsigned long long states_bound(int k, int l) {
  // l! * C(k, l); saturates instead of overflowing.
  unsigned long long bound = 1;
  for (int i = 0; i < l; ++i) {
    unsigned long long next = bound * (unsigned long long)(k - i);
    if (next / (unsigned long long)(k - i) != bound) return ~0ULL;
    bound = next;
  }
  return bound;  // k * (k-1) * ... * (k-l+1) == l! * C(k,l)
}

struct SweepState {
  std::vector<std::pair<int, int>> active_rows;  // (feature, row), sorted by feature
  int parent = -1;                               // index into the previous event's states
  std::vector<std::pair<int, int>> inserted;     // features placed at this event
};

inline int row_of(const std::vector<std::pair<int, int>>& active, int feature) {
  for (auto [f, r] : active)
    if (f == feature) return r;
  return -1;
}

}  // namespace detail

// Left-to-right sweep deciding whether the drawing admits a vertex-by-vertex
// vertical compaction into at most k rows, and producing one if so.
//
// Features are active on their closed column interval; per event column the
// sweep drops features ending left of it, inserts the ones starting on it
// (each state branching over the free rows), de-duplicates states by their
// feature-to-row map, and then enforces every constraint live at that column:
// distinct rows for all simultaneously active features (which covers node
// collisions, nodes inside horizontal segments, and horizontal overlaps,
// because any two features sharing a column clash on a shared row), no
// vertical connector passing through a node of a third feature at its column,
// and no two vertical connectors in one column overlapping for a positive
// length.  Surviving final states reconstruct a row per feature through
// parent pointers.
inline std::optional<std::pair<Drawing, std::map<std::string, Coord>>> compact_to_k_rows(
    const Drawing& d, int k, SweepStats* stats = nullptr) {
  if (k <= 0) throw std::invalid_argument("compact_to_k_rows: k must be positive");
  detail::FeaturePlan plan = detail::build_feature_plan(d);
  if (stats) *stats = SweepStats{};

  auto finish = [&](const std::map<int, int>& row_of_feature) {
    Drawing out = plan.canon;
    std::map<std::string, Coord> assignment;
    for (std::size_t i = 0; i < out.nodes.size(); ++i) {
      Coord y = row_of_feature.at(plan.feature_of[i]);
      out.nodes[i].pos.y = y;
      assignment[out.nodes[i].id] = y;
    }
    return std::make_pair(std::move(out), std::move(assignment));
  };

  if (plan.features.empty()) return finish({});

  // Event columns: all distinct node columns (these include every feature
  // boundary and every connector column).
  std::vector<Coord> events;
  for (const auto& n : plan.canon.nodes) events.push_back(n.pos.x);
  std::sort(events.begin(), events.end());
  events.erase(std::unique(events.begin(), events.end()), events.end());

  std::vector<std::vector<int>> starts_at(events.size());
  for (const auto& f : plan.features) {
    std::size_t e =
        std::lower_bound(events.begin(), events.end(), f.x_lo) - events.begin();
    starts_at[e].push_back(f.id);
  }

  std::vector<std::vector<detail::SweepState>> history;
  history.push_back({detail::SweepState{{}, -1, {}}});

  for (std::size_t e = 0; e < events.size(); ++e) {
    Coord x = events[e];
    const auto& prev = history.back();
    std::map<std::vector<std::pair<int, int>>, detail::SweepState> fresh;

    for (std::size_t p = 0; p < prev.size(); ++p) {
      // Retire features whose interval ended strictly left of this column.
      std::vector<std::pair<int, int>> base;
      for (auto [f, r] : prev[p].active_rows)
        if (plan.features[f].x_hi >= x) base.push_back({f, r});

      // Insert each feature starting here, branching over free rows.
      struct Todo {
        std::vector<std::pair<int, int>> active;
        std::vector<std::pair<int, int>> inserted;
      };
      std::vector<Todo> frontier = {{base, {}}};
      for (int f : starts_at[e]) {
        std::vector<Todo> next;
        for (const Todo& t : frontier) {
          for (int r = 0; r < k; ++r) {
            bool taken = false;
            for (auto [of, orow] : t.active)
              if (orow == r) {
                taken = true;
                break;
              }
            if (taken) continue;
            Todo grown = t;
            grown.active.insert(
                std::upper_bound(grown.active.begin(), grown.active.end(),
                                 std::make_pair(f, r)),
                {f, r});
            grown.inserted.push_back({f, r});
            next.push_back(std::move(grown));
          }
        }
        frontier = std::move(next);
      }

      for (Todo& t : frontier) {
        // Connector constraints at this column.
        bool ok = true;
        auto cit = plan.connectors_at.find(x);
        if (cit != plan.connectors_at.end()) {
          std::vector<std::pair<int, int>> spans;  // (low row, high row) per connector
          for (std::size_t ci : cit->second) {
            const auto& c = plan.connectors[ci];
            int ra = detail::row_of(t.active, c.fa);
            int rb = detail::row_of(t.active, c.fb);
            int lo = std::min(ra, rb), hi = std::max(ra, rb);
            for (auto [f, r] : t.active) {
              if (f == c.fa || f == c.fb) continue;
              if (lo < r && r < hi && plan.feature_has_node_at(f, x)) {
                ok = false;
                break;
              }
            }
            if (!ok) break;
            spans.push_back({lo, hi});
          }
          if (ok)
            for (std::size_t i = 0; i < spans.size() && ok; ++i)
              for (std::size_t j = i + 1; j < spans.size(); ++j)
                if (std::max(spans[i].first, spans[j].first) <
                    std::min(spans[i].second, spans[j].second)) {
                  ok = false;
                  break;
                }
        }
        if (!ok) continue;
        if (!fresh.count(t.active))
          fresh.emplace(t.active,
                        detail::SweepState{t.active, int(p), std::move(t.inserted)});
      }
    }

    std::vector<detail::SweepState> next_states;
    next_states.reserve(fresh.size());
    for (auto& [key, st] : fresh) next_states.push_back(std::move(st));
    if (next_states.empty()) return std::nullopt;

    if (stats) {
      stats->max_states = std::max(stats->max_states, next_states.size());
      int l = int(next_states.front().active_rows.size());
      if (next_states.size() > detail::states_bound(k, l))
        stats->state_bound_respected = false;
    }
    history.push_back(std::move(next_states));
  }

  // Reconstruct one witness through the parent chain.
  std::map<int, int> row_of_feature;
  int idx = 0;
  for (std::size_t e = history.size(); e-- > 1;) {
    const detail::SweepState& st = history[e][idx];
    for (auto [f, r] : st.inserted) row_of_feature[f] = r;
    idx = st.parent;
  }
  return finish(row_of_feature);
}

// The smallest row count any vertical compaction can reach: at every column,
// all features whose intervals contain it must occupy pairwise distinct rows.
inline int vertical_row_lower_bound(const std::vector<SweepFeature>& features) {
  std::vector<std::pair<Coord, int>> delta;
  for (const auto& f : features) {
    delta.push_back({f.x_lo, +1});
    delta.push_back({f.x_hi + 1, -1});
  }
  std::sort(delta.begin(), delta.end());
  int active = 0, best = 0;
  for (auto [x, d2] : delta) {
    active += d2;
    best = std::max(best, active);
  }
  return best;
}

// Minimal k with compact_to_k_rows feasible, plus a witness drawing on
// exactly that many rows.
inline std::pair<Drawing, int> optimal_vertical_compaction(const Drawing& d,
                                                           SweepStats* stats = nullptr) {
  detail::FeaturePlan plan = detail::build_feature_plan(d);
  if (plan.canon.nodes.empty()) return {plan.canon, 0};
  int lb = std::max(1, vertical_row_lower_bound(plan.features));
  int ub = metrics(plan.canon).rows;  // the identity compaction always works
  for (int k = lb; k <= ub; ++k) {
    auto res = compact_to_k_rows(d, k, stats);
    if (res) return {res->first, metrics(res->first).rows};
  }
  throw std::logic_error("optimal_vertical_compaction: no k feasible up to the identity bound");
}

}  // namespace orthocompact
