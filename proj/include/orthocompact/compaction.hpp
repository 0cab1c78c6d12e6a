#pragma once

#include <map>
#include <string>
#include <vector>

#include "orthocompact/drawing.hpp"
#include "orthocompact/json_io.hpp"

namespace orthocompact {

enum class CompactionKind { RowByRow, VertexVertical, VertexFree };

// Which coordinates may move, from most to least constrained.  The vertical
// axis is the one allowed to change under RowByRow and VertexVertical; y by
// default, so that rows are horizontal lines (layers, in 3D).
struct CompactionMode {
  CompactionKind kind = CompactionKind::VertexFree;
  Axis vertical = Axis::Y;
};

inline CompactionMode row_by_row(Axis vertical = Axis::Y) {
  return {CompactionKind::RowByRow, vertical};
}
inline CompactionMode vertex_vertical(Axis vertical = Axis::Y) {
  return {CompactionKind::VertexVertical, vertical};
}
inline CompactionMode vertex_free() { return {CompactionKind::VertexFree, Axis::Y}; }

inline const char* mode_name(CompactionKind k) {
  switch (k) {
    case CompactionKind::RowByRow: return "row-by-row";
    case CompactionKind::VertexVertical: return "vertex-vertical";
    case CompactionKind::VertexFree: return "vertex-free";
  }
  return "?";
}

struct CompactionCheck {
  bool ok = false;
  std::vector<std::string> reasons;  // empty iff ok

  explicit operator bool() const { return ok; }

  std::string to_string() const {
    if (ok) return "compaction holds";
    std::string out;
    for (const auto& r : reasons) out += r + "\n";
    return out;
  }
};

namespace detail {

// The decision core behind is_compaction.  Both drawings must already be in
// canonical form with equal node id sets and equal chains, and the original
// must be valid; is_compaction establishes all of that before delegating, and
// search code that proved it once may call the core directly in its inner
// loop.
inline CompactionCheck compaction_core(const Drawing& co, const Drawing& cc,
                                       CompactionMode mode) {
  CompactionCheck check;
  auto fail = [&check](std::string r) { check.reasons.push_back(std::move(r)); };

  ValidityReport cand_report = validate(cc);
  if (!cand_report.ok()) {
    for (const auto& v : cand_report.violations)
      fail(std::string("candidate invalid: ") + violation_name(v.kind) + ": " + v.message);
  }

  // Positions by canonical node order (ids agree index-to-index).
  auto oi = co.node_index();
  auto ci = cc.node_index();

  // Segment parallelism, per matched canonical chain.
  for (std::size_t e = 0; e < co.edges.size(); ++e) {
    const auto& chain = co.edges[e].chain;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      const Point& po = co.nodes[oi.at(chain[i])].pos;
      const Point& qo = co.nodes[oi.at(chain[i + 1])].pos;
      const Point& pc = cc.nodes[ci.at(chain[i])].pos;
      const Point& qc = cc.nodes[ci.at(chain[i + 1])].pos;
      if (diff_count(po, qo) != 1) continue;  // original malformed step; validate caught it
      Axis ao = single_axis_between(po, qo);
      if (diff_count(pc, qc) != 1) {
        fail("segment '" + chain[i] + "'-'" + chain[i + 1] +
             "' is not a grid segment in the candidate");
        continue;
      }
      Axis ac = single_axis_between(pc, qc);
      if (ao != ac)
        fail("segment '" + chain[i] + "'-'" + chain[i + 1] + "' changed axis from " +
             axis_name(ao) + " to " + axis_name(ac));
    }
  }

  if (mode.kind == CompactionKind::RowByRow || mode.kind == CompactionKind::VertexVertical) {
    for (const auto& n : co.nodes) {
      const Point& p = n.pos;
      const Point& q = cc.nodes[ci.at(n.id)].pos;
      for (Axis ax : {Axis::X, Axis::Y, Axis::Z}) {
        if (ax == mode.vertical) continue;
        if (p[ax] != q[ax])
          fail("node '" + n.id + "' moved along fixed axis " + axis_name(ax));
      }
    }
  }
  if (mode.kind == CompactionKind::RowByRow) {
    std::map<Coord, std::pair<Coord, std::string>> row_map;  // orig row -> (cand row, witness)
    for (const auto& n : co.nodes) {
      Coord yo = n.pos[mode.vertical];
      Coord yc = cc.nodes[ci.at(n.id)].pos[mode.vertical];
      auto [it, fresh] = row_map.emplace(yo, std::make_pair(yc, n.id));
      if (!fresh && it->second.first != yc)
        fail("nodes '" + it->second.second + "' and '" + n.id + "' shared " +
             axis_name(mode.vertical) + "=" + std::to_string(yo) +
             " but were sent to different rows");
    }
  }

  check.ok = check.reasons.empty();
  return check;
}

}  // namespace detail

// Decides whether `candidate` is a compaction of `original` under `mode`:
// candidate must be a valid drawing, corresponding segments must be parallel
// (direction may flip), and the mode's coordinate constraints must hold —
// RowByRow additionally requires nodes sharing a vertical coordinate to keep
// sharing one.  The drawings must agree on dimension, node id set, and edge
// chains (up to chain orientation); any disagreement there is a hard error,
// distinct from a false result.  `original` must itself be valid.
inline CompactionCheck is_compaction(const Drawing& original, const Drawing& candidate,
                                     CompactionMode mode) {
  if (!validate(original).ok())
    throw std::invalid_argument("is_compaction: original drawing is invalid");
  if (original.dimension != candidate.dimension)
    throw std::invalid_argument("is_compaction: dimension mismatch");

  Drawing co = canonical_form(original);
  Drawing cc = canonical_form(candidate);
  if (co.nodes.size() != cc.nodes.size())
    throw std::invalid_argument("is_compaction: node id sets differ");
  for (std::size_t i = 0; i < co.nodes.size(); ++i)
    if (co.nodes[i].id != cc.nodes[i].id)
      throw std::invalid_argument("is_compaction: node id sets differ");
  if (co.edges.size() != cc.edges.size())
    throw std::invalid_argument("is_compaction: edge chains differ");
  for (std::size_t e = 0; e < co.edges.size(); ++e)
    if (co.edges[e].chain != cc.edges[e].chain)
      throw std::invalid_argument("is_compaction: edge chains differ");

  return detail::compaction_core(co, cc, mode);
}

// Replaces each node's row (vertical coordinate) by its image under the
// assignment, literally: no renumbering happens here.  The assignment must
// cover every occupied row.  Validity of the result is the caller's concern.
inline Drawing apply_row_assignment(const Drawing& d, const std::map<Coord, Coord>& assignment,
                                    Axis vertical = Axis::Y) {
  Drawing out = d;
  for (auto& n : out.nodes) {
    auto it = assignment.find(n.pos[vertical]);
    if (it == assignment.end())
      throw std::invalid_argument("apply_row_assignment: no image for row " +
                                  std::to_string(n.pos[vertical]));
    n.pos[vertical] = it->second;
  }
  return out;
}

// Moves each node to the prescribed new vertical coordinate.  The assignment
// must mention exactly the drawing's node ids.
inline Drawing apply_feature_assignment(const Drawing& d,
                                        const std::map<std::string, Coord>& assignment,
                                        Axis vertical = Axis::Y) {
  if (assignment.size() != d.nodes.size())
    throw std::invalid_argument("apply_feature_assignment: assignment must cover every node");
  Drawing out = d;
  for (auto& n : out.nodes) {
    auto it = assignment.find(n.id);
    if (it == assignment.end())
      throw std::invalid_argument("apply_feature_assignment: no entry for node '" + n.id + "'");
    n.pos[vertical] = it->second;
  }
  return out;
}

// Moves each node to the prescribed new position (free-mode counterpart of
// apply_feature_assignment).
inline Drawing apply_point_assignment(const Drawing& d,
                                      const std::map<std::string, Point>& assignment) {
  if (assignment.size() != d.nodes.size())
    throw std::invalid_argument("apply_point_assignment: assignment must cover every node");
  Drawing out = d;
  for (auto& n : out.nodes) {
    auto it = assignment.find(n.id);
    if (it == assignment.end())
      throw std::invalid_argument("apply_point_assignment: no entry for node '" + n.id + "'");
    n.pos = it->second;
  }
  return out;
}

// Renumbers the occupied rows to 0..r-1, preserving their order.  Row counts
// and validity are unaffected; useful for canonical presentation of results.
inline Drawing canonical_rows(const Drawing& d, Axis vertical = Axis::Y) {
  std::map<Coord, Coord> renumber;
  for (const auto& n : d.nodes) renumber[n.pos[vertical]] = 0;
  Coord next = 0;
  for (auto& [y, r] : renumber) r = next++;
  return apply_row_assignment(d, renumber, vertical);
}

}  // namespace orthocompact
