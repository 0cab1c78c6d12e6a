#pragma once

// SVG rendering for human inspection of drawings.
//
// The renderer is deliberately boring: fixed 20px-per-unit scale, vertices as
// filled circles, bends as small squares, edge chains as polylines.  Output is
// fully deterministic (no floats, no timestamps), so rendering the same
// drawing twice yields byte-identical files and goldens can be diffed.
//
// 3D drawings become a row of panels: one 2D cross-section per layer
// (ascending y), followed by a top-down projection onto the x/z plane in
// which y-parallel segments collapse to points.

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "orthocompact/drawing.hpp"

namespace orthocompact {

namespace detail {

constexpr Coord kSvgScale = 20;   // pixels per grid unit
constexpr Coord kSvgMargin = 30;  // pixels around each panel

struct SvgPanel {
  std::string caption;
  // Node positions in panel-local pixel coordinates, paired with node kind/id.
  struct Mark {
    Coord px, py;
    NodeKind kind;
    std::string id;
  };
  std::vector<Mark> marks;
  std::vector<std::vector<std::pair<Coord, Coord>>> polylines;
  Coord width = 0, height = 0;
};

// Projects one drawing (or one layer of it) onto two axes; `flip_second`
// mirrors the second axis so larger coordinates appear higher on screen.
inline SvgPanel svg_panel(const Drawing& d, const std::vector<std::size_t>& nodes,
                          Axis ax_a, Axis ax_b, bool flip_second,
                          std::string caption) {
  SvgPanel panel;
  panel.caption = std::move(caption);
  if (nodes.empty()) return panel;

  Coord min_a = d.nodes[nodes.front()].pos[ax_a], max_a = min_a;
  Coord min_b = d.nodes[nodes.front()].pos[ax_b], max_b = min_b;
  for (std::size_t i : nodes) {
    const Point& p = d.nodes[i].pos;
    min_a = std::min(min_a, p[ax_a]);
    max_a = std::max(max_a, p[ax_a]);
    min_b = std::min(min_b, p[ax_b]);
    max_b = std::max(max_b, p[ax_b]);
  }
  auto to_px = [&](const Point& p) -> std::pair<Coord, Coord> {
    Coord a = (p[ax_a] - min_a) * kSvgScale + kSvgMargin;
    Coord b = flip_second ? (max_b - p[ax_b]) * kSvgScale + kSvgMargin
                          : (p[ax_b] - min_b) * kSvgScale + kSvgMargin;
    return {a, b};
  };

  std::vector<char> in_panel(d.nodes.size(), 0);
  for (std::size_t i : nodes) in_panel[i] = 1;
  auto index = d.node_index();

  for (const Edge& e : d.edges) {
    std::vector<std::pair<Coord, Coord>> line;
    for (const std::string& id : e.chain) {
      std::size_t i = index.at(id);
      if (!in_panel[i]) {
        line.clear();
        break;
      }
      auto px = to_px(d.nodes[i].pos);
      if (line.empty() || line.back() != px) line.push_back(px);
    }
    if (line.size() >= 2) panel.polylines.push_back(std::move(line));
  }
  for (std::size_t i : nodes) {
    auto [px, py] = to_px(d.nodes[i].pos);
    panel.marks.push_back({px, py, d.nodes[i].kind, d.nodes[i].id});
  }
  panel.width = (max_a - min_a) * kSvgScale + 2 * kSvgMargin;
  panel.height = (max_b - min_b) * kSvgScale + 2 * kSvgMargin;
  return panel;
}

inline void svg_emit_panel(std::ostream& out, const SvgPanel& panel, Coord x_off,
                           Coord caption_row) {
  out << "  <g transform=\"translate(" << x_off << ",0)\">\n";
  for (const auto& line : panel.polylines) {
    out << "    <polyline fill=\"none\" stroke=\"#555555\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i) out << ' ';
      out << line[i].first << ',' << line[i].second;
    }
    out << "\"/>\n";
  }
  for (const auto& m : panel.marks) {
    if (m.kind == NodeKind::Vertex) {
      out << "    <circle cx=\"" << m.px << "\" cy=\"" << m.py
          << "\" r=\"4\" fill=\"#202020\"><title>" << m.id << "</title></circle>\n";
    } else {
      out << "    <rect x=\"" << (m.px - 3) << "\" y=\"" << (m.py - 3)
          << "\" width=\"6\" height=\"6\" fill=\"#b05020\"><title>" << m.id
          << "</title></rect>\n";
    }
  }
  if (!panel.caption.empty())
    out << "    <text x=\"" << kSvgMargin << "\" y=\"" << (caption_row - 8)
        << "\" font-family=\"monospace\" font-size=\"12\" fill=\"#202020\">"
        << panel.caption << "</text>\n";
  out << "  </g>\n";
}

}  // namespace detail

// Renders a drawing to an SVG document string.  Requires a valid drawing.
inline std::string render_svg(const Drawing& d) {
  ValidityReport report = validate(d);
  if (!report.ok())
    throw std::invalid_argument("render_svg: invalid drawing: " + report.to_string());

  std::vector<detail::SvgPanel> panels;
  if (d.dimension == 2) {
    std::vector<std::size_t> all(d.nodes.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    panels.push_back(detail::svg_panel(d, all, Axis::X, Axis::Y, true, ""));
  } else {
    // One cross-section per occupied layer, bottom layer first.
    std::vector<Coord> layers;
    for (const Node& n : d.nodes) layers.push_back(n.pos.y);
    std::sort(layers.begin(), layers.end());
    layers.erase(std::unique(layers.begin(), layers.end()), layers.end());
    for (Coord y : layers) {
      std::vector<std::size_t> members;
      for (std::size_t i = 0; i < d.nodes.size(); ++i)
        if (d.nodes[i].pos.y == y) members.push_back(i);
      panels.push_back(detail::svg_panel(d, members, Axis::X, Axis::Z, true,
                                         "layer y=" + std::to_string(y)));
    }
    std::vector<std::size_t> all(d.nodes.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    panels.push_back(detail::svg_panel(d, all, Axis::X, Axis::Z, true, "top-down"));
  }

  Coord total_w = 0, total_h = 0;
  for (const auto& p : panels) {
    total_w += p.width;
    total_h = std::max(total_h, p.height);
  }
  bool captions = d.dimension == 3;
  if (captions) total_h += detail::kSvgMargin;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << total_w
      << "\" height=\"" << total_h << "\" viewBox=\"0 0 " << total_w << ' '
      << total_h << "\">\n";
  out << "  <rect width=\"" << total_w << "\" height=\"" << total_h
      << "\" fill=\"#ffffff\"/>\n";
  Coord x_off = 0;
  for (const auto& p : panels) {
    detail::svg_emit_panel(out, p, x_off, total_h);
    x_off += p.width;
  }
  out << "</svg>\n";
  return out.str();
}

inline void render_svg(const Drawing& d, std::ostream& out) { out << render_svg(d); }

}  // namespace orthocompact
