#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <limits>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "roadviz/digraph.hpp"
#include "roadviz/error.hpp"
#include "roadviz/layout.hpp"

namespace roadviz {

struct render_options {
  double canvas_margin = 20;
  // Edge color of label i is palette[i % palette.size()].
  std::vector<std::string> palette{"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                   "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
  double stroke_width = 1.5;
  bool show_legend = true;
};

namespace detail {

// Fixed 3 decimals, '.' separator, no locale, no negative zero.
inline std::string fmt3(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, 3);
  std::string s(buf, ec == std::errc{} ? ptr : buf);
  if (s == "-0.000") s = "0.000";
  return s;
}

struct bbox {
  double min_x = std::numeric_limits<double>::infinity();
  double min_y = std::numeric_limits<double>::infinity();
  double max_x = -std::numeric_limits<double>::infinity();
  double max_y = -std::numeric_limits<double>::infinity();

  void add(point p, double pad = 0) {
    min_x = std::min(min_x, p.x - pad);
    min_y = std::min(min_y, p.y - pad);
    max_x = std::max(max_x, p.x + pad);
    max_y = std::max(max_y, p.y + pad);
  }
};

// Layout space has y up; SVG has y down.
inline point to_svg(point p) { return {p.x, -p.y}; }

// Path for a loop ring: the arc outside the vertex glyph, from one crossing
// of the glyph boundary to the other, so the arrowhead lands on the vertex.
inline std::string loop_path(point vertex, double vertex_r, const ring& r) {
  point c = to_svg(r.center);
  point p = to_svg(vertex);
  double d = distance(p, c);
  std::string rr = fmt3(r.radius);
  if (d <= std::abs(vertex_r - r.radius) || d >= vertex_r + r.radius) {
    point a{c.x + r.radius, c.y}, b{c.x - r.radius, c.y};
    return "M " + fmt3(a.x) + " " + fmt3(a.y) + " A " + rr + " " + rr + " 0 1 1 " + fmt3(b.x) + " " + fmt3(b.y) +
           " A " + rr + " " + rr + " 0 1 1 " + fmt3(a.x) + " " + fmt3(a.y);
  }
  double along = (vertex_r * vertex_r - r.radius * r.radius + d * d) / (2 * d);
  double h = std::sqrt(std::max(0.0, vertex_r * vertex_r - along * along));
  point u = (1 / d) * (c - p);
  point base = p + along * u;
  point perp{-u.y, u.x};
  point from = base + h * perp;
  point to = base - h * perp;
  return "M " + fmt3(from.x) + " " + fmt3(from.y) + " A " + rr + " " + rr + " 0 1 0 " + fmt3(to.x) + " " +
         fmt3(to.y);
}

}  // namespace detail

inline std::string render_svg(const layout& lay, const std::vector<edge_geometry>& edges,
                              const render_options& opts = {}) {
  using detail::fmt3;
  using detail::to_svg;
  if (opts.palette.empty()) throw error(errc::invalid_argument, "palette must not be empty");
  const std::size_t colors = opts.palette.size();
  const double rho = lay.vertex_radius;

  detail::bbox box;
  for (point p : lay.vertex_pos) box.add(to_svg(p), rho);
  for (const edge_geometry& e : edges) {
    if (const auto* s = std::get_if<segment>(&e.shape)) {
      box.add(to_svg(s->start));
      box.add(to_svg(s->end));
    } else {
      const ring& r = std::get<ring>(e.shape);
      box.add(to_svg(r.center), r.radius);
    }
  }

  const double row = 16;
  const std::size_t legend_rows = opts.show_legend ? lay.num_labels : 0;
  const double legend_top = box.max_y + opts.canvas_margin / 2;
  double min_x = box.min_x - opts.canvas_margin;
  double min_y = box.min_y - opts.canvas_margin;
  double width = box.max_x - box.min_x + 2 * opts.canvas_margin;
  double height = box.max_y - box.min_y + 2 * opts.canvas_margin;
  if (legend_rows) {
    width = std::max(width, 80.0);
    height += static_cast<double>(legend_rows) * row;
  }

  std::set<std::size_t> used;
  for (const edge_geometry& e : edges) used.insert(e.label % colors);

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << fmt3(min_x) << ' ' << fmt3(min_y)
      << ' ' << fmt3(width) << ' ' << fmt3(height) << "\" width=\"" << fmt3(width) << "\" height=\"" << fmt3(height)
      << "\">\n";

  out << "<defs>\n";
  for (std::size_t c : used) {
    out << "<marker id=\"arrow-" << c << "\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"6\""
        << " markerHeight=\"6\" orient=\"auto\"><path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"" << opts.palette[c]
        << "\"/></marker>\n";
  }
  out << "</defs>\n";

  out << "<g class=\"edges\" fill=\"none\" stroke-width=\"" << fmt3(opts.stroke_width) << "\">\n";
  for (const edge_geometry& e : edges) {
    std::size_t c = e.label % colors;
    const std::string& color = opts.palette[c];
    if (const auto* s = std::get_if<segment>(&e.shape)) {
      point a = to_svg(s->start), b = to_svg(s->end);
      out << "<line class=\"edge\" x1=\"" << fmt3(a.x) << "\" y1=\"" << fmt3(a.y) << "\" x2=\"" << fmt3(b.x)
          << "\" y2=\"" << fmt3(b.y) << "\" stroke=\"" << color << "\" marker-end=\"url(#arrow-" << c << ")\"/>\n";
    } else {
      out << "<path class=\"loop\" d=\""
          << detail::loop_path(lay.vertex_pos[e.source], rho, std::get<ring>(e.shape)) << "\" stroke=\"" << color
          << "\" marker-end=\"url(#arrow-" << c << ")\"/>\n";
    }
  }
  out << "</g>\n";

  out << "<g class=\"vertices\" font-family=\"sans-serif\" font-size=\"" << fmt3(rho) << "\" text-anchor=\"middle\">\n";
  for (vertex_id v = 0; v < lay.vertex_pos.size(); ++v) {
    point p = to_svg(lay.vertex_pos[v]);
    out << "<circle class=\"vertex\" cx=\"" << fmt3(p.x) << "\" cy=\"" << fmt3(p.y) << "\" r=\"" << fmt3(rho)
        << "\" fill=\"#f4f4f4\" stroke=\"#000000\"/>\n"
        << "<text class=\"vertex-id\" x=\"" << fmt3(p.x) << "\" y=\"" << fmt3(p.y)
        << "\" dominant-baseline=\"central\">" << v << "</text>\n";
  }
  out << "</g>\n";

  if (legend_rows) {
    out << "<g class=\"legend\" font-family=\"sans-serif\" font-size=\"10.000\">\n";
    double x = box.min_x;
    for (std::size_t l = 0; l < legend_rows; ++l) {
      double y = legend_top + static_cast<double>(l) * row;
      out << "<g class=\"legend-entry\"><rect class=\"legend-swatch\" x=\"" << fmt3(x) << "\" y=\"" << fmt3(y + 5)
          << "\" width=\"24.000\" height=\"4.000\" fill=\"" << opts.palette[l % colors] << "\"/><text x=\""
          << fmt3(x + 30) << "\" y=\"" << fmt3(y + 7) << "\" dominant-baseline=\"central\">"
          << label_name(static_cast<label_id>(l)) << "</text></g>\n";
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

inline std::string render_svg(const drawing& d, const render_options& opts = {}) {
  return render_svg(d.layout, d.edges, opts);
}

}  // namespace roadviz
