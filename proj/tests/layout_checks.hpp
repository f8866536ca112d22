#pragma once

// Geometric invariants of a drawing, shared by the unit and acceptance
// suites. Each check returns an empty string on success, else a description
// of the first violation.

#include <cmath>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "roadviz/digraph.hpp"
#include "roadviz/graph_core.hpp"
#include "roadviz/layout.hpp"

namespace checks {

using namespace roadviz;

inline constexpr double kTol = 1e-9;

inline std::string on_circles(const drawing& d) {
  const layout& lay = d.layout;
  std::ostringstream why;
  if (lay.sccs.size() == 1) {
    if (lay.big_radius != 0 || distance(lay.sccs[0].center, lay.big_center) > kTol) return "single SCC off center";
  }
  for (std::size_t i = 0; i < lay.sccs.size(); ++i) {
    const scc_circle& c = lay.sccs[i];
    double off = std::abs(distance(c.center, lay.big_center) - lay.big_radius);
    if (off > kTol) {
      why << "SCC " << i << " center off the big circle by " << off;
      return why.str();
    }
    if (c.order.size() == 1 && c.radius != 0) return "singleton SCC with nonzero radius";
    for (vertex_id v : c.order) {
      double dv = std::abs(distance(lay.vertex_pos[v], c.center) - c.radius);
      if (dv > kTol) {
        why << "vertex " << v << " off its SCC circle by " << dv;
        return why.str();
      }
      if (lay.vertex_scc[v] != i) return "vertex_scc inconsistent";
    }
    // Equal angular spacing: consecutive chords all equal.
    if (c.order.size() >= 2) {
      double chord = 2 * c.radius * std::sin(std::numbers::pi / static_cast<double>(c.order.size()));
      for (std::size_t s = 0; s < c.order.size(); ++s) {
        point a = lay.vertex_pos[c.order[s]];
        point b = lay.vertex_pos[c.order[(s + 1) % c.order.size()]];
        if (std::abs(distance(a, b) - chord) > 1e-7) return "unequal spacing on an SCC circle";
      }
    }
  }
  return {};
}

inline std::string partition_and_order(const labeled_digraph& g, const drawing& d) {
  const layout& lay = d.layout;
  std::vector<int> seen(g.num_vertices(), 0);
  for (const scc_circle& c : lay.sccs)
    for (vertex_id v : c.order) ++seen[v];
  for (int s : seen)
    if (s != 1) return "SCC orders do not partition the vertices";

  scc_decomposition scc = strongly_connected_components(g);
  if (scc.components.size() != lay.sccs.size()) return "SCC count mismatch";
  for (const scc_circle& c : lay.sccs)
    for (vertex_id v : c.order)
      if (scc.component_of[v] != scc.component_of[c.order.front()]) return "SCC circle mixes components";

  // Non-increasing size walking counterclockwise from the first SCC (90 deg).
  const double two_pi = 2 * std::numbers::pi;
  for (std::size_t i = 0; i + 1 < lay.sccs.size(); ++i) {
    if (lay.sccs[i].order.size() < lay.sccs[i + 1].order.size()) return "SCC sizes increase along the big circle";
    double a = lay.sccs[i].angle - std::numbers::pi / 2, b = lay.sccs[i + 1].angle - std::numbers::pi / 2;
    if (!(0 <= a && a < b && b < two_pi)) return "SCC angles are not counterclockwise from 90 degrees";
  }
  return {};
}

inline std::string cycle_consecutive(const labeled_digraph& g, const drawing& d) {
  auto has_edge = [&](vertex_id u, vertex_id v) {
    for (label_id l = 0; l < g.num_labels(); ++l)
      if (g.cell(u, l) == v) return true;
    return false;
  };
  for (const scc_circle& c : d.layout.sccs) {
    std::size_t len = c.cycle_length;
    if (c.order.size() >= 2 && len < 2) return "multi-vertex SCC without a cycle";
    for (std::size_t i = 0; i < len; ++i)
      if (!has_edge(c.order[i], c.order[(i + 1) % len])) return "cycle slots are not a directed cycle";
  }
  return {};
}

inline std::string edges_ok(const labeled_digraph& g, const drawing& d) {
  const layout& lay = d.layout;
  if (d.edges.size() != g.edge_count()) return "edge count mismatch";
  std::map<std::pair<vertex_id, vertex_id>, std::vector<const edge_geometry*>> bundles;
  std::map<vertex_id, std::vector<point>> rings;
  for (const edge_geometry& e : d.edges) {
    if (g.cell(e.source, e.label) != e.target) return "edge does not match the table";
    if (e.is_loop()) {
      if (e.source != e.target) return "loop between distinct vertices";
      rings[e.source].push_back(std::get<ring>(e.shape).center);
      continue;
    }
    const segment& s = std::get<segment>(e.shape);
    for (point p : {s.start, s.end})
      for (vertex_id v : {e.source, e.target})
        if (distance(p, lay.vertex_pos[v]) < lay.vertex_radius - kTol) return "segment endpoint inside a glyph";
    bundles[{e.source, e.target}].push_back(&e);
  }
  for (const auto& [vertex, centers] : rings)
    for (std::size_t i = 0; i < centers.size(); ++i)
      for (std::size_t j = i + 1; j < centers.size(); ++j)
        if (distance(centers[i], centers[j]) < 1e-6) return "coinciding loop rings";
  for (const auto& [pair, edges] : bundles) {
    double sum = 0;
    const segment& first = std::get<segment>(edges.front()->shape);
    point dir0 = first.end - first.start;
    for (const edge_geometry* e : edges) {
      sum += e->stripe_offset;
      const segment& s = std::get<segment>(e->shape);
      point dir = s.end - s.start;
      if (distance(dir, dir0) > 1e-9) return "bundle edges not parallel";
    }
    if (std::abs(sum) > 1e-9) return "bundle offsets not symmetric";
    if (edges.size() == 1 && edges.front()->stripe_offset != 0) return "lone edge with a stripe offset";
  }
  return {};
}

inline std::string all(const labeled_digraph& g, const drawing& d) {
  for (std::string s : {on_circles(d), partition_and_order(g, d), cycle_consecutive(g, d), edges_ok(g, d)})
    if (!s.empty()) return s;
  return {};
}

}  // namespace checks
