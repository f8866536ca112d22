#pragma once

// Two-level cyclic layout. Strongly connected components are placed on a
// big circle, largest first; the vertices of each component sit on their own
// circle with a long cycle laid out on consecutive slots. Edges are straight
// segments, parallel edges are separated into stripes and self-loops become
// small rings around their vertex. Everything is O(V + E).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "roadviz/digraph.hpp"
#include "roadviz/error.hpp"
#include "roadviz/graph_core.hpp"

namespace roadviz {

struct point {
  double x = 0;
  double y = 0;

  friend point operator+(point a, point b) { return {a.x + b.x, a.y + b.y}; }
  friend point operator-(point a, point b) { return {a.x - b.x, a.y - b.y}; }
  friend point operator*(double s, point a) { return {s * a.x, s * a.y}; }
  friend bool operator==(point, point) = default;
};

inline double distance(point a, point b) { return std::hypot(a.x - b.x, a.y - b.y); }
inline point polar(double radius, double angle) { return {radius * std::cos(angle), radius * std::sin(angle)}; }

// Canvas units are abstract; y grows upwards. The renderer flips and scales.
struct layout_options {
  double vertex_radius = 8;
  double spacing = 60;  // target distance between neighbours on an SCC circle
  double scc_gap = 40;
  double stripe = 6;    // distance between parallel edges
  std::optional<double> loop_radius;  // defaults to vertex_radius
  double min_big_radius = 0;

  double ring_radius() const { return loop_radius.value_or(vertex_radius); }

  void validate() const {
    auto require = [](bool ok, const char* what) {
      if (!ok) throw error(errc::invalid_argument, what);
    };
    require(std::isfinite(vertex_radius) && vertex_radius > 0, "vertex radius must be positive");
    require(std::isfinite(spacing) && spacing > 0, "spacing must be positive");
    require(std::isfinite(scc_gap) && scc_gap > 0, "SCC gap must be positive");
    require(std::isfinite(stripe) && stripe >= 0, "stripe spacing must be non-negative");
    require(std::isfinite(ring_radius()) && ring_radius() > 0, "loop radius must be positive");
    require(std::isfinite(min_big_radius) && min_big_radius >= 0, "minimum big radius must be non-negative");
  }
};

struct scc_circle {
  point center;
  double radius = 0;
  double angle = 0;  // position of the center on the big circle, radians
  // Circular order. The first `cycle_length` vertices form a directed cycle
  // in this order (0 for a single vertex without a self-loop).
  std::vector<vertex_id> order;
  std::size_t cycle_length = 0;
};

struct layout {
  point big_center;
  double big_radius = 0;
  std::vector<scc_circle> sccs;         // non-increasing size, counterclockwise from 90 degrees
  std::vector<point> vertex_pos;
  std::vector<std::size_t> vertex_scc;  // index into sccs
  double vertex_radius = 0;
  std::size_t num_labels = 0;
};

struct segment {
  point start;  // both ends clipped to the vertex glyphs
  point end;
};

struct ring {
  point center;
  double radius = 0;
};

struct edge_geometry {
  vertex_id source = 0;
  vertex_id target = 0;
  label_id label = 0;
  std::variant<segment, ring> shape;
  double stripe_offset = 0;  // signed, perpendicular to the edge direction
  double length = 0;         // center distance, or ring circumference

  bool is_loop() const { return std::holds_alternative<ring>(shape); }
};

struct drawing {
  struct layout layout;
  std::vector<edge_geometry> edges;
};

namespace detail {

struct ordered_component {
  std::vector<vertex_id> order;
  std::size_t cycle_length = 0;
};

// Scratch arrays sized to the whole graph, reset after each component so the
// total work over all components stays linear.
struct order_scratch {
  explicit order_scratch(std::size_t n) : depth(n, unset), parent(n, 0), on_stack(n, false), placed(n, false) {}
  static constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> depth;
  std::vector<vertex_id> parent;
  std::vector<bool> on_stack;
  std::vector<bool> placed;
};

// DFS from the smallest vertex; the back edge u->w spanning the most tree
// levels closes the chosen cycle. The cycle is rotated to start at its
// smallest vertex, the rest of the component follows in BFS order.
inline ordered_component order_component(const labeled_digraph& g, std::span<const std::size_t> component_of,
                                         std::size_t c, std::span<const vertex_id> vertices, order_scratch& s) {
  ordered_component out;
  const std::size_t k = g.num_labels();
  auto inside = [&](vertex_id w) { return w != labeled_digraph::absent && component_of[w] == c; };

  if (vertices.size() == 1) {
    vertex_id v = vertices.front();
    out.order = {v};
    for (label_id l = 0; l < k; ++l)
      if (g.cell(v, l) == v) out.cycle_length = 1;
    return out;
  }

  vertex_id root = *std::min_element(vertices.begin(), vertices.end());
  std::vector<std::pair<vertex_id, label_id>> call{{root, 0}};
  std::vector<vertex_id> visited{root};
  s.depth[root] = 0;
  s.on_stack[root] = true;
  long long best_span = -1;
  vertex_id best_from = root, best_to = root;

  while (!call.empty()) {
    auto& [v, next] = call.back();
    if (next == k) {
      s.on_stack[v] = false;
      call.pop_back();
      continue;
    }
    vertex_id w = g.cell(v, next++);
    if (!inside(w)) continue;
    if (s.depth[w] == order_scratch::unset) {
      s.depth[w] = s.depth[v] + 1;
      s.parent[w] = v;
      s.on_stack[w] = true;
      visited.push_back(w);
      call.emplace_back(w, 0);
    } else if (s.on_stack[w]) {
      long long span = static_cast<long long>(s.depth[v]) - static_cast<long long>(s.depth[w]);
      if (span > best_span) {
        best_span = span;
        best_from = v;
        best_to = w;
      }
    }
  }

  std::vector<vertex_id> cycle;
  for (vertex_id u = best_from;; u = s.parent[u]) {
    cycle.push_back(u);
    if (u == best_to) break;
  }
  std::reverse(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());

  out.cycle_length = cycle.size();
  out.order = std::move(cycle);
  out.order.reserve(vertices.size());
  for (vertex_id v : out.order) s.placed[v] = true;
  for (std::size_t head = 0; head < out.order.size() && out.order.size() < vertices.size(); ++head) {
    vertex_id u = out.order[head];
    for (label_id l = 0; l < k; ++l) {
      vertex_id w = g.cell(u, l);
      if (!inside(w) || s.placed[w]) continue;
      s.placed[w] = true;
      out.order.push_back(w);
    }
  }

  for (vertex_id v : visited) {
    s.depth[v] = order_scratch::unset;
    s.on_stack[v] = false;
  }
  for (vertex_id v : out.order) s.placed[v] = false;
  return out;
}

// Angle of the direction a -> b, or `fallback` when the points coincide.
inline double direction_angle(point a, point b, double fallback) {
  point d = b - a;
  if (std::hypot(d.x, d.y) < 1e-12) return fallback;
  return std::atan2(d.y, d.x);
}

}  // namespace detail

// Circular order for one SCC: a long cycle on consecutive slots, then the
// remaining vertices in BFS order from the cycle.
inline std::vector<vertex_id> order_scc_vertices(const labeled_digraph& g, std::span<const vertex_id> component) {
  scc_decomposition scc = strongly_connected_components(g);
  std::size_t c = detail::require_component(scc, component, g.num_vertices());
  detail::order_scratch scratch(g.num_vertices());
  return detail::order_component(g, scc.component_of, c, component, scratch).order;
}

inline drawing find_layout(const labeled_digraph& g, const layout_options& opts = {}) {
  opts.validate();
  constexpr double two_pi = 2 * std::numbers::pi;
  constexpr double up = std::numbers::pi / 2;
  const std::size_t n = g.num_vertices();
  const std::size_t k = g.num_labels();

  scc_decomposition scc = strongly_connected_components(g);
  const std::size_t m = scc.components.size();

  // Order components by size, largest first, ties by smallest vertex. The
  // first-seen scan gives min-vertex order; a stable bucket pass by size
  // keeps it linear.
  std::vector<std::size_t> by_min_vertex;
  {
    std::vector<bool> seen(m, false);
    for (vertex_id v = 0; v < n; ++v) {
      std::size_t c = scc.component_of[v];
      if (!seen[c]) {
        seen[c] = true;
        by_min_vertex.push_back(c);
      }
    }
  }
  std::vector<std::vector<std::size_t>> buckets(n + 1);
  for (std::size_t c : by_min_vertex) buckets[scc.components[c].size()].push_back(c);
  std::vector<std::size_t> ranked;
  ranked.reserve(m);
  for (std::size_t size = n; size >= 1; --size)
    for (std::size_t c : buckets[size]) ranked.push_back(c);

  drawing result;
  layout& lay = result.layout;
  lay.vertex_radius = opts.vertex_radius;
  lay.num_labels = k;
  lay.vertex_pos.resize(n);
  lay.vertex_scc.resize(n);
  lay.sccs.resize(m);

  // Arc of the big circle per component: its circle diameter plus a gap.
  double total_arc = 0;
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t size = scc.components[ranked[i]].size();
    lay.sccs[i].radius = size == 1 ? 0.0 : static_cast<double>(size) * opts.spacing / two_pi;
    total_arc += 2 * lay.sccs[i].radius + opts.scc_gap;
  }

  if (m == 1) {
    lay.big_radius = 0;
    lay.sccs[0].angle = up;
  } else {
    double first_half = (2 * lay.sccs[0].radius + opts.scc_gap) / 2;
    double cumulative = 0;
    for (std::size_t i = 0; i < m; ++i) {
      double arc = 2 * lay.sccs[i].radius + opts.scc_gap;
      lay.sccs[i].angle = up + two_pi * (cumulative + arc / 2 - first_half) / total_arc;
      cumulative += arc;
    }
    // The arc sum alone lets big neighbours overlap; also require every
    // adjacent pair of centers to be r_i + r_j + gap apart.
    double radius = std::max(opts.min_big_radius, total_arc / two_pi);
    for (std::size_t i = 0; i < m; ++i) {
      const scc_circle& a = lay.sccs[i];
      const scc_circle& b = lay.sccs[(i + 1) % m];
      double sep = std::fmod(b.angle - a.angle + two_pi, two_pi);
      sep = std::min(sep, two_pi - sep);
      double half_chord = std::sin(sep / 2);
      if (half_chord > 0) radius = std::max(radius, (a.radius + b.radius + opts.scc_gap) / (2 * half_chord));
    }
    lay.big_radius = radius;
  }

  detail::order_scratch scratch(n);
  for (std::size_t i = 0; i < m; ++i) {
    scc_circle& circle = lay.sccs[i];
    std::size_t c = ranked[i];
    circle.center = lay.big_center + polar(lay.big_radius, circle.angle);
    auto ordered = detail::order_component(g, scc.component_of, c, scc.components[c], scratch);
    circle.order = std::move(ordered.order);
    circle.cycle_length = ordered.cycle_length;
    const double base = m == 1 ? up : circle.angle;
    const double step = two_pi / static_cast<double>(circle.order.size());
    for (std::size_t slot = 0; slot < circle.order.size(); ++slot) {
      vertex_id v = circle.order[slot];
      lay.vertex_pos[v] = circle.center + polar(circle.radius, base + step * static_cast<double>(slot));
      lay.vertex_scc[v] = i;
    }
  }

  // Edges, grouped per source vertex: loops become rings spread evenly around
  // the vertex, edges sharing a target form a symmetric stripe.
  const double rho = opts.vertex_radius;
  const double ring_r = opts.ring_radius();
  std::vector<std::size_t> bundle_size(n, 0), bundle_next(n, 0);
  result.edges.reserve(g.edge_count());
  for (vertex_id v = 0; v < n; ++v) {
    std::size_t loops = 0;
    for (label_id l = 0; l < k; ++l) {
      vertex_id w = g.cell(v, l);
      if (w == labeled_digraph::absent) continue;
      if (w == v) {
        ++loops;
      } else {
        ++bundle_size[w];
      }
    }

    const point pos = lay.vertex_pos[v];
    const scc_circle& own = lay.sccs[lay.vertex_scc[v]];
    const double outward =
        detail::direction_angle(own.center, pos, m == 1 ? up : detail::direction_angle(lay.big_center, own.center, up));
    std::size_t loop_index = 0;

    for (label_id l = 0; l < k; ++l) {
      vertex_id w = g.cell(v, l);
      if (w == labeled_digraph::absent) continue;
      edge_geometry e;
      e.source = v;
      e.target = w;
      e.label = l;
      if (w == v) {
        double angle = outward + two_pi * static_cast<double>(loop_index++) / static_cast<double>(loops);
        e.shape = ring{pos + polar(rho, angle), ring_r};
        e.length = two_pi * ring_r;
      } else {
        const point to = lay.vertex_pos[w];
        const double m_size = static_cast<double>(bundle_size[w]);
        e.stripe_offset = (static_cast<double>(bundle_next[w]++) - (m_size - 1) / 2) * opts.stripe;
        double len = distance(pos, to);
        point dir = len < 1e-12 ? point{1, 0} : (1 / len) * (to - pos);
        point normal{-dir.y, dir.x};
        point shift = e.stripe_offset * normal;
        e.shape = segment{pos + shift + rho * dir, to + shift - rho * dir};
        e.length = len;
      }
      result.edges.push_back(e);
    }

    for (label_id l = 0; l < k; ++l) {
      vertex_id w = g.cell(v, l);
      if (w != labeled_digraph::absent) bundle_size[w] = bundle_next[w] = 0;
    }
  }
  return result;
}

}  // namespace roadviz
