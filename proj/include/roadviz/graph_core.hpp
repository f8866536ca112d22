#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "roadviz/digraph.hpp"
#include "roadviz/error.hpp"

namespace roadviz {

struct scc_decomposition {
  // Each component lists its vertices in ascending order. Components appear
  // in reverse topological order of the condensation (sinks first).
  std::vector<std::vector<vertex_id>> components;
  std::vector<std::size_t> component_of;
  // Distinct (from, to) component pairs with from != to.
  std::vector<std::pair<std::size_t, std::size_t>> condensation_edges;
};

// Tarjan's algorithm, iterative, O(V + E). Empty cells contribute no edge;
// parallel edges are harmless.
inline scc_decomposition strongly_connected_components(const labeled_digraph& g) {
  const std::size_t n = g.num_vertices();
  const std::size_t k = g.num_labels();
  constexpr std::size_t unvisited = static_cast<std::size_t>(-1);

  std::vector<std::size_t> index(n, unvisited), low(n, 0), comp(n, unvisited);
  std::vector<vertex_id> stack;
  std::vector<std::pair<vertex_id, label_id>> call;  // (vertex, next label to try)
  std::size_t counter = 0, num_components = 0;

  for (vertex_id root = 0; root < n; ++root) {
    if (index[root] != unvisited) continue;
    call.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    while (!call.empty()) {
      auto& [v, next] = call.back();
      if (next < k) {
        vertex_id w = g.cell(v, next++);
        if (w == labeled_digraph::absent) continue;
        if (index[w] == unvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          call.emplace_back(w, 0);
        } else if (comp[w] == unvisited) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      vertex_id done = v;
      call.pop_back();
      if (low[done] == index[done]) {
        vertex_id w;
        do {
          w = stack.back();
          stack.pop_back();
          comp[w] = num_components;
        } while (w != done);
        ++num_components;
      }
      if (!call.empty()) {
        vertex_id parent = call.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
    }
  }

  scc_decomposition result;
  result.component_of = std::move(comp);
  result.components.resize(num_components);
  for (vertex_id v = 0; v < n; ++v) result.components[result.component_of[v]].push_back(v);

  // Per-source dedup with a "last source" stamp keeps this linear.
  std::vector<std::size_t> stamp(num_components, unvisited);
  for (std::size_t c = 0; c < num_components; ++c) {
    for (vertex_id v : result.components[c]) {
      for (label_id l = 0; l < k; ++l) {
        vertex_id w = g.cell(v, l);
        if (w == labeled_digraph::absent) continue;
        std::size_t d = result.component_of[w];
        if (d == c || stamp[d] == c) continue;
        stamp[d] = c;
        result.condensation_edges.emplace_back(c, d);
      }
    }
  }
  return result;
}

struct bunch_report {
  std::vector<vertex_id> bunch_vertices;          // ascending
  std::vector<vertex_id> bunch_target;            // per vertex, absent if not a bunch
  std::vector<std::size_t> incoming_bunch_count;  // per vertex

  bool is_bunch(vertex_id v) const { return bunch_target[v] != labeled_digraph::absent; }
};

// A vertex is a bunch when it has at least one outgoing edge and all of its
// outgoing edges end at the same vertex.
inline bunch_report bunches(const labeled_digraph& g) {
  const std::size_t n = g.num_vertices();
  bunch_report r;
  r.bunch_target.assign(n, labeled_digraph::absent);
  r.incoming_bunch_count.assign(n, 0);
  for (vertex_id v = 0; v < n; ++v) {
    vertex_id target = labeled_digraph::absent;
    bool single = true;
    for (label_id l = 0; l < g.num_labels(); ++l) {
      vertex_id w = g.cell(v, l);
      if (w == labeled_digraph::absent) continue;
      if (target == labeled_digraph::absent) {
        target = w;
      } else if (w != target) {
        single = false;
        break;
      }
    }
    if (single && target != labeled_digraph::absent) {
      r.bunch_vertices.push_back(v);
      r.bunch_target[v] = target;
      ++r.incoming_bunch_count[target];
    }
  }
  return r;
}

inline bool is_complete(const labeled_digraph& g) {
  for (vertex_id v = 0; v < g.num_vertices(); ++v)
    for (label_id l = 0; l < g.num_labels(); ++l)
      if (g.cell(v, l) == labeled_digraph::absent) return false;
  return true;
}

inline std::vector<std::size_t> out_degree_profile(const labeled_digraph& g) {
  std::vector<std::size_t> degree(g.num_vertices(), 0);
  for (vertex_id v = 0; v < g.num_vertices(); ++v)
    for (label_id l = 0; l < g.num_labels(); ++l) degree[v] += g.cell(v, l) != labeled_digraph::absent;
  return degree;
}

namespace detail {

// Throws unless `component` is exactly one SCC of g. Returns its index.
inline std::size_t require_component(const scc_decomposition& scc, std::span<const vertex_id> component,
                                     std::size_t num_vertices) {
  auto fail = [](const std::string& why) { throw error(errc::component_not_strongly_connected, why); };
  if (component.empty()) fail("empty vertex list");
  for (vertex_id v : component)
    if (v >= num_vertices) fail("vertex " + std::to_string(v) + " is not in the graph");
  std::size_t c = scc.component_of[component.front()];
  std::vector<bool> seen(num_vertices, false);
  for (vertex_id v : component) {
    if (seen[v]) fail("vertex " + std::to_string(v) + " listed twice");
    seen[v] = true;
    if (scc.component_of[v] != c) fail("vertices " + std::to_string(component.front()) + " and " +
                                       std::to_string(v) + " are not mutually reachable");
  }
  if (component.size() != scc.components[c].size()) fail("vertex list is a strict subset of a component");
  return c;
}

// Potential method: BFS levels inside the component; every intra-component
// edge u->v contributes |level(u) + 1 - level(v)|.
inline std::optional<std::size_t> cycle_gcd_of(const labeled_digraph& g, std::span<const std::size_t> component_of,
                                                std::size_t c, std::span<const vertex_id> vertices,
                                                std::vector<std::size_t>& level) {
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  vertex_id start = vertices.front();
  level[start] = 0;
  std::vector<vertex_id> queue{start};
  std::size_t divisor = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    vertex_id u = queue[head];
    for (label_id l = 0; l < g.num_labels(); ++l) {
      vertex_id w = g.cell(u, l);
      if (w == labeled_digraph::absent || component_of[w] != c) continue;
      if (level[w] == unset) {
        level[w] = level[u] + 1;
        queue.push_back(w);
      } else {
        long long diff = static_cast<long long>(level[u]) + 1 - static_cast<long long>(level[w]);
        divisor = std::gcd(divisor, static_cast<std::size_t>(diff < 0 ? -diff : diff));
      }
    }
  }
  for (vertex_id v : queue) level[v] = unset;
  if (divisor == 0) return std::nullopt;
  return divisor;
}

}  // namespace detail

// gcd of the lengths of all cycles inside one SCC; nullopt for a single
// vertex without a self-loop.
inline std::optional<std::size_t> cycle_gcd(const labeled_digraph& g, std::span<const vertex_id> component) {
  scc_decomposition scc = strongly_connected_components(g);
  std::size_t c = detail::require_component(scc, component, g.num_vertices());
  std::vector<std::size_t> level(g.num_vertices(), static_cast<std::size_t>(-1));
  return detail::cycle_gcd_of(g, scc.component_of, c, component, level);
}

// Same, for every component of an existing decomposition.
inline std::vector<std::optional<std::size_t>> cycle_gcds(const labeled_digraph& g, const scc_decomposition& scc) {
  std::vector<std::size_t> level(g.num_vertices(), static_cast<std::size_t>(-1));
  std::vector<std::optional<std::size_t>> out;
  out.reserve(scc.components.size());
  for (std::size_t c = 0; c < scc.components.size(); ++c)
    out.push_back(detail::cycle_gcd_of(g, scc.component_of, c, scc.components[c], level));
  return out;
}

}  // namespace roadviz
