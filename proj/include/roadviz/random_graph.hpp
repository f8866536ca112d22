#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <random>

#include "roadviz/digraph.hpp"
#include "roadviz/layout.hpp"

namespace roadviz {

// Every cell filled with a uniform random target: out-degree exactly
// `num_labels`, so loops and parallel edges occur naturally.
inline labeled_digraph random_out_regular(std::size_t num_vertices, std::size_t num_labels, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<vertex_id> pick(0, static_cast<vertex_id>(num_vertices - 1));
  labeled_digraph g(num_labels, num_vertices);
  for (vertex_id v = 0; v < num_vertices; ++v)
    for (label_id l = 0; l < num_labels; ++l) g.set(v, l, pick(rng));
  return g;
}

struct bench_sample {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  double seconds = 0;  // best of the repeats

  double ns_per_element() const { return seconds * 1e9 / static_cast<double>(vertices + edges); }
};

inline bench_sample bench_layout(std::size_t num_vertices, std::uint64_t seed, int repeats = 3) {
  labeled_digraph g = random_out_regular(num_vertices, 2, seed);
  bench_sample sample{num_vertices, g.edge_count(), 0};
  for (int i = 0; i < repeats; ++i) {
    auto start = std::chrono::steady_clock::now();
    drawing d = find_layout(g);
    sample.edges = d.edges.size();
    auto stop = std::chrono::steady_clock::now();
    double s = std::chrono::duration<double>(stop - start).count();
    if (i == 0 || s < sample.seconds) sample.seconds = s;
  }
  return sample;
}

}  // namespace roadviz
