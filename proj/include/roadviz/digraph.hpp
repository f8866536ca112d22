#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "roadviz/error.hpp"

namespace roadviz {

using vertex_id = std::uint32_t;
using label_id = std::uint32_t;

// Positional label name: a, b, ..., z, then L26, L27, ...
inline std::string label_name(label_id label) {
  if (label < 26) return std::string(1, static_cast<char>('a' + label));
  return "L" + std::to_string(label);
}

// A directed graph with labelled edges, stored as a vertices x labels
// successor table (the Cayley table). A cell is either a vertex id or empty.
// At most one successor per (vertex, label), so the graph is deterministic
// by construction; empty cells make it a partial automaton.
class labeled_digraph {
 public:
  static constexpr vertex_id absent = std::numeric_limits<vertex_id>::max();

  labeled_digraph(std::size_t num_labels, std::size_t num_vertices)
      : labels_(num_labels), vertices_(num_vertices), table_(num_labels * num_vertices, absent) {
    if (num_labels == 0) throw error(errc::invalid_argument, "alphabet must have at least one label");
    if (num_vertices == 0) throw error(errc::invalid_argument, "graph must have at least one vertex");
    if (num_vertices >= absent) throw error(errc::too_large, "vertex count exceeds id range");
  }

  std::size_t num_labels() const noexcept { return labels_; }
  std::size_t num_vertices() const noexcept { return vertices_; }

  std::optional<vertex_id> successor(vertex_id v, label_id l) const {
    vertex_id t = table_[index(v, l)];
    if (t == absent) return std::nullopt;
    return t;
  }

  // Raw cell, `absent` when empty. Unchecked hot-path accessor.
  vertex_id cell(vertex_id v, label_id l) const noexcept { return table_[v * labels_ + l]; }

  void set(vertex_id v, label_id l, std::optional<vertex_id> target) {
    std::size_t i = index(v, l);
    if (target && *target >= vertices_) {
      throw error(errc::vertex_out_of_range, "target " + std::to_string(*target) + " for vertex " +
                                                 std::to_string(v) + " label " + label_name(l) +
                                                 " is not below " + std::to_string(vertices_));
    }
    table_[i] = target.value_or(absent);
  }

  std::size_t edge_count() const noexcept {
    std::size_t n = 0;
    for (vertex_id t : table_) n += (t != absent);
    return n;
  }

  friend bool operator==(const labeled_digraph&, const labeled_digraph&) = default;

 private:
  std::size_t index(vertex_id v, label_id l) const {
    if (v >= vertices_) throw error(errc::vertex_out_of_range, "vertex " + std::to_string(v));
    if (l >= labels_) throw error(errc::invalid_argument, "label " + std::to_string(l));
    return static_cast<std::size_t>(v) * labels_ + l;
  }

  std::size_t labels_;
  std::size_t vertices_;
  std::vector<vertex_id> table_;
};

}  // namespace roadviz
