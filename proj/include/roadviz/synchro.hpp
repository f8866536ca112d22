#pragma once

// Synchronization of complete deterministic automata: the action of words on
// state sets, the pair-merging decision procedure, exact shortest reset words
// by subset BFS, the Cerny series, and an exhaustive search for
// synchronizing recolorings of small out-regular graphs.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "roadviz/digraph.hpp"
#include "roadviz/error.hpp"
#include "roadviz/graph_core.hpp"

namespace roadviz {

class state_set {
 public:
  explicit state_set(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

  static state_set full(std::size_t universe) {
    state_set s(universe);
    for (std::size_t v = 0; v < universe; ++v) s.insert(static_cast<vertex_id>(v));
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }
  void insert(vertex_id v) { words_.at(v / 64) |= std::uint64_t{1} << (v % 64); }
  bool contains(vertex_id v) const { return v < universe_ && (words_[v / 64] >> (v % 64) & 1u); }

  std::size_t size() const noexcept {
    std::size_t n = 0;
    for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  std::vector<vertex_id> elements() const {
    std::vector<vertex_id> out;
    for (vertex_id v = 0; v < universe_; ++v)
      if (contains(v)) out.push_back(v);
    return out;
  }

  friend bool operator==(const state_set&, const state_set&) = default;

 private:
  std::size_t universe_;
  std::vector<std::uint64_t> words_;
};

using word = std::vector<label_id>;

inline std::string format_word(std::span<const label_id> w) {
  std::string out;
  bool letters = std::all_of(w.begin(), w.end(), [](label_id l) { return l < 26; });
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (letters) {
      out += static_cast<char>('a' + w[i]);
    } else {
      if (i) out += ',';
      out += std::to_string(w[i]);
    }
  }
  return out;
}

namespace detail {

inline void require_complete(const labeled_digraph& g) {
  for (vertex_id v = 0; v < g.num_vertices(); ++v)
    for (label_id l = 0; l < g.num_labels(); ++l)
      if (g.cell(v, l) == labeled_digraph::absent) {
        throw error(errc::incomplete_automaton,
                    "vertex " + std::to_string(v) + " has no edge labelled " + label_name(l));
      }
}

}  // namespace detail

inline state_set apply_word(const labeled_digraph& g, const state_set& s, std::span<const label_id> w) {
  detail::require_complete(g);
  if (s.universe() != g.num_vertices()) throw error(errc::invalid_argument, "state set has the wrong universe");
  for (label_id l : w)
    if (l >= g.num_labels()) throw error(errc::invalid_argument, "word uses unknown label " + std::to_string(l));

  std::vector<vertex_id> current = s.elements();
  std::vector<bool> mark(g.num_vertices(), false);
  for (label_id l : w) {
    std::vector<vertex_id> next;
    for (vertex_id v : current) {
      vertex_id t = g.cell(v, l);
      if (!mark[t]) {
        mark[t] = true;
        next.push_back(t);
      }
    }
    for (vertex_id t : next) mark[t] = false;
    current = std::move(next);
  }
  state_set out(g.num_vertices());
  for (vertex_id v : current) out.insert(v);
  return out;
}

// An automaton is synchronizing iff every pair of states can be merged by
// some word. Backward BFS over the pair graph from the diagonal marks exactly
// the mergeable pairs; O(|labels| * n^2) time, n^2 bits of memory.
inline bool is_synchronizable(const labeled_digraph& g) {
  detail::require_complete(g);
  const std::size_t n = g.num_vertices();
  const std::size_t k = g.num_labels();
  if (n == 1) return true;

  // Preimage lists per label in CSR form.
  std::vector<std::size_t> start(k * (n + 1), 0);
  std::vector<vertex_id> pre(k * n);
  for (label_id l = 0; l < k; ++l) {
    std::size_t* st = &start[l * (n + 1)];
    for (vertex_id v = 0; v < n; ++v) ++st[g.cell(v, l) + 1];
    for (std::size_t x = 0; x < n; ++x) st[x + 1] += st[x];
    std::vector<std::size_t> fill(st, st + n);
    for (vertex_id v = 0; v < n; ++v) pre[l * n + fill[g.cell(v, l)]++] = v;
  }

  std::vector<bool> merged(n * n, false);
  std::vector<std::pair<vertex_id, vertex_id>> queue;
  queue.reserve(n);
  for (vertex_id x = 0; x < n; ++x) queue.emplace_back(x, x);
  std::size_t marked = 0;
  const std::size_t pairs = n * (n - 1) / 2;

  for (std::size_t head = 0; head < queue.size() && marked < pairs; ++head) {
    auto [x, y] = queue[head];
    for (label_id l = 0; l < k; ++l) {
      const std::size_t* st = &start[l * (n + 1)];
      const vertex_id* base = &pre[l * n];
      for (std::size_t i = st[x]; i < st[x + 1]; ++i) {
        for (std::size_t j = (x == y ? i + 1 : st[y]); j < st[y + 1]; ++j) {
          vertex_id p = base[i], q = base[j];
          if (p == q) continue;
          if (p > q) std::swap(p, q);
          std::size_t idx = static_cast<std::size_t>(p) * n + q;
          if (merged[idx]) continue;
          merged[idx] = true;
          ++marked;
          queue.emplace_back(p, q);
        }
      }
    }
  }
  return marked == pairs;
}

struct sync_report {
  bool synchronizable = false;
  std::optional<std::size_t> shortest_length;
  std::optional<word> witness;
};

// Subset BFS caps at this many states regardless of the caller's limit.
inline constexpr std::size_t subset_bfs_state_cap = 24;

// Exact shortest synchronizing word by BFS over the subset lattice from the
// full set. Labels are expanded in ascending order and every subset keeps
// its first discovery, so the witness is the lexicographically least among
// the shortest words.
inline sync_report shortest_sync_word(const labeled_digraph& g, std::size_t max_states = 20) {
  detail::require_complete(g);
  const std::size_t n = g.num_vertices();
  const std::size_t k = g.num_labels();
  if (n > max_states || n > subset_bfs_state_cap) {
    throw error(errc::too_large, std::to_string(n) + " states exceeds the subset search limit of " +
                                     std::to_string(std::min(max_states, subset_bfs_state_cap)));
  }

  using mask_t = std::uint32_t;
  const mask_t full = static_cast<mask_t>((std::uint64_t{1} << n) - 1);
  // parent == 0 means unvisited; the empty set is never reached.
  std::vector<mask_t> parent(std::size_t{1} << n, 0);
  std::vector<label_id> via(std::size_t{1} << n, 0);
  std::vector<mask_t> queue{full};
  parent[full] = full;

  auto image = [&](mask_t s, label_id l) {
    mask_t out = 0;
    while (s) {
      unsigned v = static_cast<unsigned>(std::countr_zero(s));
      s &= s - 1;
      out |= mask_t{1} << g.cell(v, l);
    }
    return out;
  };

  sync_report report;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    mask_t s = queue[head];
    if (std::popcount(s) == 1) {
      word w;
      for (mask_t cur = s; cur != full; cur = parent[cur]) w.push_back(via[cur]);
      std::reverse(w.begin(), w.end());
      report.synchronizable = true;
      report.shortest_length = w.size();
      report.witness = std::move(w);
      return report;
    }
    for (label_id l = 0; l < k; ++l) {
      mask_t t = image(s, l);
      if (parent[t]) continue;
      parent[t] = s;
      via[t] = l;
      queue.push_back(t);
    }
  }
  return report;
}

// Cerny automaton C_n: a is the cycle i -> i+1 mod n, b sends 0 to 1 and
// fixes everything else. Its shortest reset word has length (n-1)^2.
inline labeled_digraph cerny(std::size_t n) {
  if (n < 2) throw error(errc::invalid_argument, "Cerny automaton needs at least 2 states");
  labeled_digraph g(2, n);
  for (vertex_id i = 0; i < n; ++i) {
    g.set(i, 0, static_cast<vertex_id>((i + 1) % n));
    g.set(i, 1, i == 0 ? vertex_id{1} : i);
  }
  return g;
}

// Tries every assignment of labels to the outgoing edges of every vertex
// (k!^n colorings of the same unlabelled graph) and returns the first one
// that synchronizes. Odometer order: vertex 0 is the fastest digit, each
// digit runs over label permutations in lexicographic order, so the
// identity coloring comes first.
inline std::optional<labeled_digraph> brute_force_recolor(const labeled_digraph& g, std::size_t max_vertices = 12) {
  const std::size_t n = g.num_vertices();
  const std::size_t k = g.num_labels();
  if (!is_complete(g)) throw error(errc::not_out_regular, "every vertex needs exactly one edge per label");
  if (n > max_vertices) {
    throw error(errc::too_large,
                std::to_string(n) + " vertices exceeds the recoloring limit of " + std::to_string(max_vertices));
  }
  if (k > 8) throw error(errc::too_large, "out-degree above 8 is not searchable");

  std::vector<std::vector<label_id>> perms;
  std::vector<label_id> p(k);
  std::iota(p.begin(), p.end(), label_id{0});
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  std::vector<std::size_t> digit(n, 0);
  labeled_digraph candidate = g;
  while (true) {
    if (is_synchronizable(candidate)) return candidate;
    std::size_t v = 0;
    while (v < n && ++digit[v] == perms.size()) {
      digit[v] = 0;
      ++v;
    }
    if (v == n) return std::nullopt;
    for (std::size_t u = 0; u <= v; ++u) {
      const auto& perm = perms[digit[u]];
      for (label_id j = 0; j < k; ++j)
        candidate.set(static_cast<vertex_id>(u), j, g.cell(static_cast<vertex_id>(u), perm[j]));
    }
  }
}

}  // namespace roadviz
