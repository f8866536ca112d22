#pragma once

// Command-line front end. `run` takes the argument list without the program
// name and explicit streams so tests can drive it in-process.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "roadviz/cayley_io.hpp"
#include "roadviz/error.hpp"
#include "roadviz/graph_core.hpp"
#include "roadviz/layout.hpp"
#include "roadviz/layout_json.hpp"
#include "roadviz/random_graph.hpp"
#include "roadviz/svg_render.hpp"
#include "roadviz/synchro.hpp"

namespace roadviz::cli {

// Letters a-z map to labels 0-25; anything containing a digit or a comma is
// read as comma-separated label indices.
inline word parse_word(const std::string& text) {
  word w;
  if (text.empty()) return w;
  bool numeric = std::any_of(text.begin(), text.end(), [](char c) { return c == ',' || std::isdigit(static_cast<unsigned char>(c)); });
  if (!numeric) {
    for (char c : text) {
      if (c < 'a' || c > 'z') throw error(errc::invalid_argument, std::string("bad letter '") + c + "' in word");
      w.push_back(static_cast<label_id>(c - 'a'));
    }
    return w;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    long long value = 0;
    if (!roadviz::detail::parse_integer(item, value) || value < 0)
      throw error(errc::invalid_argument, "bad label index '" + item + "' in word");
    w.push_back(static_cast<label_id>(value));
  }
  return w;
}

inline std::string format_set(const state_set& s) {
  std::string out = "{";
  bool first = true;
  for (vertex_id v : s.elements()) {
    if (!first) out += ' ';
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

// Line-oriented analysis report, format version 1.
inline void write_analysis(std::ostream& out, const labeled_digraph& g) {
  scc_decomposition scc = strongly_connected_components(g);
  auto gcds = cycle_gcds(g, scc);

  // Report components by smallest vertex.
  std::vector<std::size_t> order(scc.components.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return scc.components[a].front() < scc.components[b].front(); });
  std::vector<std::size_t> rank(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;

  out << "format roadviz-analyze 1\n";
  out << "vertices " << g.num_vertices() << '\n';
  out << "labels " << g.num_labels() << '\n';
  out << "edges " << g.edge_count() << '\n';
  out << "complete " << (is_complete(g) ? "yes" : "no") << '\n';
  out << "out_degree";
  for (std::size_t d : out_degree_profile(g)) out << ' ' << d;
  out << '\n';

  out << "scc_count " << scc.components.size() << '\n';
  for (std::size_t i = 0; i < order.size(); ++i) {
    std::size_t c = order[i];
    out << "scc " << i << " size " << scc.components[c].size() << " gcd ";
    if (gcds[c]) {
      out << *gcds[c];
    } else {
      out << "none";
    }
    out << " vertices";
    for (vertex_id v : scc.components[c]) out << ' ' << v;
    out << '\n';
  }
  std::vector<std::pair<std::size_t, std::size_t>> cond;
  for (auto [a, b] : scc.condensation_edges) cond.emplace_back(rank[a], rank[b]);
  std::sort(cond.begin(), cond.end());
  out << "condensation";
  if (cond.empty()) out << " none";
  for (auto [a, b] : cond) out << ' ' << a << "->" << b;
  out << '\n';

  bunch_report br = bunches(g);
  out << "bunch_count " << br.bunch_vertices.size() << '\n';
  for (vertex_id v : br.bunch_vertices) out << "bunch " << v << " -> " << br.bunch_target[v] << '\n';
  out << "incoming_bunches";
  bool any = false;
  for (vertex_id v = 0; v < g.num_vertices(); ++v) {
    if (br.incoming_bunch_count[v] == 0) continue;
    out << ' ' << v << '=' << br.incoming_bunch_count[v];
    any = true;
  }
  if (!any) out << " none";
  out << '\n';
}

namespace detail {

struct input_source {
  std::string path;
  std::string text;

  void attach(CLI::App* cmd) {
    auto* file = cmd->add_option("-i,--input", path, "Cayley table file, '-' for stdin");
    auto* inline_text = cmd->add_option("-t,--text", text, "Cayley table given inline");
    file->excludes(inline_text);
    inline_text->excludes(file);
  }

  labeled_digraph load(std::istream& in) const {
    if (!text.empty()) return parse_cayley(std::string_view(text));
    if (path.empty()) throw error(errc::invalid_argument, "no input: pass -i FILE, -i - or -t TEXT");
    if (path == "-") return parse_cayley(in);
    std::ifstream file(path, std::ios::binary);
    if (!file) throw error(errc::invalid_argument, "cannot open '" + path + "'");
    return parse_cayley(file);
  }
};

inline void write_file(const std::string& path, const std::string& content, std::ostream& out) {
  if (path == "-") {
    out << content;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw error(errc::invalid_argument, "cannot write '" + path + "'");
  file << content;
  if (!file) throw error(errc::invalid_argument, "write to '" + path + "' failed");
}

inline std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> sizes;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    long long value = 0;
    if (!roadviz::detail::parse_integer(item, value) || value <= 0)
      throw error(errc::invalid_argument, "bad size '" + item + "'");
    sizes.push_back(static_cast<std::size_t>(value));
  }
  if (sizes.empty()) throw error(errc::invalid_argument, "no sizes given");
  return sizes;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-level cyclic drawings and synchronization analysis of labelled digraphs", "roadviz"};
  app.require_subcommand(1, 1);

  detail::input_source render_in, analyze_in, sync_in, recolor_in;
  std::string svg_path, json_path;
  layout_options lopts;
  bool no_legend = false;

  auto* render = app.add_subcommand("render", "Lay out a graph and write SVG");
  render_in.attach(render);
  render->add_option("-o,--output", svg_path, "SVG output file, '-' for stdout")->required();
  render->add_option("--json", json_path, "Also write the layout as JSON");
  render->add_option("--spacing", lopts.spacing, "Distance between neighbours on an SCC circle");
  render->add_option("--gap", lopts.scc_gap, "Gap between SCC circles");
  render->add_option("--vertex-radius", lopts.vertex_radius, "Vertex glyph radius");
  render->add_option("--stripe", lopts.stripe, "Distance between parallel edges");
  render->add_flag("--no-legend", no_legend, "Omit the label color legend");

  auto* analyze = app.add_subcommand("analyze", "Print SCCs, cycle gcds, bunches and completeness");
  analyze_in.attach(analyze);

  bool shortest = false;
  std::optional<std::string> apply;
  std::size_t max_states = 20;
  auto* sync = app.add_subcommand("sync", "Synchronization queries on a complete automaton");
  sync_in.attach(sync);
  sync->add_flag("--shortest", shortest, "Find a shortest synchronizing word (subset BFS)");
  sync->add_option("--apply", apply, "Print the image of the full state set under WORD");
  sync->add_option("--max-states", max_states, "State limit for --shortest");

  std::size_t max_vertices = 12;
  auto* recolor = app.add_subcommand("recolor", "Search for a synchronizing recoloring");
  recolor_in.attach(recolor);
  recolor->add_option("--max", max_vertices, "Vertex limit for the exhaustive search");

  std::size_t cerny_n = 0;
  std::string cerny_path = "-";
  auto* cerny_cmd = app.add_subcommand("cerny", "Emit the Cerny automaton C_N");
  cerny_cmd->add_option("N", cerny_n, "Number of states")->required();
  cerny_cmd->add_option("-o,--output", cerny_path, "Output file, '-' for stdout");

  std::string sizes_text = "1000,10000,100000";
  std::uint64_t seed = 1;
  int repeats = 3;
  auto* bench = app.add_subcommand("bench", "Time the layout on random out-degree-2 graphs");
  bench->add_option("--sizes", sizes_text, "Comma-separated vertex counts");
  bench->add_option("--seed", seed, "Random seed");
  bench->add_option("--repeat", repeats, "Timed runs per size (best is reported)")->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (render->parsed()) {
      labeled_digraph g = render_in.load(in);
      drawing d = find_layout(g, lopts);
      render_options ropts;
      ropts.show_legend = !no_legend;
      detail::write_file(svg_path, render_svg(d, ropts), out);
      if (!json_path.empty()) detail::write_file(json_path, to_json(d).dump(2) + "\n", out);
    } else if (analyze->parsed()) {
      write_analysis(out, analyze_in.load(in));
    } else if (sync->parsed()) {
      labeled_digraph g = sync_in.load(in);
      out << "synchronizable " << (is_synchronizable(g) ? "yes" : "no") << '\n';
      if (shortest) {
        sync_report r = shortest_sync_word(g, max_states);
        if (r.shortest_length) {
          out << "shortest_length " << *r.shortest_length << '\n';
          out << "witness " << (r.witness->empty() ? "(empty)" : format_word(*r.witness)) << '\n';
        } else {
          out << "shortest_length none\nwitness none\n";
        }
      }
      if (apply) {
        state_set image = apply_word(g, state_set::full(g.num_vertices()), parse_word(*apply));
        out << "image " << format_set(image) << " size " << image.size() << '\n';
      }
    } else if (recolor->parsed()) {
      std::optional<labeled_digraph> colored = brute_force_recolor(recolor_in.load(in), max_vertices);
      if (colored) {
        write_cayley(out, *colored);
      } else {
        out << "none\n";
      }
    } else if (cerny_cmd->parsed()) {
      detail::write_file(cerny_path, serialize_cayley(cerny(cerny_n)), out);
    } else if (bench->parsed()) {
      out << "vertices edges seconds ns_per_element\n";
      for (std::size_t n : detail::parse_sizes(sizes_text)) {
        bench_sample s = bench_layout(n, seed, repeats);
        out << s.vertices << ' ' << s.edges << ' ' << std::fixed << std::setprecision(6) << s.seconds << ' '
            << std::setprecision(2) << s.ns_per_element() << '\n';
        out.unsetf(std::ios::floatfield);
      }
    }
  } catch (const std::exception& e) {
    err << "roadviz: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace roadviz::cli
