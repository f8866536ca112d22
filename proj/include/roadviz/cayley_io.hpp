#pragma once

// Reading and writing the Cayley-table text format:
//
//   <num_labels> <num_vertices> <cell> <cell> ...
//
// followed by num_vertices x num_labels cells in row-major order. A cell is
// a vertex id or ';' for an empty cell. Any run of ASCII whitespace separates
// tokens, so one-line and tabular layouts are equivalent.

#include <charconv>
#include <cstddef>
#include <istream>
#include <iterator>
#include <sstream>
#include <string>
#include <string_view>

#include "roadviz/digraph.hpp"
#include "roadviz/error.hpp"

namespace roadviz {

namespace detail {

inline bool is_gap(char c) noexcept {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

class token_stream {
 public:
  explicit token_stream(std::string_view text) : text_(text) {}

  // Empty view at end of input.
  std::string_view next() {
    while (pos_ < text_.size() && is_gap(text_[pos_])) ++pos_;
    std::size_t start = pos_;
    while (pos_ < text_.size() && !is_gap(text_[pos_])) ++pos_;
    ++count_;
    return text_.substr(start, pos_ - start);
  }

  std::size_t count() const noexcept { return count_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t count_ = 0;
};

// Accepts an optional leading '-' so negative cells are reported as out of
// range rather than malformed.
inline bool parse_integer(std::string_view tok, long long& out) {
  if (tok.empty()) return false;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

}  // namespace detail

inline labeled_digraph parse_cayley(std::string_view text) {
  detail::token_stream tokens(text);

  auto header_value = [&](const char* what) -> std::size_t {
    std::string_view tok = tokens.next();
    long long value = 0;
    if (tok.empty()) throw error(errc::bad_header, std::string("missing ") + what);
    if (!detail::parse_integer(tok, value) || value <= 0) {
      throw error(errc::bad_header, std::string(what) + " must be a positive integer, got '" +
                                        std::string(tok) + "'");
    }
    return static_cast<std::size_t>(value);
  };
  std::size_t num_labels = header_value("label count");
  std::size_t num_vertices = header_value("vertex count");
  if (num_vertices >= labeled_digraph::absent) throw error(errc::too_large, "vertex count exceeds id range");

  labeled_digraph g(num_labels, num_vertices);
  for (std::size_t v = 0; v < num_vertices; ++v) {
    for (std::size_t l = 0; l < num_labels; ++l) {
      std::string_view tok = tokens.next();
      auto where = [&] { return "row " + std::to_string(v) + " label " + label_name(static_cast<label_id>(l)); };
      if (tok.empty()) {
        throw error(errc::too_few_tokens, "input ended at " + where() + " (expected " +
                                              std::to_string(num_vertices * num_labels) + " cells)");
      }
      if (tok == ";") continue;
      long long value = 0;
      if (!detail::parse_integer(tok, value)) {
        throw error(errc::malformed_token, "'" + std::string(tok) + "' at " + where());
      }
      if (value < 0 || static_cast<unsigned long long>(value) >= num_vertices) {
        throw error(errc::vertex_out_of_range, "value " + std::string(tok) + " at " + where() +
                                                   " is outside [0, " + std::to_string(num_vertices) + ")");
      }
      g.set(static_cast<vertex_id>(v), static_cast<label_id>(l), static_cast<vertex_id>(value));
    }
  }
  if (std::string_view extra = tokens.next(); !extra.empty()) {
    throw error(errc::trailing_garbage, "unexpected token '" + std::string(extra) + "' after the table");
  }
  return g;
}

inline labeled_digraph parse_cayley(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_cayley(std::string_view(text));
}

// Canonical form: header line, then one row per line.
inline void write_cayley(std::ostream& out, const labeled_digraph& g) {
  out << g.num_labels() << ' ' << g.num_vertices() << '\n';
  for (vertex_id v = 0; v < g.num_vertices(); ++v) {
    for (label_id l = 0; l < g.num_labels(); ++l) {
      if (l) out << ' ';
      vertex_id t = g.cell(v, l);
      if (t == labeled_digraph::absent) {
        out << ';';
      } else {
        out << t;
      }
    }
    out << '\n';
  }
}

inline std::string serialize_cayley(const labeled_digraph& g) {
  std::ostringstream out;
  write_cayley(out, g);
  return out.str();
}

}  // namespace roadviz
