#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "roadviz/cayley_io.hpp"

namespace roadviz {
namespace {

using row = std::vector<std::optional<vertex_id>>;

std::vector<row> rows(const labeled_digraph& g) {
  std::vector<row> out;
  for (vertex_id v = 0; v < g.num_vertices(); ++v) {
    row r;
    for (label_id l = 0; l < g.num_labels(); ++l) r.push_back(g.successor(v, l));
    out.push_back(r);
  }
  return out;
}

errc parse_error(std::string_view text) {
  try {
    parse_cayley(text);
  } catch (const error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for: " << text;
  return errc::invalid_argument;
}

TEST(CayleyParse, ReferenceSixVertexTable) {
  labeled_digraph g = parse_cayley("2 6 1 0 2 1 0 3 5 2 3 2 4 5");
  EXPECT_EQ(g.num_labels(), 2u);
  EXPECT_EQ(g.num_vertices(), 6u);
  std::vector<row> expected{{1, 0}, {2, 1}, {0, 3}, {5, 2}, {3, 2}, {4, 5}};
  EXPECT_EQ(rows(g), expected);
}

// This reference table has a 5 in row 3 of a 5-vertex graph.
TEST(CayleyParse, ReferencePartialTableAsPrintedIsOutOfRange) {
  try {
    parse_cayley("2 5 1 0 2 1 ; 3 5 ; 3 ;");
    FAIL() << "expected VertexOutOfRange";
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::vertex_out_of_range);
    EXPECT_NE(std::string(e.what()).find("row 3 label a"), std::string::npos) << e.what();
  }
}

TEST(CayleyParse, PartialTable) {
  labeled_digraph g = parse_cayley("2 5 1 0 2 1 ; 3 ; ; 3 ;");
  std::vector<row> expected{{1, 0}, {2, 1}, {std::nullopt, 3}, {std::nullopt, std::nullopt}, {3, std::nullopt}};
  EXPECT_EQ(rows(g), expected);
}

TEST(CayleyParse, SingleSelfLoop) {
  labeled_digraph g = parse_cayley("1 1 0");
  EXPECT_EQ(g.num_vertices(), 1u);
  EXPECT_EQ(g.successor(0, 0), vertex_id{0});
}

TEST(CayleyParse, TabularLayoutAndTrailingWhitespace) {
  labeled_digraph a = parse_cayley("2 6 1 0 2 1 0 3 5 2 3 2 4 5");
  labeled_digraph b = parse_cayley("2 6\n1\t0\r\n2 1\n0   3\n5 2\n3 2\n4 5\n\n  ");
  EXPECT_EQ(a, b);
}

TEST(CayleyParse, Errors) {
  EXPECT_EQ(parse_error("2 3 0 0 5 1 2 2"), errc::vertex_out_of_range);
  EXPECT_EQ(parse_error("2 3 0 0 -1 1 2 2"), errc::vertex_out_of_range);
  EXPECT_EQ(parse_error("2 3 0 0 1 1 2"), errc::too_few_tokens);
  EXPECT_EQ(parse_error("2 1 x 0"), errc::malformed_token);
  EXPECT_EQ(parse_error("2 1 0 1.5"), errc::malformed_token);
  EXPECT_EQ(parse_error("2 1 0 ;;"), errc::malformed_token);
  EXPECT_EQ(parse_error(""), errc::bad_header);
  EXPECT_EQ(parse_error("2"), errc::bad_header);
  EXPECT_EQ(parse_error("0 3"), errc::bad_header);
  EXPECT_EQ(parse_error("2 0"), errc::bad_header);
  EXPECT_EQ(parse_error("a 3 0"), errc::bad_header);
  EXPECT_EQ(parse_error("1 1 0 0"), errc::trailing_garbage);
}

TEST(CayleySerialize, CanonicalForm) {
  EXPECT_EQ(serialize_cayley(parse_cayley("2 6 1 0 2 1 0 3 5 2 3 2 4 5")), "2 6\n1 0\n2 1\n0 3\n5 2\n3 2\n4 5\n");
  EXPECT_EQ(serialize_cayley(parse_cayley("2 5 1 0 2 1 ; 3 ; ; 3 ;")), "2 5\n1 0\n2 1\n; 3\n; ;\n3 ;\n");
  EXPECT_EQ(serialize_cayley(parse_cayley("1 1 0")), "1 1\n0\n");
}

TEST(CayleyGraph, RejectsEmptyAlphabet) {
  EXPECT_THROW(labeled_digraph(0, 3), error);
  EXPECT_THROW(labeled_digraph(2, 0), error);
}

TEST(CayleyProperty, RoundTripAndWhitespaceInsensitivity) {
  std::mt19937_64 rng(7);
  const char* gaps[] = {" ", "\t", "\n", "  \n\t", "\r\n"};
  std::uniform_int_distribution<int> pick_gap(0, 4);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 1 + rng() % 12, k = 1 + rng() % 4;
    labeled_digraph g = oracle::random_graph(rng, n, k, 0.7);
    std::string text = serialize_cayley(g);
    ASSERT_EQ(parse_cayley(text), g);

    std::string spaced = gaps[pick_gap(rng)];
    for (char c : text) {
      if (c == ' ' || c == '\n') {
        spaced += gaps[pick_gap(rng)];
      } else {
        spaced += c;
      }
    }
    ASSERT_EQ(parse_cayley(spaced), g) << spaced;
  }
}

}  // namespace
}  // namespace roadviz
