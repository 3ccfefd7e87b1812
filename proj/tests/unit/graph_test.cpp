#include <gtest/gtest.h>

#include "gallai/constructions.hpp"
#include "gallai/graph.hpp"
#include "gallai/text_format.hpp"

using namespace gallai;

TEST(Graph, RejectsLoopsRepeatsAndRange) {
  EXPECT_THROW(Graph(3, {{0, 0}}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {{0, 3}}), std::invalid_argument);
}

TEST(Graph, EdgesAreNormalizedAndSorted) {
  const Graph g(4, {{3, 2}, {1, 0}, {2, 0}});
  ASSERT_EQ(g.size(), 3);
  EXPECT_EQ(g.edges()[0], (Edge{0, 1}));
  EXPECT_EQ(g.edges()[1], (Edge{0, 2}));
  EXPECT_EQ(g.edges()[2], (Edge{2, 3}));
  EXPECT_TRUE(g.adjacent(3, 2));
  EXPECT_FALSE(g.adjacent(1, 3));
  EXPECT_EQ(g.degree(0), 2);
  EXPECT_EQ(g.min_degree(), 1);
}

TEST(Graph, InducedSubgraphRelabelsInOrder) {
  const Graph g = cycle_graph(6);
  const auto sub = induced_subgraph(g, VertexSet(6, {1, 2, 3, 5}));
  EXPECT_EQ(sub.graph.order(), 4);
  EXPECT_EQ(sub.to_parent, (std::vector<Vertex>{1, 2, 3, 5}));
  EXPECT_EQ(sub.from_parent[4], -1);
  EXPECT_EQ(sub.graph.size(), 2);  // 1-2, 2-3
  EXPECT_EQ(sub.lift(VertexSet(4, {0, 3}), 6), VertexSet(6, {1, 5}));
}

TEST(Graph, DistanceAndComponents) {
  const Graph g(5, {{0, 1}, {1, 2}, {3, 4}});
  EXPECT_EQ(distance(g, 0, 2), 2);
  EXPECT_FALSE(distance(g, 0, 4).has_value());
  EXPECT_FALSE(is_connected(g));
  const auto comps = components(g, VertexSet(5, {1}));
  ASSERT_EQ(comps.size(), 3u);
  EXPECT_EQ(comps[0], std::vector<Vertex>{0});
  EXPECT_EQ(comps[2], (std::vector<Vertex>{3, 4}));
  EXPECT_TRUE(is_connected(Graph(1, {})));
}

TEST(TextFormat, RoundTrip) {
  const Graph g = petersen();
  const std::string text = serialize(g);
  EXPECT_EQ(parse_graph(text), g);
  EXPECT_EQ(serialize(parse_graph(text)), text);
}

TEST(TextFormat, CommentsAndBlankLines) {
  const Graph g = parse_graph("# a triangle\n3 3\n0 1\n\n1 2\n# x\n2 0\n");
  EXPECT_EQ(g, complete_graph(3));
}

struct BadInput {
  const char* text;
  ParseError::Kind kind;
  int line;
};

class ParseErrors : public ::testing::TestWithParam<BadInput> {};

TEST_P(ParseErrors, KindAndLine) {
  const auto& p = GetParam();
  try {
    parse_graph(p.text);
    FAIL() << "accepted " << p.text;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), p.kind) << e.what();
    EXPECT_EQ(e.line(), p.line) << e.what();
  }
}

INSTANTIATE_TEST_SUITE_P(
    Graph, ParseErrors,
    ::testing::Values(BadInput{"", ParseError::Kind::missing_header, 0},
                      BadInput{"three 1\n0 1\n", ParseError::Kind::missing_header, 1},
                      BadInput{"3 2\n0 1\n", ParseError::Kind::edge_count_mismatch, 1},
                      BadInput{"3 1\n0 x\n", ParseError::Kind::malformed_line, 2},
                      BadInput{"3 1\n0 3\n", ParseError::Kind::vertex_out_of_range, 2},
                      BadInput{"3 1\n-1 2\n", ParseError::Kind::vertex_out_of_range, 2},
                      BadInput{"3 1\n1 1\n", ParseError::Kind::loop, 2},
                      BadInput{"3 2\n0 1\n1 0\n", ParseError::Kind::duplicate_edge, 3},
                      BadInput{"pattern\n1 1\n0 0\n", ParseError::Kind::malformed_line, 1}));

TEST(TextFormat, Patterns) {
  const auto m = parse_pattern("pattern\n2 3\n0 1\n0 1\n1 1\n");
  EXPECT_EQ(m.order(), 2);
  EXPECT_EQ(m.size(), 3);
  EXPECT_TRUE(m.edge(2).is_loop());
  EXPECT_EQ(parse_pattern(serialize(m)), m);
  EXPECT_THROW(parse_pattern("2 1\n0 1\n"), ParseError);
  try {
    parse_pattern("pattern\n3 1\n0 1\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), ParseError::Kind::invalid_pattern);  // disconnected
  }
}
