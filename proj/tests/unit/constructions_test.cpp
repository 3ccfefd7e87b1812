#include <gtest/gtest.h>

#include <set>

#include "gallai/constructions.hpp"
#include "gallai/menger.hpp"
#include "gallai/path.hpp"

using namespace gallai;

TEST(Constructions, Petersen) {
  const Graph g = petersen();
  EXPECT_EQ(g.order(), 10);
  EXPECT_EQ(g.size(), 15);
  for (Vertex v = 0; v < 10; ++v) EXPECT_EQ(g.degree(v), 3);
}

TEST(Constructions, ModifiedPetersen) {
  const Graph g = modified_petersen();
  EXPECT_EQ(g.order(), 12);
  EXPECT_EQ(g.size(), 15);
  EXPECT_TRUE(is_connected(g));
  for (Vertex leaf : {9, 10, 11}) EXPECT_EQ(g.degree(leaf), 1);
  EXPECT_TRUE(g.adjacent(9, 4));
  EXPECT_TRUE(g.adjacent(10, 6));
  EXPECT_TRUE(g.adjacent(11, 7));
}

TEST(Constructions, CatalogLookups) {
  EXPECT_EQ(find_graph("path7"), path_graph(7));
  EXPECT_EQ(find_graph("cycle5"), cycle_graph(5));
  EXPECT_EQ(find_graph("complete4"), complete_graph(4));
  EXPECT_FALSE(find_graph("cycle2").has_value());
  EXPECT_FALSE(find_graph("nothing").has_value());
  for (const auto& e : graph_catalog()) EXPECT_EQ(find_graph(e.name), e.graph);
}

TEST(Constructions, ConnectedGraphCounts) {
  const std::vector<std::size_t> expected = {1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) {
    const auto& gs = all_connected_graphs(n);
    EXPECT_EQ(gs.size(), expected[n - 1]) << n;
    std::set<unsigned __int128> codes;
    for (const auto& g : gs) {
      EXPECT_TRUE(is_connected(g));
      codes.insert(canonical_code(g));
    }
    EXPECT_EQ(codes.size(), gs.size());
  }
}

TEST(Constructions, TreeCounts) {
  const std::vector<std::size_t> expected = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
  for (int n = 1; n <= 10; ++n) {
    const auto& ts = all_trees(n);
    EXPECT_EQ(ts.size(), expected[n - 1]) << n;
    for (const auto& t : ts) EXPECT_EQ(t.size(), n - 1);
  }
}

TEST(Constructions, CanonicalCodeIsInvariant) {
  const Graph g = petersen();
  // relabel by i -> 3i mod 10
  std::vector<Edge> e;
  for (const auto& x : g.edges()) e.push_back({(3 * x.u) % 10, (3 * x.v) % 10});
  const Graph h(10, e);
  EXPECT_EQ(canonical_code(g), canonical_code(h));
  EXPECT_EQ(canonical_graph(g), canonical_graph(h));
  EXPECT_NE(canonical_code(cycle_graph(6)), canonical_code(two_triangles(1)));
}

TEST(Constructions, PatternEnumeration) {
  const auto ps = connected_patterns(3);
  EXPECT_EQ(ps.size(), 17u);
  std::set<std::string> names;
  for (const auto& p : ps) names.insert(p.name());
  EXPECT_EQ(names.size(), ps.size());
}

TEST(Constructions, RandomGraphsAreSeeded) {
  EXPECT_EQ(random_connected(12, 1, 4, 5), random_connected(12, 1, 4, 5));
  for (std::uint64_t s = 0; s < 20; ++s) EXPECT_TRUE(is_connected(random_connected(9, 1, 5, s)));
}

TEST(Constructions, PlantedShortcut) {
  for (std::uint64_t s = 0; s < 50; ++s) {
    const auto p = planted_shortcut(s);
    const Cycle c(p.graph, p.cycle);
    const Path t(p.graph, p.path);
    EXPECT_LT(t.length(), cycle_distance(c, t.front(), t.back()));
    EXPECT_GE(c.length(), 6);
    EXPECT_LE(c.length(), 30);
  }
}

TEST(Constructions, CutVertexCliques) {
  const Graph g = cliques_at_cut_vertex(4);
  EXPECT_EQ(g.order(), 7);
  EXPECT_EQ(connectivity(g), 1);
}
