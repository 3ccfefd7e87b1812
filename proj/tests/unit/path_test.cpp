#include <gtest/gtest.h>

#include "gallai/constructions.hpp"
#include "gallai/path.hpp"

using namespace gallai;

TEST(Path, Validation) {
  const Graph g = path_graph(5);
  EXPECT_NO_THROW(Path(g, {0, 1, 2}));
  try {
    Path(g, {0, 2});
    FAIL();
  } catch (const PathError& e) {
    EXPECT_EQ(e.kind(), PathError::Kind::not_adjacent);
  }
  try {
    Path(g, {0, 1, 0});
    FAIL();
  } catch (const PathError& e) {
    EXPECT_EQ(e.kind(), PathError::Kind::repeated_vertex);
  }
  EXPECT_THROW(Path(g, {}), PathError);
}

TEST(Path, SubpathAndReverse) {
  const Graph g = path_graph(6);
  const Path p(g, {0, 1, 2, 3, 4, 5});
  EXPECT_EQ(p.length(), 5);
  EXPECT_EQ(p.subpath(g, 1, 3).sequence(), (std::vector<Vertex>{1, 2, 3}));
  EXPECT_EQ(p.subpath(g, 3, 1).sequence(), (std::vector<Vertex>{3, 2, 1}));
  EXPECT_EQ(p.reversed(g).front(), 5);
  EXPECT_EQ(p.index_of(4), 4);
  EXPECT_FALSE(p.contains(9));
}

TEST(Cycle, NeedsThreeVertices) {
  const Graph g = cycle_graph(5);
  EXPECT_THROW(Cycle(g, {0, 1}), PathError);
  EXPECT_THROW(Cycle(g, {0, 1, 2}), PathError);  // 2-0 missing
  EXPECT_NO_THROW(Cycle(g, {0, 1, 2, 3, 4}));
}

TEST(Cycle, DistanceAndArcs) {
  const Graph g = cycle_graph(8);
  const Cycle c(g, {0, 1, 2, 3, 4, 5, 6, 7});
  EXPECT_EQ(cycle_distance(c, 1, 6), 3);
  EXPECT_EQ(forward_arc(g, c, 6, 1).sequence(), (std::vector<Vertex>{6, 7, 0, 1}));
  EXPECT_EQ(backward_arc(g, c, 1, 6).sequence(), (std::vector<Vertex>{1, 0, 7, 6}));
  EXPECT_EQ(longer_arc(g, c, 1, 6).length(), 5);
  EXPECT_EQ(longer_arc(g, c, 1, 6).front(), 1);
  EXPECT_EQ(longer_arc(g, c, 1, 6).back(), 6);
}

TEST(Cycle, LongerArcTieGoesForward) {
  const Graph g = cycle_graph(6);
  const Cycle c(g, {0, 1, 2, 3, 4, 5});
  // both arcs between opposite vertices have three edges
  EXPECT_EQ(longer_arc(g, c, 0, 3).sequence(), (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_EQ(longer_arc(g, c, 3, 0).sequence(), (std::vector<Vertex>{3, 4, 5, 0}));
}

TEST(Path, Concatenation) {
  const Graph g = cycle_graph(6);
  const Path p(g, {0, 1, 2});
  const Path q(g, {2, 3, 4});
  EXPECT_EQ(concat_paths(g, p, 2, 2, q).sequence(), (std::vector<Vertex>{0, 1, 2, 3, 4}));
  EXPECT_EQ(concat_paths(g, p, 1, 2, q).sequence(), (std::vector<Vertex>{0, 1, 2, 3, 4}));
  const Path r(g, {5, 0, 1});
  EXPECT_THROW(concat_paths(g, p, 1, 0, r), PathError);  // 0 P 1, then 0 again
  EXPECT_THROW(concat_paths(g, p, 0, 3, q), PathError);  // 0 and 3 not adjacent
}
