#include <gtest/gtest.h>

#include <numeric>

#include "gallai/constructions.hpp"
#include "gallai/procedures.hpp"

using namespace gallai;

namespace {

std::vector<Vertex> iota_seq(int n) {
  std::vector<Vertex> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

// cycle 0..l-1 plus a chord path from x to y through `inner` new vertices
Graph cycle_with_path(int l, Vertex x, Vertex y, int inner, std::vector<Vertex>& path) {
  std::vector<Edge> edges;
  for (int i = 0; i < l; ++i) edges.push_back({i, (i + 1) % l});
  path = {x};
  for (int i = 0; i < inner; ++i) path.push_back(l + i);
  path.push_back(y);
  for (std::size_t i = 1; i < path.size(); ++i) edges.push_back({path[i - 1], path[i]});
  return Graph(l + inner, edges);
}

}  // namespace

TEST(RerouteChoice, PicksShortOppositeArc) {
  const Graph g = cycle_graph(10);
  const Cycle c(g, iota_seq(10));
  auto r = reroute_choice(c, {0, 2, 5, 7});
  EXPECT_EQ(r.index, 1);
  EXPECT_EQ(r.lengths, (std::array<int, 4>{2, 3, 2, 3}));
  r = reroute_choice(c, {0, 6, 7, 8});
  EXPECT_EQ(r.index, 3);
  EXPECT_LT(2 * r.lengths[2], 10);
  EXPECT_TRUE(recheck(r.cert, g));
}

TEST(RerouteChoice, MalformedSplits) {
  const Graph g = cycle_graph(8);
  const Cycle c(g, iota_seq(8));
  EXPECT_THROW(reroute_choice(c, {0, 0, 3, 5}), std::invalid_argument);
  EXPECT_THROW(reroute_choice(c, {0, 5, 3, 6}), std::invalid_argument);
  EXPECT_THROW(reroute_choice(c, {0, 2, 4, 9}), std::invalid_argument);
}

TEST(ShortenCycle, OutputStrictlyBetweenHalfAndWhole) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto ps = planted_shortcut(seed);
    const Cycle c(ps.graph, ps.cycle);
    const auto out = shorten_cycle(ps.graph, c, Path(ps.graph, ps.path));
    ASSERT_TRUE(succeeded(out)) << seed;
    const auto& r = std::get<CycleResult>(out);
    const int l = c.length(), l2 = static_cast<int>(r.cycle.size());
    EXPECT_GT(2 * l2, l);
    EXPECT_LT(l2, l);
    EXPECT_NO_THROW(Cycle(ps.graph, r.cycle));
    EXPECT_TRUE(recheck(r.cert, ps.graph)) << recheck(r.cert, ps.graph).problem;
  }
}

TEST(ShortenCycle, RefusesPathThatIsNotShorter) {
  std::vector<Vertex> p;
  const Graph g = cycle_with_path(10, 0, 3, 2, p);  // ||P|| = 3 = d_C(0,3)
  const auto out = shorten_cycle(g, Cycle(g, iota_seq(10)), Path(g, p));
  ASSERT_FALSE(succeeded(out));
  EXPECT_EQ(std::get<HypothesisFailure>(out).reason(), "path not shorter than cycle distance");
}

TEST(ShortenCycle, SplitsPathAtCycleVertices) {
  // P = 0 a 2 b 7: the whole path has 4 edges against d_C(0,7) = 5 and the
  // segment 2 b 7 (2 edges) is shorter than d_C(2,7) = 5
  const Graph g(14, {{0, 1},  {1, 2},  {2, 3},  {3, 4},  {4, 5},  {5, 6},  {6, 7},
                     {7, 8},  {8, 9},  {9, 10}, {10, 11}, {11, 0}, {0, 12}, {12, 2}, {2, 13}, {13, 7}});
  const Cycle c(g, iota_seq(12));
  const auto out = shorten_cycle(g, c, Path(g, {0, 12, 2, 13, 7}));
  ASSERT_TRUE(succeeded(out));
  const auto& r = std::get<CycleResult>(out);
  EXPECT_EQ(r.cert.objects.at("path:segment"), (std::vector<Vertex>{2, 13, 7}));
  EXPECT_EQ(r.cycle.size(), 9u);  // 7..11,0,1,2 then 13
}

// Tight configuration around the second quarter: l = 20 so k = 5, x = v6 and
// y = v11 at cycle distance 5 = |P2| + 1. A T with 4 edges shortens, 5 does not.
TEST(ShrinkCycle, TightSecondQuarterFixture) {
  for (int inner : {3, 4}) {
    std::vector<Vertex> t;
    const Graph g = cycle_with_path(20, 5, 10, inner, t);
    const Cycle c(g, iota_seq(20));
    const auto parts = quarter(c);
    ASSERT_EQ(parts.p1.back(), 5);
    ASSERT_EQ(parts.p3.front(), 10);
    ASSERT_EQ(parts.p2.size(), 4u);
    const auto out = shrink_cycle(g, c, Threshold::ratio(1));
    const int len = inner + 1;
    if (len + 1 < static_cast<int>(parts.p2.size()) + 2) {
      ASSERT_TRUE(succeeded(out)) << "||T||=" << len;
      const auto& r = std::get<CycleResult>(out);
      EXPECT_EQ(r.cert.objects.at("path:T"), t);
      EXPECT_EQ(r.cycle.size(), 19u);
      EXPECT_TRUE(recheck(r.cert, g));
    } else {
      EXPECT_FALSE(succeeded(out)) << "||T||=" << len;
    }
  }
}

TEST(Quarter, Lengths) {
  for (int l = 4; l <= 23; ++l) {
    const Graph g = cycle_graph(l);
    const auto q = quarter(Cycle(g, iota_seq(l)));
    const int k = l / 4;
    EXPECT_EQ(static_cast<int>(q.p1.size()), k + 1);
    EXPECT_EQ(static_cast<int>(q.p3.size()), k + 1);
    EXPECT_EQ(q.p1.size() + q.p2.size() + q.p3.size() + q.p4.size(), static_cast<std::size_t>(l));
  }
  const Graph g = cycle_graph(3);
  EXPECT_THROW(quarter(Cycle(g, iota_seq(3))), std::invalid_argument);
}

TEST(Certificates, TamperingIsDetected) {
  const auto ps = planted_shortcut(5);
  const Cycle c(ps.graph, ps.cycle);
  auto out = shorten_cycle(ps.graph, c, Path(ps.graph, ps.path));
  ASSERT_TRUE(succeeded(out));
  Certificate cert = std::get<CycleResult>(out).cert;
  ASSERT_TRUE(recheck(cert, ps.graph));

  Certificate wrong_check = cert;
  wrong_check.checks.front().rhs = "999";
  EXPECT_FALSE(recheck(wrong_check, ps.graph));

  Certificate broken_cycle = cert;
  auto& seq = broken_cycle.objects["cycle:C'"];
  std::swap(seq[0], seq[1 + seq.size() / 2]);
  EXPECT_FALSE(recheck(broken_cycle, ps.graph));

  Certificate dropped = cert;
  dropped.checks.pop_back();
  EXPECT_FALSE(recheck(dropped, ps.graph));
}

TEST(Certificates, TraceLine) {
  const Graph g = cycle_graph(10);
  const auto r = reroute_choice(Cycle(g, iota_seq(10)), {0, 2, 5, 7});
  const std::string line = trace_line(r.cert);
  EXPECT_EQ(line.rfind("step=reroute_choice hypothesis=ok output=P1 check=", 0), 0u) << line;
  EXPECT_EQ(line.find(' ', line.find("check=")), std::string::npos);
}
