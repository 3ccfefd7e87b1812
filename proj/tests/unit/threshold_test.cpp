#include <gtest/gtest.h>

#include "gallai/threshold.hpp"
#include "gallai/transversal.hpp"

using namespace gallai;

TEST(Threshold, RationalComparisons) {
  const Threshold t = Threshold::ratio(3, 2);
  EXPECT_EQ(t.compare_scaled(2, 1, 3), 0);
  EXPECT_LT(t.compare_scaled(4, 2, 10), 0);  // 9 < 10
  EXPECT_GT(t.compare_scaled(1, 3, 3), 0);   // 27/8 > 3
  EXPECT_EQ(t.to_string(), "3/2");
  EXPECT_EQ(Threshold::ratio(4, 2).to_string(), "2");
}

TEST(Threshold, CubeRootIsExact) {
  const Threshold t = Threshold::cube_root(12);
  // 12^(1/3) = 2.289...
  EXPECT_GT(t.compare_scaled(1, 1, 2), 0);
  EXPECT_LT(t.compare_scaled(1, 1, 3), 0);
  EXPECT_EQ(t.compare_scaled(1, 3, 12), 0);
  EXPECT_GT(t.compare_scaled(4, 2, 20), 0);  // 4*12^(2/3) = 20.96
  EXPECT_LT(t.compare_scaled(4, 2, 21), 0);
  EXPECT_EQ(Threshold::cube_root(27).compare_scaled(1, 1, 3), 0);
  EXPECT_EQ(Threshold::cube_root(64).compare_scaled(5, 2, 80), 0);
}

TEST(Threshold, Parse) {
  EXPECT_EQ(Threshold::parse("5"), Threshold::ratio(5));
  EXPECT_EQ(Threshold::parse("1/4"), Threshold::ratio(1, 4));
  EXPECT_EQ(Threshold::parse("cbrt(10)"), Threshold::cube_root(10));
  EXPECT_THROW(Threshold::parse("x"), std::invalid_argument);
  EXPECT_THROW(Threshold::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(Threshold::parse("-1"), std::invalid_argument);
}

TEST(TheoremBound, ExactAtTheEdges) {
  EXPECT_TRUE(theorem_bound_applies(2, 1));
  EXPECT_FALSE(theorem_bound_applies(8, 2));
  EXPECT_TRUE(theorem_bound_applies(9, 2));
  // n = 8, m = 1: max{5*4, 2*2} = 20
  EXPECT_TRUE(within_theorem_bound(20, 8, 1));
  EXPECT_FALSE(within_theorem_bound(21, 8, 1));
  // n = 27, m = 2: max{45, 24}
  EXPECT_TRUE(within_theorem_bound(45, 27, 2));
  EXPECT_FALSE(within_theorem_bound(46, 27, 2));
  // n = 1000, m = 8: max{500, 1280}
  EXPECT_TRUE(within_theorem_bound(1280, 1000, 8));
  EXPECT_FALSE(within_theorem_bound(1281, 1000, 8));
}
