#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rsv/weights.hpp"

using namespace rsv;

TEST(Partition, ValidatesAndStripsZeros) {
  EXPECT_EQ(Partition::parse("[2,1,0,0]").length(), 2u);
  EXPECT_EQ(Partition::parse("[]").size(), 0);
  EXPECT_THROW(Partition::parse("[1,2]"), std::exception);
  EXPECT_THROW(Partition::parse("[2,-1]"), std::exception);
  EXPECT_THROW(Partition::parse("[2,1"), std::exception);
  EXPECT_EQ(Partition({3, 1}).str(), "[3,1]");
}

TEST(Partition, PaddingAndContainment) {
  const Partition p{2, 1};
  EXPECT_EQ(p.padded(4), (std::vector<int>{2, 1, 0, 0}));
  EXPECT_THROW(p.padded(1), RankMismatch);
  EXPECT_TRUE(Partition({3, 2, 1}).contains(p));
  EXPECT_FALSE(p.contains(Partition({1, 1, 1})));
}

TEST(GLWeight, ParseAndRank) {
  const GLWeight w = GLWeight::parse("[2,1,0,-2]@4");
  EXPECT_EQ(w.rank(), 4u);
  EXPECT_EQ(w.str(), "[2,1,0,-2]@4");
  EXPECT_TRUE(w.dominant());
  EXPECT_THROW(GLWeight::parse("[2,1]@3"), std::exception);
  EXPECT_FALSE(GLWeight({0, 1}).dominant());
  EXPECT_THROW(GLWeight({1, -1}).to_partition(), DomainError);
}

TEST(Weights, StarDualAndCentralWeight) {
  EXPECT_EQ(star_dual(Partition{2}, 1), GLWeight({-2}));
  EXPECT_EQ(star_dual(Partition{3, 1}, 3), GLWeight({0, -1, -3}));
  EXPECT_EQ(central_weight(Partition{2, 1}, Partition{2}, 4, 2, 1), GLWeight({2, 1, 0, -2}));
  EXPECT_THROW(central_weight(Partition{}, Partition{}, 3, 2, 1), ConfigurationError);
}

TEST(Weights, VTildeAndLambda) {
  // l=4, m=2, n=1 with x=(1,1), y=(1), v=(2).
  EXPECT_EQ(v_tilde(Partition{2}, 4, 1), GLWeight({2, 2, 2, 0}));
  EXPECT_EQ(lambda_shift(Partition{1, 1}, Partition{1}, 2, 4, 2, 1), GLWeight({3, 3, 2, 1}));
  EXPECT_EQ(v_tilde(Partition{3, 1}, 5, 2), GLWeight({3, 3, 3, 2, 0}));
}

TEST(Weights, EnumerationMatchesBoxFilter) {
  for (std::size_t rows = 0; rows <= 4; ++rows)
    for (int s = 0; s <= 9; ++s) {
      const auto lib = enumerate_dominant(rows, s);
      const auto brute = oracle::box_partitions(rows, s, s);
      ASSERT_EQ(lib.size(), brute.size()) << "rows=" << rows << " s=" << s;
      for (std::size_t i = 0; i + 1 < lib.size(); ++i) EXPECT_GT(lib[i], lib[i + 1]);
      for (const auto& p : lib) EXPECT_EQ(p.size(), s);
    }
}

TEST(Weights, BoundedEnumeration) {
  for (std::size_t rows = 1; rows <= 3; ++rows)
    for (int s = 0; s <= 6; ++s)
      EXPECT_EQ(enumerate_dominant_bounded(rows, s, 2).size(), oracle::box_partitions(rows, s, 2).size());
  std::size_t total = 0;
  for (int s = 0; s <= 6; ++s) total += oracle::box_partitions(2, s, 3).size();
  EXPECT_EQ(partitions_in_box(2, 3).size(), total);
}
