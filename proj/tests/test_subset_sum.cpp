#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "wpo/generators.hpp"
#include "wpo/oracle.hpp"
#include "wpo/subset_sum.hpp"

using namespace wpo;

namespace {

Weight sum_of(const std::vector<Weight>& items, const std::vector<std::size_t>& picked) {
  Weight s = 0;
  for (std::size_t i : picked) {
    s += items.at(i);
  }
  return s;
}

}  // namespace

TEST(SubsetSum, FindsFiveAndSeven) {
  const std::vector<Weight> items{3, 5, 7};
  const auto picked = subset_sum(items, 12);
  ASSERT_TRUE(picked);
  auto sorted = *picked;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(sorted, (std::vector<std::size_t>{1, 2}));
}

TEST(SubsetSum, Unreachable) {
  const std::vector<Weight> items{3, 5, 7};
  EXPECT_FALSE(subset_sum(items, 4));
  EXPECT_FALSE(subset_sum_reachable(items, 4));
}

TEST(SubsetSum, MultisetUsesBothCopies) {
  const std::vector<Weight> items{2, 2, 3};
  const auto picked = subset_sum(items, 4);
  ASSERT_TRUE(picked);
  auto sorted = *picked;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(sorted, (std::vector<std::size_t>{0, 1}));
}

TEST(SubsetSum, ZeroTargetIsEmptySubset) {
  const std::vector<Weight> items{4, 9};
  const auto picked = subset_sum(items, 0);
  ASSERT_TRUE(picked);
  EXPECT_TRUE(picked->empty());
  EXPECT_TRUE(subset_sum(std::vector<Weight>{}, 0));
  EXPECT_FALSE(subset_sum(std::vector<Weight>{}, 1));
}

TEST(SubsetSum, RejectsZeroItem) {
  const std::vector<Weight> items{1, 0};
  EXPECT_THROW(subset_sum(items, 1), std::invalid_argument);
}

TEST(SubsetSum, AgreesWithEnumerationOnRandomInstances) {
  Rng rng(3);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<Weight> items(draw(rng, 0, 12));
    for (Weight& x : items) {
      x = draw(rng, 1, 10);
    }
    const Weight target = draw(rng, 0, 70);
    const auto picked = subset_sum(items, target);
    EXPECT_EQ(picked.has_value(), brute_force_subset_sum(items, target));
    EXPECT_EQ(subset_sum_reachable(items, target), picked.has_value());
    if (picked) {
      EXPECT_EQ(sum_of(items, *picked), target);
      auto unique = *picked;
      std::sort(unique.begin(), unique.end());
      EXPECT_EQ(std::adjacent_find(unique.begin(), unique.end()), unique.end());
    }
  }
}
