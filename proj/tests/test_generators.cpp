#include <gtest/gtest.h>

#include <set>

#include "wpo/generators.hpp"
#include "wpo/tree_solver.hpp"

using namespace wpo;

TEST(Generators, SameSeedSameInstance) {
  Rng a(99);
  Rng b(99);
  EXPECT_EQ(random_tree(40, 9, a), random_tree(40, 9, b));
  EXPECT_EQ(random_connected_graph(12, 20, 5, a), random_connected_graph(12, 20, 5, b));
}

TEST(Generators, RandomTreesAreTrees) {
  Rng rng(1);
  for (std::size_t n = 1; n <= 60; ++n) {
    const WeightedGraph g = random_tree(n, 4, rng);
    EXPECT_TRUE(is_tree(g));
    EXPECT_LE(g.max_weight(), 4U);
  }
}

TEST(Generators, ConnectedGraphsHaveRequestedSize) {
  Rng rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = draw(rng, 2, 10);
    const std::size_t m = draw(rng, n - 1, n * (n - 1) / 2);
    const WeightedGraph g = random_connected_graph(n, m, 3, rng);
    EXPECT_EQ(g.num_edges(), m);
  }
}

TEST(Generators, TreeCountsPerSize) {
  const std::vector<std::size_t> expected{1, 1, 1, 1, 2, 3, 6, 11, 23};
  for (std::size_t n = 1; n <= 8; ++n) {
    EXPECT_EQ(all_unlabeled_trees(n).size(), expected[n]) << n;
  }
}

TEST(Generators, CanonicalFormIgnoresLabels) {
  const std::vector<std::pair<Vertex, Vertex>> a{{0, 1}, {1, 2}, {2, 3}};
  const std::vector<std::pair<Vertex, Vertex>> b{{2, 0}, {0, 3}, {3, 1}};
  const std::vector<std::pair<Vertex, Vertex>> star{{0, 1}, {0, 2}, {0, 3}};
  EXPECT_EQ(tree_canonical_form(4, a), tree_canonical_form(4, b));
  EXPECT_NE(tree_canonical_form(4, a), tree_canonical_form(4, star));
}

TEST(Generators, WeightingsAreExhaustive) {
  std::set<std::vector<Weight>> seen;
  for_each_weighting(3, 3, [&](const std::vector<Weight>& w) { seen.insert(w); });
  EXPECT_EQ(seen.size(), 27U);
}
