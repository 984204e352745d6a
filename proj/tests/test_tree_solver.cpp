#include <gtest/gtest.h>

#include <vector>

#include "wpo/generators.hpp"
#include "wpo/oracle.hpp"
#include "wpo/reductions.hpp"
#include "wpo/tree_solver.hpp"

using namespace wpo;

namespace {

WeightedGraph path(const std::vector<Weight>& w) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < w.size(); ++i) {
    edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(i + 1), w[i]});
  }
  return build_graph(w.size() + 1, edges);
}

WeightedGraph star(std::size_t leaves, Weight w = 1) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= leaves; ++i) {
    edges.push_back({0, static_cast<Vertex>(i), w});
  }
  return build_graph(leaves + 1, edges);
}

std::size_t max_in(const WeightedGraph& g, const Orientation& d) { return max_indegree(g, d); }

}  // namespace

TEST(RootTree, PathRootsAtMiddle) {
  const WeightedGraph p = path({1, 1});
  EXPECT_EQ(root_tree(p).root, 1U);
  EXPECT_EQ(root_tree(p, 0).root, 1U);  // a leaf does not qualify
}

TEST(RootTree, StarRootsAtCenter) {
  const WeightedGraph g = star(3);
  const RootedTree t = root_tree(g);
  EXPECT_EQ(t.root, 0U);
  EXPECT_EQ(t.children[0].size(), 3U);
  EXPECT_EQ(t.post_order.back(), 0U);
}

TEST(RootTree, PreferredRootIsUsed) {
  const WeightedGraph p = path({1, 1, 1});
  EXPECT_EQ(root_tree(p, 2).root, 2U);
}

TEST(RootTree, RejectsForest) {
  const WeightedGraph forest = build_graph(4, {{0, 1, 1}, {2, 3, 1}});
  EXPECT_THROW(root_tree(forest), std::invalid_argument);
}

TEST(TreeDecide, PathWithUnitWeights) {
  const WeightedGraph g = path({1, 1});
  const RootedTree t = root_tree(g);
  const auto tab = tree_decide(t, 1);
  ASSERT_TRUE(tab);
  const Orientation d = reconstruct_tree_witness(t, *tab);
  EXPECT_TRUE(is_proper(*t.graph, d));
  EXPECT_EQ(mu_minus(*t.graph, d), 1U);
  // Both arcs leave the center.
  EXPECT_EQ(compute_inweights(*t.graph, d).inweight[1], 0U);
  EXPECT_FALSE(tree_decide(t, 0));
}

TEST(TreeDecide, LeafTablesFollowBaseCase) {
  const WeightedGraph g = star(3, 2);
  const RootedTree t = root_tree(g);
  const auto tab = tree_decide(t, 4);
  ASSERT_TRUE(tab);
  for (Vertex leaf = 1; leaf <= 3; ++leaf) {
    for (Weight w = 0; w <= 4; ++w) {
      EXPECT_EQ(tab->rho(leaf, w), w == 0);
      EXPECT_EQ(tab->rho_prime(leaf, w), w == 2);
    }
  }
}

TEST(TreeDecide, UnitStarPointsOutOfCenter) {
  const WeightedGraph g = star(3);
  const RootedTree t = root_tree(g);
  const auto tab = tree_decide(t, 1);
  ASSERT_TRUE(tab);
  const Orientation d = reconstruct_tree_witness(t, *tab);
  EXPECT_EQ(compute_inweights(*t.graph, d).inweight, (std::vector<Weight>{0, 1, 1, 1}));
}

TEST(TreePo, SingleEdge) {
  const PoSolution s = tree_po(build_graph(2, {{0, 1, 5}}));
  EXPECT_EQ(s.po, 5U);
  EXPECT_EQ(mu_minus(build_graph(2, {{0, 1, 5}}), s.witness), 5U);
}

TEST(TreePo, SmallTrees) {
  EXPECT_EQ(tree_po(build_graph(1, {})).po, 0U);
  const PoSolution s = tree_po(path({1, 1}));
  EXPECT_EQ(s.po, 1U);
  EXPECT_TRUE(is_proper(path({1, 1}), s.witness));
}

TEST(TreePo, RejectsCycle) {
  EXPECT_THROW(tree_po(build_graph(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}})), std::invalid_argument);
}

TEST(TreePo, SubsetSumTreeOfOneTwo) {
  const WpoInstance inst = subsetsum_to_tree({1, 2}, 3);
  EXPECT_EQ(tree_po(inst.graph).po, 12U);
}

TEST(TreePo, MatchesOracleOnAllSmallShapes) {
  for (std::size_t n = 2; n <= 6; ++n) {
    for (const auto& shape : all_unlabeled_trees(n)) {
      for_each_weighting(shape.size(), 3, [&](const std::vector<Weight>& w) {
        const WeightedGraph g(n, with_weights(shape, w));
        const PoSolution s = tree_po(g);
        const auto oracle = brute_force_po(g);
        ASSERT_TRUE(oracle);
        EXPECT_EQ(s.po, oracle->po);
        EXPECT_TRUE(is_proper(g, s.witness));
        EXPECT_EQ(mu_minus(g, s.witness), s.po);
      });
    }
  }
}

TEST(TreePo, BoundsAndMonotonicity) {
  Rng rng(21);
  for (int trial = 0; trial < 150; ++trial) {
    const WeightedGraph g = random_tree(draw(rng, 3, 30), draw(rng, 1, 6), rng);
    const PoSolution s = tree_po(g);
    EXPECT_GE(s.po, g.max_weight());
    EXPECT_LE(s.po, 4 * g.max_weight());
    EXPECT_TRUE(is_proper(g, s.witness));
    EXPECT_EQ(mu_minus(g, s.witness), s.po);
    const RootedTree t = root_tree(g);
    bool previous = false;
    for (Weight k = 0; k <= 4 * g.max_weight() + 1; ++k) {
      const bool yes = tree_decide(t, k).has_value();
      EXPECT_TRUE(!previous || yes) << "decision not monotone at k=" << k;
      EXPECT_EQ(yes, k >= s.po);
      previous = yes;
    }
  }
}

TEST(TreePo, UnitTreesStayWithinFour) {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const WeightedGraph g = random_tree(draw(rng, 2, 60), 1, rng);
    EXPECT_LE(tree_po(g).po, 4U);
  }
}

TEST(TreeDecideOrientation, HandlesTinyTrees) {
  const WeightedGraph e = build_graph(2, {{0, 1, 4}});
  EXPECT_FALSE(tree_decide_orientation(e, 3));
  ASSERT_TRUE(tree_decide_orientation(e, 4));
  EXPECT_TRUE(tree_decide_orientation(build_graph(1, {}), 0));
}

TEST(Bound4, PathsUseIndegreeAtMostTwo) {
  for (std::size_t len = 1; len <= 8; ++len) {
    const WeightedGraph g = path(std::vector<Weight>(len, 1));
    const Orientation d = bound4_orientation(g);
    EXPECT_TRUE(is_proper(g, d));
    EXPECT_LE(max_in(g, d), 2U);
  }
}

TEST(Bound4, UnitStarOfSix) {
  const WeightedGraph g = star(6);
  const Orientation d = bound4_orientation(g);
  EXPECT_TRUE(is_proper(g, d));
  EXPECT_LE(max_in(g, d), 4U);
}

TEST(Bound4, RandomFiftyVertexTrees) {
  Rng rng(50);
  for (int trial = 0; trial < 100; ++trial) {
    const WeightedGraph g = random_tree(50, 9, rng);
    const Orientation d = bound4_orientation(g);
    EXPECT_TRUE(is_proper(g, d));
    EXPECT_LE(max_in(g, d), 4U);
    EXPECT_LE(mu_minus(g, d), 4 * g.max_weight());
  }
}

TEST(Bound4, RejectsCycle) {
  EXPECT_THROW(bound4_orientation(build_graph(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}})), std::invalid_argument);
}
