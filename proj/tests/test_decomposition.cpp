#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "wpo/generators.hpp"
#include "wpo/tree_decomposition.hpp"

using namespace wpo;

namespace {

WeightedGraph unit_triangle() { return build_graph(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}}); }

WeightedGraph cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n), 1});
  }
  return build_graph(n, edges);
}

WeightedGraph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      edges.push_back({u, v, 1});
    }
  }
  return build_graph(n, edges);
}

std::size_t count_kind(const NiceTreeDecomposition& ntd, NodeKind kind) {
  return static_cast<std::size_t>(
      std::count_if(ntd.nodes.begin(), ntd.nodes.end(), [&](const NiceNode& x) { return x.kind == kind; }));
}

int expect_condition(const WeightedGraph& g, const TreeDecomposition& td) {
  try {
    validate_td(g, td);
  } catch (const InvalidDecomposition& e) {
    return e.condition();
  }
  return -1;
}

}  // namespace

TEST(ValidateTd, SingleBagTriangle) {
  EXPECT_EQ(validate_td(unit_triangle(), {{{0, 1, 2}}, {}, 0}), 2);
}

TEST(ValidateTd, PathWithTwoBags) {
  const WeightedGraph p = build_graph(3, {{0, 1, 1}, {1, 2, 1}});
  EXPECT_EQ(validate_td(p, {{{0, 1}, {1, 2}}, {{0, 1}}, 0}), 1);
}

TEST(ValidateTd, TriangleEdgeUncovered) {
  const TreeDecomposition td{{{0, 1}, {1, 2}}, {{0, 1}}, 0};
  EXPECT_EQ(expect_condition(unit_triangle(), td), 2);
  try {
    validate_td(unit_triangle(), td);
  } catch (const InvalidDecomposition& e) {
    EXPECT_NE(std::string(e.what()).find("{0,2}"), std::string::npos);
  }
}

TEST(ValidateTd, ReportsEachCondition) {
  const WeightedGraph p = build_graph(3, {{0, 1, 1}, {1, 2, 1}});
  EXPECT_EQ(expect_condition(p, {{{0, 1}}, {}, 0}), 1);
  // Vertex 0 appears in two bags separated by one without it.
  const WeightedGraph q = build_graph(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}});
  EXPECT_EQ(expect_condition(q, {{{0, 1}, {1, 2}, {0, 2, 3}}, {{0, 1}, {1, 2}}, 0}), 3);
  // Bag tree with a cycle.
  EXPECT_EQ(expect_condition(p, {{{0, 1}, {1, 2}, {1}}, {{0, 1}, {1, 2}, {2, 0}}, 0}), 0);
  // Bag tree disconnected.
  EXPECT_EQ(expect_condition(p, {{{0, 1}, {1, 2}}, {}, 0}), 0);
}

TEST(Nicefy, TwoBagPath) {
  const TreeDecomposition td{{{0, 1}, {1, 2}}, {{0, 1}}, 0};
  const NiceTreeDecomposition ntd = nicefy(td);
  validate_nice_shape(ntd);
  EXPECT_EQ(count_kind(ntd, NodeKind::Introduce), 1U);
  EXPECT_EQ(count_kind(ntd, NodeKind::Forget), 1U);
  EXPECT_EQ(count_kind(ntd, NodeKind::Leaf), 1U);
  EXPECT_EQ(ntd.nodes.back().bag, (Bag{0, 1}));
}

TEST(Nicefy, SingleBag) {
  const NiceTreeDecomposition ntd = nicefy({{{0, 1, 2}}, {}, 0});
  ASSERT_EQ(ntd.nodes.size(), 1U);
  EXPECT_EQ(ntd.nodes[0].kind, NodeKind::Leaf);
  EXPECT_EQ(ntd.nodes[0].bag, (Bag{0, 1, 2}));
}

TEST(Nicefy, DegreeThreeBagBecomesJoinChain) {
  const WeightedGraph g = build_graph(5, {{0, 1, 1}, {1, 2, 1}, {1, 3, 1}, {1, 4, 1}});
  const TreeDecomposition td{{{0, 1}, {1, 2}, {1, 3}, {1, 4}}, {{0, 1}, {0, 2}, {0, 3}}, 0};
  const NiceTreeDecomposition ntd = nicefy(td);
  validate_nice_shape(ntd);
  EXPECT_EQ(count_kind(ntd, NodeKind::Join), 2U);
  for (const NiceNode& node : ntd.nodes) {
    EXPECT_LE(node.children.size(), 2U);
  }
  EXPECT_EQ(validate_td(g, ntd.to_tree_decomposition()), 1);
}

TEST(HeuristicTd, Examples) {
  const WeightedGraph tree = build_graph(6, {{0, 1, 1}, {1, 2, 1}, {1, 3, 1}, {3, 4, 1}, {3, 5, 1}});
  EXPECT_EQ(validate_td(tree, heuristic_td(tree)), 1);
  EXPECT_EQ(validate_td(cycle(5), heuristic_td(cycle(5))), 2);
  const TreeDecomposition k4 = heuristic_td(complete(4));
  EXPECT_EQ(validate_td(complete(4), k4), 3);
  EXPECT_EQ(k4.bags.size(), 1U);
}

TEST(HeuristicTd, DisconnectedAndEmptyGraphs) {
  const WeightedGraph forest = build_graph(5, {{0, 1, 1}, {3, 4, 1}});
  EXPECT_EQ(validate_td(forest, heuristic_td(forest)), 1);
  const WeightedGraph empty = build_graph(0, {});
  EXPECT_EQ(validate_td(empty, heuristic_td(empty)), -1);
}

TEST(Nicefy, PreservesWidthAndValidity) {
  Rng rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = draw(rng, 1, 12);
    const WeightedGraph g = random_connected_graph(n, draw(rng, 0, 3 * n), 3, rng);
    const TreeDecomposition td = heuristic_td(g);
    const int width = validate_td(g, td);
    const NiceTreeDecomposition ntd = nicefy(td);
    validate_nice_shape(ntd);
    EXPECT_EQ(validate_td(g, ntd.to_tree_decomposition()), width);
    EXPECT_EQ(ntd.width(), width);
  }
}

TEST(Nicefy, PartialTwoTreeDecompositions) {
  Rng rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const GraphWithDecomposition p = random_partial_2tree(draw(rng, 3, 40), 4, 40, rng);
    EXPECT_EQ(validate_td(p.graph, p.td), 2);
    EXPECT_EQ(validate_td(p.graph, nicefy(p.td).to_tree_decomposition()), 2);
  }
}
