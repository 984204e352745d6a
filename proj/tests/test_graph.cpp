#include <gtest/gtest.h>

#include <numeric>
#include <vector>

#include "wpo/generators.hpp"
#include "wpo/graph.hpp"

using namespace wpo;

namespace {

WeightedGraph unit_triangle() { return build_graph(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}}); }

// Cyclic 0->1->2->0 over the stored edges (0,1), (1,2), (0,2).
Orientation cyclic_triangle() {
  Orientation d(3);
  d.set_toward_v(0, true);
  d.set_toward_v(1, true);
  d.set_toward_v(2, false);
  return d;
}

}  // namespace

TEST(BuildGraph, SingleEdge) {
  const WeightedGraph g = build_graph(2, {{0, 1, 5}});
  EXPECT_EQ(g.num_vertices(), 2U);
  EXPECT_EQ(g.num_edges(), 1U);
  EXPECT_EQ(g.max_weight(), 5U);
}

TEST(BuildGraph, UnitTriangle) {
  const WeightedGraph g = unit_triangle();
  EXPECT_EQ(g.num_edges(), 3U);
  EXPECT_EQ(g.max_weight(), 1U);
  for (Vertex v = 0; v < 3; ++v) {
    EXPECT_EQ(g.degree(v), 2U);
  }
  EXPECT_EQ(g.find_edge(2, 0), std::optional<EdgeId>(2));
}

TEST(BuildGraph, RejectsDuplicateEdge) {
  EXPECT_THROW(build_graph(3, {{0, 1, 1}, {0, 1, 2}}), std::invalid_argument);
  EXPECT_THROW(build_graph(3, {{0, 1, 1}, {1, 0, 2}}), std::invalid_argument);
}

TEST(BuildGraph, RejectsBadEdges) {
  EXPECT_THROW(build_graph(2, {{1, 1, 1}}), std::invalid_argument);
  EXPECT_THROW(build_graph(2, {{0, 1, 0}}), std::invalid_argument);
  EXPECT_THROW(build_graph(2, {{0, 2, 1}}), std::invalid_argument);
}

TEST(BuildGraph, RejectsWeightOverflow) {
  const Weight big = std::numeric_limits<Weight>::max() / 2 + 1;
  EXPECT_THROW(build_graph(3, {{0, 1, big}, {1, 2, big}}), std::overflow_error);
}

TEST(BuildGraph, EdgelessIsLegal) {
  const WeightedGraph g = build_graph(3, {});
  EXPECT_EQ(g.max_weight(), 0U);
  EXPECT_EQ(mu_minus(g, Orientation(0)), 0U);
  EXPECT_TRUE(is_proper(g, Orientation(0)));
}

TEST(ComputeInweights, SingleArc) {
  const WeightedGraph g = build_graph(2, {{0, 1, 5}});
  const InweightProfile p = compute_inweights(g, Orientation(1, true));
  EXPECT_EQ(p.inweight, (std::vector<Weight>{0, 5}));
  EXPECT_EQ(p.outweight, (std::vector<Weight>{5, 0}));
  EXPECT_EQ(mu_minus(p), 5U);
}

TEST(ComputeInweights, CyclicTriangle) {
  const InweightProfile p = compute_inweights(unit_triangle(), cyclic_triangle());
  EXPECT_EQ(p.inweight, (std::vector<Weight>{1, 1, 1}));
  EXPECT_EQ(mu_minus(p), 1U);
}

TEST(ComputeInweights, PathIntoCenter) {
  const WeightedGraph g = build_graph(3, {{0, 1, 1}, {1, 2, 1}});
  Orientation d(2);
  d.point_to(g, 0, 1);
  d.point_to(g, 1, 1);
  const InweightProfile p = compute_inweights(g, d);
  EXPECT_EQ(p.inweight, (std::vector<Weight>{0, 2, 0}));
  EXPECT_EQ(mu_minus(p), 2U);
}

TEST(ComputeInweights, RejectsWrongLength) {
  EXPECT_THROW(compute_inweights(unit_triangle(), Orientation(2)), std::invalid_argument);
}

TEST(IsProper, Examples) {
  EXPECT_TRUE(is_proper(build_graph(2, {{0, 1, 5}}), Orientation(1, true)));
  EXPECT_FALSE(is_proper(unit_triangle(), cyclic_triangle()));
  EXPECT_EQ(find_conflict(unit_triangle(), cyclic_triangle()), std::optional<EdgeId>(0));

  const WeightedGraph path = build_graph(3, {{0, 1, 1}, {1, 2, 1}});
  Orientation inward(2);
  inward.point_to(path, 0, 1);
  inward.point_to(path, 1, 1);
  EXPECT_TRUE(is_proper(path, inward));
}

TEST(BipartitionOrientation, Path) {
  const WeightedGraph g = build_graph(3, {{0, 1, 1}, {1, 2, 1}});
  const std::vector<std::uint8_t> side{0, 1, 0};
  const Orientation d = bipartition_orientation(g, side);
  EXPECT_EQ(d.head(g, 0), 1U);
  EXPECT_EQ(d.head(g, 1), 1U);
  EXPECT_EQ(compute_inweights(g, d).inweight, (std::vector<Weight>{0, 2, 0}));
  EXPECT_TRUE(is_proper(g, d));
}

TEST(BipartitionOrientation, SingleEdge) {
  const WeightedGraph g = build_graph(2, {{0, 1, 7}});
  const std::vector<std::uint8_t> side{0, 1};
  const Orientation d = bipartition_orientation(g, side);
  EXPECT_EQ(d.tail(g, 0), 0U);
  EXPECT_EQ(d.head(g, 0), 1U);
}

TEST(BipartitionOrientation, RejectsTriangle) {
  for (unsigned mask = 0; mask < 8; ++mask) {
    const std::vector<std::uint8_t> side{static_cast<std::uint8_t>(mask & 1), static_cast<std::uint8_t>((mask >> 1) & 1),
                                         static_cast<std::uint8_t>((mask >> 2) & 1)};
    EXPECT_THROW(bipartition_orientation(unit_triangle(), side), std::invalid_argument);
  }
}

TEST(CoreProperties, ConservationReversalAndHeaviestEdge) {
  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = draw(rng, 2, 9);
    const WeightedGraph g = random_connected_graph(n, draw(rng, n - 1, 2 * n), 7, rng);
    Orientation d(g.num_edges());
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      d.set_toward_v(e, draw(rng, 0, 1) == 1);
    }
    const InweightProfile p = compute_inweights(g, d);
    EXPECT_EQ(std::accumulate(p.inweight.begin(), p.inweight.end(), Weight{0}), g.total_weight());
    EXPECT_EQ(std::accumulate(p.outweight.begin(), p.outweight.end(), Weight{0}), g.total_weight());
    for (Vertex v = 0; v < n; ++v) {
      EXPECT_EQ(p.inweight[v] + p.outweight[v], g.incident_weight(v));
    }
    const InweightProfile r = compute_inweights(g, d.reversed());
    EXPECT_EQ(r.inweight, p.outweight);
    EXPECT_EQ(r.outweight, p.inweight);
    EXPECT_GE(mu_minus(p), g.max_weight());

    bool proper = true;
    for (const Edge& e : g.edges()) {
      proper = proper && p.inweight[e.u] != p.inweight[e.v];
    }
    EXPECT_EQ(is_proper(g, d), proper);
  }
}
