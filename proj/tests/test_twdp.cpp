#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "wpo/generators.hpp"
#include "wpo/oracle.hpp"
#include "wpo/tree_solver.hpp"
#include "wpo/twdp.hpp"

using namespace wpo;

namespace {

WeightedGraph unit_triangle() { return build_graph(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}}); }

NiceTreeDecomposition nice_for(const WeightedGraph& g) { return nicefy(heuristic_td(g)); }

std::vector<Weight> sorted_inweights(const WeightedGraph& g, const Orientation& d) {
  auto in = compute_inweights(g, d).inweight;
  std::sort(in.begin(), in.end());
  return in;
}

}  // namespace

TEST(TwdpDecide, UnitTriangle) {
  const WeightedGraph g = unit_triangle();
  const auto d = twdp_decide(g, 2, nice_for(g));
  ASSERT_TRUE(d);
  EXPECT_TRUE(is_proper(g, *d));
  EXPECT_EQ(sorted_inweights(g, *d), (std::vector<Weight>{0, 1, 2}));
  EXPECT_FALSE(twdp_decide(g, 1, nice_for(g)));
}

TEST(TwdpDecide, UnitFourCycle) {
  const WeightedGraph g = build_graph(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}});
  const auto d = twdp_decide(g, 2, nice_for(g));
  ASSERT_TRUE(d);
  EXPECT_TRUE(is_proper(g, *d));
  EXPECT_LE(mu_minus(g, *d), 2U);
  EXPECT_FALSE(twdp_decide(g, 1, nice_for(g)));
}

TEST(TwdpPo, Examples) {
  const WeightedGraph tri = unit_triangle();
  const auto a = twdp_po(tri, nice_for(tri));
  ASSERT_TRUE(a);
  EXPECT_EQ(a->po, 2U);
  EXPECT_TRUE(is_proper(tri, a->witness));

  const WeightedGraph edge = build_graph(2, {{0, 1, 5}});
  const auto b = twdp_po(edge, nice_for(edge));
  ASSERT_TRUE(b);
  EXPECT_EQ(b->po, 5U);

  const WeightedGraph path = build_graph(3, {{0, 1, 1}, {1, 2, 1}});
  const auto c = twdp_po(path, nice_for(path));
  ASSERT_TRUE(c);
  EXPECT_EQ(c->po, 1U);
  EXPECT_EQ(compute_inweights(path, c->witness).inweight[1], 0U);
  EXPECT_EQ(c->po, tree_po(path).po);
}

TEST(TwdpPo, EdgelessGraph) {
  const WeightedGraph g = build_graph(3, {});
  const auto s = twdp_po(g, nice_for(g));
  ASSERT_TRUE(s);
  EXPECT_EQ(s->po, 0U);
}

TEST(TwdpPo, RejectsInvalidDecomposition) {
  const WeightedGraph g = unit_triangle();
  const NiceTreeDecomposition bad = nicefy({{{0, 1}, {1, 2}}, {{0, 1}}, 0});
  EXPECT_THROW(twdp_po(g, bad), InvalidDecomposition);
  EXPECT_THROW(twdp_decide(g, 3, bad), InvalidDecomposition);
}

TEST(TwdpPo, CapStopsTheSearch) {
  const WeightedGraph g = unit_triangle();
  EXPECT_FALSE(twdp_po_capped(g, nice_for(g), 1));
  const auto s = twdp_po_capped(g, nice_for(g), 2);
  ASSERT_TRUE(s);
  EXPECT_EQ(s->po, 2U);
}

TEST(TwdpPo, MatchesOracleOnSmallConnectedGraphs) {
  Rng rng(2024);
  for (int trial = 0; trial < 250; ++trial) {
    const std::size_t n = draw(rng, 1, 6);
    const std::size_t max_m = std::min<std::size_t>(9, n * (n - 1) / 2);
    const WeightedGraph g = random_connected_graph(n, draw(rng, n - 1, max_m), 2, rng);
    const auto oracle = brute_force_po(g);
    const auto s = twdp_po(g, nice_for(g));
    ASSERT_EQ(s.has_value(), oracle.has_value());
    if (s) {
      EXPECT_EQ(s->po, oracle->po);
      EXPECT_TRUE(is_proper(g, s->witness));
      EXPECT_LE(mu_minus(g, s->witness), s->po);
    }
  }
}

TEST(TwdpPo, AgreesWithTreeSolver) {
  Rng rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    const WeightedGraph g = random_tree(draw(rng, 2, 40), draw(rng, 1, 5), rng);
    const auto s = twdp_po(g, nice_for(g));
    ASSERT_TRUE(s);
    EXPECT_EQ(s->po, tree_po(g).po);
  }
}

TEST(TwdpDecide, MonotoneInK) {
  Rng rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = draw(rng, 2, 6);
    const WeightedGraph g = random_connected_graph(n, draw(rng, n - 1, std::min(n * (n - 1) / 2, n + 3)), 3, rng);
    const NiceTreeDecomposition ntd = nice_for(g);
    bool previous = false;
    for (Weight k = 0; k <= g.max_weight() + 8; ++k) {
      const bool yes = twdp_decide(g, k, ntd).has_value();
      EXPECT_TRUE(!previous || yes) << "k=" << k;
      previous = yes;
    }
  }
}

TEST(TwdpTables, LeafEntriesAreRealizedByTheirOwnBagOrientation) {
  Rng rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = draw(rng, 2, 6);
    const WeightedGraph g = random_connected_graph(n, draw(rng, n - 1, 2 * n), 3, rng);
    const NiceTreeDecomposition ntd = nice_for(g);
    const Weight k = g.max_weight() + draw(rng, 0, 3);
    std::vector<detail::NodeLayout> layouts = detail::make_layouts(g, ntd);
    detail::TwdpEngine<2> engine(g, ntd, layouts, k);
    engine.run();
    for (std::size_t t = 0; t < ntd.nodes.size(); ++t) {
      if (ntd.nodes[t].kind != NodeKind::Leaf) {
        continue;
      }
      const detail::NodeLayout& l = layouts[t];
      for (const detail::DpState& s : engine.decoded_table(t)) {
        std::array<Weight, detail::kMaxDpBag> o{};
        l.local_inweight(s.orient, o);
        for (std::size_t i = 0; i < l.size(); ++i) {
          EXPECT_EQ(s.a[i], o[i]);
          EXPECT_LE(s.a[i], s.d[i]);
          EXPECT_LE(s.d[i], k);
        }
        for (const detail::BagEdge& e : l.edges) {
          EXPECT_NE(s.d[e.i], s.d[e.j]);
        }
      }
    }
  }
}

TEST(TwdpDecide, SuppliedWidthTwoDecompositions) {
  Rng rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const GraphWithDecomposition p = random_partial_2tree(draw(rng, 3, 8), 3, 50, rng);
    if (p.graph.num_edges() > 14) {
      continue;
    }
    const auto oracle = brute_force_po(p.graph);
    const auto s = twdp_po(p.graph, nicefy(p.td));
    ASSERT_EQ(s.has_value(), oracle.has_value());
    if (s) {
      EXPECT_EQ(s->po, oracle->po);
    }
  }
}
