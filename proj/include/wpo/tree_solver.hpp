#pragma once

// Exact weighted proper orientation on trees.
//
// tree_decide fills two feasibility tables bottom-up.  For a vertex v and a
// final inweight w <= k:
//   rho(v, w)       T_v has a proper orientation with inweight(v) = w and
//                   max inweight <= k, the parent edge pointing away from v;
//   rho_prime(v, w) the same with the parent edge pointing into v, so the
//                   children must supply w - w(v, parent) and v's final
//                   inweight w has to differ from each child's.
// Children whose only feasible inweights coincide with w are forced to one
// side; the remaining children are split by a subset-sum over their edge
// weights.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wpo/graph.hpp"
#include "wpo/subset_sum.hpp"

namespace wpo {

namespace detail {

inline void ensure(bool condition, const char* what) {
  if (!condition) {
    throw std::logic_error(what);
  }
}

inline bool is_connected(const WeightedGraph& g) {
  const std::size_t n = g.num_vertices();
  if (n == 0) {
    return true;
  }
  std::vector<std::uint8_t> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    for (const Incidence& inc : g.incident(x)) {
      if (!seen[inc.neighbor]) {
        seen[inc.neighbor] = 1;
        ++reached;
        stack.push_back(inc.neighbor);
      }
    }
  }
  return reached == n;
}

}  // namespace detail

inline bool is_tree(const WeightedGraph& g) {
  return g.num_vertices() >= 1 && g.num_edges() + 1 == g.num_vertices() && detail::is_connected(g);
}

inline void require_tree(const WeightedGraph& g) {
  if (!is_tree(g)) {
    throw std::invalid_argument("graph is not a tree (" + std::to_string(g.num_vertices()) + " vertices, " +
                                std::to_string(g.num_edges()) + " edges" +
                                (detail::is_connected(g) ? ")" : ", disconnected)"));
  }
}

/// A tree with a chosen root.  Holds a non-owning pointer to the graph,
/// which must outlive it.
struct RootedTree {
  const WeightedGraph* graph = nullptr;
  Vertex root = 0;
  std::vector<Vertex> parent;       // kNoVertex at the root
  std::vector<EdgeId> parent_edge;  // unused at the root
  std::vector<std::vector<Vertex>> children;
  std::vector<Vertex> post_order;   // children before parents

  Weight parent_weight(Vertex v) const { return graph->edge(parent_edge[v]).w; }
  bool is_root(Vertex v) const { return v == root; }
};

namespace detail {

inline RootedTree root_at(const WeightedGraph& t, Vertex root) {
  const std::size_t n = t.num_vertices();
  RootedTree rt;
  rt.graph = &t;
  rt.root = root;
  rt.parent.assign(n, kNoVertex);
  rt.parent_edge.assign(n, 0);
  rt.children.assign(n, {});
  std::vector<Vertex> order;
  order.reserve(n);
  order.push_back(root);
  std::vector<std::uint8_t> seen(n, 0);
  seen[root] = 1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Vertex x = order[i];
    for (const Incidence& inc : t.incident(x)) {
      if (!seen[inc.neighbor]) {
        seen[inc.neighbor] = 1;
        rt.parent[inc.neighbor] = x;
        rt.parent_edge[inc.neighbor] = inc.edge;
        rt.children[x].push_back(inc.neighbor);
        order.push_back(inc.neighbor);
      }
    }
  }
  rt.post_order.assign(order.rbegin(), order.rend());
  return rt;
}

}  // namespace detail

/// Roots a tree on at least three vertices at a vertex of degree >= 2:
/// `preferred` when it qualifies, else the lowest-indexed qualifying vertex.
inline RootedTree root_tree(const WeightedGraph& t, std::optional<Vertex> preferred = std::nullopt) {
  require_tree(t);
  if (t.num_vertices() < 3) {
    throw std::invalid_argument("rooting needs a tree with at least 3 vertices");
  }
  Vertex root = kNoVertex;
  if (preferred && *preferred < t.num_vertices() && t.degree(*preferred) >= 2) {
    root = *preferred;
  } else {
    for (Vertex v = 0; v < t.num_vertices(); ++v) {
      if (t.degree(v) >= 2) {
        root = v;
        break;
      }
    }
  }
  return detail::root_at(t, root);
}

// RootedTree keeps a pointer to the graph, so temporaries are refused.
RootedTree root_tree(WeightedGraph&&, std::optional<Vertex> = std::nullopt) = delete;

/// The rho / rho_prime tables for one bound k, rows indexed by vertex.
class TreeDPTables {
 public:
  TreeDPTables(std::size_t n, Weight k)
      : k_(k),
        stride_(static_cast<std::size_t>(k) + 1),
        rho_(n * stride_, 0),
        rho_prime_(n * stride_, 0),
        rho_ones_(n, 0),
        rho_prime_ones_(n, 0) {}

  Weight k() const { return k_; }

  bool rho(Vertex v, Weight w) const { return w <= k_ && rho_[index(v, w)] != 0; }
  bool rho_prime(Vertex v, Weight w) const { return w <= k_ && rho_prime_[index(v, w)] != 0; }

  /// Number of feasible inweights in v's row.
  std::size_t rho_count(Vertex v) const { return rho_ones_[v]; }
  std::size_t rho_prime_count(Vertex v) const { return rho_prime_ones_[v]; }

  void set_rho(Vertex v, Weight w) {
    auto& cell = rho_[index(v, w)];
    rho_ones_[v] += cell == 0;
    cell = 1;
  }
  void set_rho_prime(Vertex v, Weight w) {
    auto& cell = rho_prime_[index(v, w)];
    rho_prime_ones_[v] += cell == 0;
    cell = 1;
  }

 private:
  std::size_t index(Vertex v, Weight w) const { return v * stride_ + static_cast<std::size_t>(w); }

  Weight k_;
  std::size_t stride_;
  std::vector<std::uint8_t> rho_;
  std::vector<std::uint8_t> rho_prime_;
  std::vector<std::size_t> rho_ones_;
  std::vector<std::size_t> rho_prime_ones_;
};

namespace detail {

// Children of v partitioned for one target inweight w.
struct ChildSplit {
  bool blocked = false;              // some child is forced both ways
  Weight forced_in_weight = 0;       // total weight of edges forced toward v
  std::vector<Vertex> forced_out;    // F+: edge must point at the child
  std::vector<Vertex> forced_in;     // F-: edge must point at v
  std::vector<Vertex> free;          // N
  std::vector<Weight> free_weights;  // edge weights of N, same order

  void clear() {
    blocked = false;
    forced_in_weight = 0;
    forced_out.clear();
    forced_in.clear();
    free.clear();
    free_weights.clear();
  }
};

inline void classify_children(const RootedTree& t, const TreeDPTables& tab, Vertex v, Weight w, ChildSplit& out) {
  out.clear();
  for (Vertex c : t.children[v]) {
    // "every w' != w is infeasible" <=> the row has no 1 outside column w.
    const bool no_rho = tab.rho_count(c) - (tab.rho(c, w) ? 1 : 0) == 0;
    const bool no_rho_prime = tab.rho_prime_count(c) - (tab.rho_prime(c, w) ? 1 : 0) == 0;
    const Weight ew = t.parent_weight(c);
    if (no_rho && no_rho_prime) {
      out.blocked = true;
      return;
    }
    if (no_rho) {
      out.forced_out.push_back(c);
    } else if (no_rho_prime) {
      out.forced_in.push_back(c);
      out.forced_in_weight += ew;
    } else {
      out.free.push_back(c);
      out.free_weights.push_back(ew);
    }
  }
}

// Inweight v still needs from its free children, or nullopt when negative.
inline std::optional<Weight> free_target(const RootedTree& t, const ChildSplit& split, Vertex v, Weight w,
                                         bool parent_edge_in) {
  Weight need = split.forced_in_weight;
  if (parent_edge_in) {
    need += t.parent_weight(v);
  }
  if (need > w) {
    return std::nullopt;
  }
  return w - need;
}

inline constexpr Weight kMaxTableBound = Weight{1} << 24;

}  // namespace detail

/// Decides whether po(T) <= k.  Returns the filled tables on yes.  Bounds
/// below the heaviest edge are answered no without filling anything.
inline std::optional<TreeDPTables> tree_decide(const RootedTree& t, Weight k) {
  const WeightedGraph& g = *t.graph;
  if (k < g.max_weight()) {
    return std::nullopt;
  }
  if (k >= detail::kMaxTableBound) {
    throw std::length_error("bound " + std::to_string(k) + " is too large for the tree tables");
  }
  TreeDPTables tab(g.num_vertices(), k);
  detail::ChildSplit split;
  detail::BitRow reach(static_cast<std::size_t>(k) + 1);
  for (Vertex v : t.post_order) {
    const bool root = t.is_root(v);
    for (Weight w = 0; w <= k; ++w) {
      detail::classify_children(t, tab, v, w, split);
      if (split.blocked) {
        continue;
      }
      reach.reset();
      reach.set(0);
      for (Weight x : split.free_weights) {
        reach.or_shifted_self(static_cast<std::size_t>(x));
      }
      if (auto need = detail::free_target(t, split, v, w, false); need && reach.test(*need)) {
        tab.set_rho(v, w);
      }
      if (!root) {
        if (auto need = detail::free_target(t, split, v, w, true); need && reach.test(*need)) {
          tab.set_rho_prime(v, w);
        }
      }
    }
  }
  if (tab.rho_count(t.root) == 0) {
    return std::nullopt;
  }
  return tab;
}

/// Top-down pass turning yes-tables into an orientation with max inweight
/// <= k.  Children get the lowest feasible inweight different from their
/// parent's.
inline Orientation reconstruct_tree_witness(const RootedTree& t, const TreeDPTables& tab) {
  const WeightedGraph& g = *t.graph;
  Orientation d(g.num_edges());

  auto lowest = [&](Vertex c, Weight avoid, bool prime) -> Weight {
    for (Weight x = 0; x <= tab.k(); ++x) {
      if (x != avoid && (prime ? tab.rho_prime(c, x) : tab.rho(c, x))) {
        return x;
      }
    }
    throw std::logic_error("tree tables offer no inweight for a child");
  };

  struct Frame {
    Vertex v;
    Weight w;
    bool parent_edge_in;
  };
  std::vector<Frame> stack;
  {
    Weight w0 = 0;
    while (w0 <= tab.k() && !tab.rho(t.root, w0)) {
      ++w0;
    }
    detail::ensure(w0 <= tab.k(), "tree tables do not certify a yes-instance");
    stack.push_back({t.root, w0, false});
  }

  detail::ChildSplit split;
  std::vector<std::uint8_t> inward(g.num_vertices(), 0);
  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    detail::classify_children(t, tab, f.v, f.w, split);
    detail::ensure(!split.blocked, "tree reconstruction hit a blocked entry");
    const auto need = detail::free_target(t, split, f.v, f.w, f.parent_edge_in);
    detail::ensure(need.has_value(), "tree reconstruction needs a negative inweight");
    const auto chosen = subset_sum(split.free_weights, *need);
    detail::ensure(chosen.has_value(), "tree reconstruction found no subset-sum witness");

    for (Vertex c : split.forced_in) {
      inward[c] = 1;
    }
    for (std::size_t idx : *chosen) {
      inward[split.free[idx]] = 1;
    }
    for (Vertex c : t.children[f.v]) {
      const EdgeId e = t.parent_edge[c];
      if (inward[c]) {
        d.point_to(g, e, f.v);
        stack.push_back({c, lowest(c, f.w, false), false});
      } else {
        d.point_to(g, e, c);
        stack.push_back({c, lowest(c, f.w, true), true});
      }
    }
  }
  return d;
}

/// po(T, w) with a witness.  The answer lies in [K, 4K]; binary search
/// over that range using tree_decide.
inline PoSolution tree_po(const WeightedGraph& t) {
  require_tree(t);
  const std::size_t n = t.num_vertices();
  if (n == 1) {
    return {0, Orientation(0)};
  }
  if (n == 2) {
    return {t.edge(0).w, Orientation(1, true)};
  }
  const RootedTree rooted = root_tree(t);
  const Weight big_k = t.max_weight();
  Weight lo = big_k;
  Weight hi = checked_mul(big_k, 4);
  std::optional<TreeDPTables> best = tree_decide(rooted, hi);
  detail::ensure(best.has_value(), "tree exceeds the 4K bound");
  while (lo < hi) {
    const Weight mid = lo + (hi - lo) / 2;
    if (auto tab = tree_decide(rooted, mid)) {
      hi = mid;
      best = std::move(tab);
    } else {
      lo = mid + 1;
    }
  }
  PoSolution sol{lo, reconstruct_tree_witness(rooted, *best)};
  detail::ensure(is_proper(t, sol.witness) && mu_minus(t, sol.witness) == lo,
                 "tree witness does not match the computed optimum");
  return sol;
}

/// Decision form on an unrooted tree: a proper orientation with mu^- <= k,
/// or nullopt.  Trees with at most two vertices are answered directly.
inline std::optional<Orientation> tree_decide_orientation(const WeightedGraph& t, Weight k) {
  require_tree(t);
  if (t.num_vertices() <= 2) {
    if (k < t.max_weight()) {
      return std::nullopt;
    }
    return Orientation(t.num_edges(), true);
  }
  const RootedTree rooted = root_tree(t);
  if (auto tab = tree_decide(rooted, k)) {
    return reconstruct_tree_witness(rooted, *tab);
  }
  return std::nullopt;
}

/// A proper orientation of a tree in which every vertex has indegree <= 4.
///
/// Rooted at a leaf, a vertex of degree >= 3 all of whose descendants have
/// degree <= 2 hangs q >= 2 paths.  Such vertices are cut off bottom-up until
/// a path remains; the path is oriented by parity, then the cut subtrees are
/// re-attached in reverse order.  Attaching never changes an inweight that
/// is already fixed.
inline Orientation bound4_orientation(const WeightedGraph& t) {
  require_tree(t);
  const std::size_t n = t.num_vertices();
  if (n <= 1) {
    return Orientation(t.num_edges());
  }
  Vertex leaf = 0;
  while (t.degree(leaf) != 1) {
    ++leaf;
  }
  const RootedTree rt = detail::root_at(t, leaf);

  // Depth parity gives the base orientation; only the final path keeps it.
  std::vector<std::uint8_t> parity(n, 0);
  for (auto it = rt.post_order.rbegin(); it != rt.post_order.rend(); ++it) {
    if (*it != rt.root) {
      parity[*it] = parity[rt.parent[*it]] ^ 1;
    }
  }
  Orientation d = bipartition_orientation(t, parity);

  struct Cut {
    Vertex v;
    std::vector<Vertex> children;  // children still attached when cut
  };
  std::vector<Cut> cuts;
  std::vector<std::uint8_t> detached(n, 0);
  for (Vertex v : rt.post_order) {
    if (v == rt.root) {
      continue;
    }
    std::vector<Vertex> kept;
    for (Vertex c : rt.children[v]) {
      if (!detached[c]) {
        kept.push_back(c);
      }
    }
    if (kept.size() >= 2) {
      detached[v] = 1;
      cuts.push_back({v, std::move(kept)});
    }
  }

  std::vector<std::uint8_t> placed(n, 0);
  auto place = [&](Vertex x) { placed[x] = 1; };
  // Everything outside the detached subtrees is the base path.
  for (auto it = rt.post_order.rbegin(); it != rt.post_order.rend(); ++it) {
    const Vertex x = *it;
    if (detached[x]) {
      continue;
    }
    if (x == rt.root || placed[rt.parent[x]]) {
      place(x);
    }
  }
  // A vertex's inweight is final once it and the neighbors feeding it are placed.
  auto inweight_of = [&](Vertex x) {
    Weight sum = 0;
    for (const Incidence& inc : t.incident(x)) {
      if (placed[inc.neighbor] && d.head(t, inc.edge) == x) {
        sum += t.edge(inc.edge).w;
      }
    }
    return sum;
  };

  // The path hanging below child c of a cut vertex (c first).
  auto path_below = [&](Vertex c) {
    std::vector<Vertex> path{c};
    for (;;) {
      Vertex next = kNoVertex;
      for (Vertex y : rt.children[path.back()]) {
        if (!detached[y]) {
          next = y;
        }
      }
      if (next == kNoVertex) {
        break;
      }
      path.push_back(next);
    }
    return path;
  };
  // Orients a path's edges so that every even position (A side) is a tail
  // (a_to_b) or every odd position (B side) is a tail.
  auto orient_path = [&](const std::vector<Vertex>& path, bool a_to_b) {
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      const EdgeId e = rt.parent_edge[path[i + 1]];
      const bool even_is_tail = a_to_b;
      const Vertex even = (i % 2 == 0) ? path[i] : path[i + 1];
      const Vertex odd = (i % 2 == 0) ? path[i + 1] : path[i];
      d.point_to(t, e, even_is_tail ? odd : even);
    }
  };
  auto weight_below = [&](const std::vector<Vertex>& path) -> std::optional<Weight> {
    if (path.size() < 2) {
      return std::nullopt;
    }
    return t.edge(rt.parent_edge[path[1]]).w;
  };

  for (auto it = cuts.rbegin(); it != cuts.rend(); ++it) {
    const Vertex v = it->v;
    const Vertex u = rt.parent[v];
    std::vector<Vertex> kids = it->children;
    std::stable_sort(kids.begin(), kids.end(), [&](Vertex a, Vertex b) {
      return t.edge(rt.parent_edge[a]).w > t.edge(rt.parent_edge[b]).w;
    });
    const std::size_t q = kids.size();
    std::vector<std::vector<Vertex>> paths;
    std::vector<Weight> wi;
    for (Vertex c : kids) {
      paths.push_back(path_below(c));
      wi.push_back(t.edge(rt.parent_edge[c]).w);
    }
    const Weight w_uv = t.edge(rt.parent_edge[v]).w;
    const Weight c_sum = w_uv + wi[0] + wi[1];
    const Weight u_in = inweight_of(u);
    d.point_to(t, rt.parent_edge[v], v);

    auto inward_children = [&](std::size_t count) {
      Weight v_in = w_uv;
      for (std::size_t i = 0; i < count; ++i) {
        d.point_to(t, rt.parent_edge[kids[i]], v);
        orient_path(paths[i], true);
        v_in += wi[i];
      }
      for (std::size_t i = count; i < q; ++i) {
        d.point_to(t, rt.parent_edge[kids[i]], kids[i]);
        const auto below = weight_below(paths[i]);
        // v_i gets w_i, plus the edge below it when the path is flipped.
        orient_path(paths[i], !(below && *below != v_in - wi[i]));
      }
    };

    if (u_in != c_sum) {
      inward_children(2);
    } else if (q >= 3) {
      inward_children(3);
    } else {
      std::array<Weight, 2> ci{};
      for (std::size_t i = 0; i < 2; ++i) {
        ci[i] = wi[i] + weight_below(paths[i]).value_or(0);
      }
      if (ci[0] != w_uv && ci[1] != w_uv) {
        for (std::size_t i = 0; i < 2; ++i) {
          d.point_to(t, rt.parent_edge[kids[i]], kids[i]);
          orient_path(paths[i], false);
        }
      } else {
        const std::size_t i = ci[0] == w_uv ? 0 : 1;
        const std::size_t j = 1 - i;
        d.point_to(t, rt.parent_edge[kids[j]], v);
        d.point_to(t, rt.parent_edge[kids[i]], kids[i]);
        orient_path(paths[i], false);
        orient_path(paths[j], true);
      }
    }

    place(v);
    for (const auto& path : paths) {
      for (Vertex x : path) {
        place(x);
      }
    }
  }
  detail::ensure(is_proper(t, d) && max_indegree(t, d) <= 4, "indegree-4 construction failed");
  return d;
}

}  // namespace wpo
