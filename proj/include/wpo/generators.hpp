#pragma once

// Seeded random instances and tree enumeration.  All randomness goes
// through std::mt19937_64, whose output sequence is fixed by the standard;
// bounded draws use plain modular reduction so results do not depend on the
// standard library's distribution implementations.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wpo/graph.hpp"
#include "wpo/tree_decomposition.hpp"

namespace wpo {

using Rng = std::mt19937_64;

/// Uniform-ish integer in [lo, hi]; the modulo bias is negligible for the
/// small ranges used here.
inline std::uint64_t draw(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  if (hi < lo) {
    throw std::invalid_argument("empty draw range");
  }
  const std::uint64_t span = hi - lo + 1;
  return span == 0 ? rng() : lo + rng() % span;
}

/// The tree encoded by a Pruefer sequence over 0..n-1 (n = size + 2).
inline std::vector<std::pair<Vertex, Vertex>> pruefer_decode(const std::vector<Vertex>& seq) {
  const std::size_t n = seq.size() + 2;
  std::vector<std::size_t> degree(n, 1);
  for (Vertex x : seq) {
    if (x >= n) {
      throw std::invalid_argument("Pruefer entry out of range");
    }
    ++degree[x];
  }
  std::set<Vertex> leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 1) {
      leaves.insert(v);
    }
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex x : seq) {
    const Vertex leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
    if (--degree[x] == 1) {
      leaves.insert(x);
    }
  }
  const Vertex a = *leaves.begin();
  const Vertex b = *std::next(leaves.begin());
  edges.emplace_back(a, b);
  return edges;
}

inline std::vector<Edge> with_weights(const std::vector<std::pair<Vertex, Vertex>>& shape,
                                      const std::vector<Weight>& weights) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    out.push_back({shape[i].first, shape[i].second, weights.at(i)});
  }
  return out;
}

/// Uniformly random labeled tree shape on n vertices.
inline std::vector<std::pair<Vertex, Vertex>> random_tree_shape(std::size_t n, Rng& rng) {
  if (n <= 1) {
    return {};
  }
  if (n == 2) {
    return {{0, 1}};
  }
  std::vector<Vertex> seq(n - 2);
  for (Vertex& x : seq) {
    x = static_cast<Vertex>(draw(rng, 0, n - 1));
  }
  return pruefer_decode(seq);
}

/// Random tree with weights drawn from [1, max_weight].
inline WeightedGraph random_tree(std::size_t n, Weight max_weight, Rng& rng) {
  const auto shape = random_tree_shape(n, rng);
  std::vector<Weight> w(shape.size());
  for (Weight& x : w) {
    x = draw(rng, 1, max_weight);
  }
  return WeightedGraph(n, with_weights(shape, w));
}

/// Random connected graph: a random spanning tree plus distinct extra edges
/// until m edges are present (m is capped at n(n-1)/2).
inline WeightedGraph random_connected_graph(std::size_t n, std::size_t m, Weight max_weight, Rng& rng) {
  auto shape = random_tree_shape(n, rng);
  std::set<std::pair<Vertex, Vertex>> present(shape.begin(), shape.end());
  const std::size_t complete = n * (n - 1) / 2;
  m = std::min(std::max(m, shape.size()), complete);
  std::vector<std::pair<Vertex, Vertex>> missing;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!present.count({u, v})) {
        missing.emplace_back(u, v);
      }
    }
  }
  for (std::size_t i = 0; shape.size() < m; ++i) {
    const std::size_t j = i + draw(rng, 0, missing.size() - 1 - i);
    std::swap(missing[i], missing[j]);
    shape.push_back(missing[i]);
  }
  std::vector<Weight> w(shape.size());
  for (Weight& x : w) {
    x = draw(rng, 1, max_weight);
  }
  return WeightedGraph(n, with_weights(shape, w));
}

struct GraphWithDecomposition {
  WeightedGraph graph;
  TreeDecomposition td;
};

/// Random partial 2-tree: grow a 2-tree by stacking each new vertex on a
/// random existing edge, then drop each non-spanning edge with probability
/// drop_percent/100.  The stacking history gives a width-2 decomposition.
inline GraphWithDecomposition random_partial_2tree(std::size_t n, Weight max_weight, unsigned drop_percent, Rng& rng) {
  if (n < 3) {
    throw std::invalid_argument("a 2-tree needs at least 3 vertices");
  }
  std::vector<std::pair<Vertex, Vertex>> edges{{0, 1}, {1, 2}, {0, 2}};
  std::vector<bool> spanning{true, true, false};
  TreeDecomposition td;
  td.bags.push_back({0, 1, 2});
  std::vector<std::size_t> edge_bag{0, 0, 0};
  for (Vertex v = 3; v < n; ++v) {
    const std::size_t pick = draw(rng, 0, edges.size() - 1);
    const auto [a, b] = edges[pick];
    Bag bag{a, b, v};
    std::sort(bag.begin(), bag.end());
    td.bags.push_back(bag);
    td.tree_edges.emplace_back(edge_bag[pick], td.bags.size() - 1);
    edges.emplace_back(std::min(a, v), std::max(a, v));
    edges.emplace_back(std::min(b, v), std::max(b, v));
    spanning.push_back(true);
    spanning.push_back(false);
    edge_bag.push_back(td.bags.size() - 1);
    edge_bag.push_back(td.bags.size() - 1);
  }
  std::vector<Edge> kept;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (spanning[i] || draw(rng, 0, 99) >= drop_percent) {
      kept.push_back({edges[i].first, edges[i].second, draw(rng, 1, max_weight)});
    }
  }
  return {WeightedGraph(n, std::move(kept)), std::move(td)};
}

namespace detail {

inline std::string rooted_code(const std::vector<std::vector<Vertex>>& adj, Vertex v, Vertex parent) {
  std::vector<std::string> parts;
  for (Vertex c : adj[v]) {
    if (c != parent) {
      parts.push_back(rooted_code(adj, c, v));
    }
  }
  std::sort(parts.begin(), parts.end());
  std::string out = "(";
  for (const std::string& p : parts) {
    out += p;
  }
  return out + ")";
}

}  // namespace detail

/// Isomorphism-invariant string for an unweighted tree shape (rooted
/// canonical codes taken at the center, minimized over bicentral roots).
inline std::string tree_canonical_form(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& shape) {
  if (n == 0) {
    return "";
  }
  std::vector<std::vector<Vertex>> adj(n);
  std::vector<std::size_t> degree(n, 0);
  for (const auto& [a, b] : shape) {
    adj[a].push_back(b);
    adj[b].push_back(a);
    ++degree[a];
    ++degree[b];
  }
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] <= 1) {
      layer.push_back(v);
    }
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<Vertex> next;
    for (Vertex leaf : layer) {
      for (Vertex x : adj[leaf]) {
        if (--degree[x] == 1) {
          next.push_back(x);
        }
      }
    }
    layer = std::move(next);
  }
  std::string best;
  for (Vertex c : layer) {
    std::string code = detail::rooted_code(adj, c, kNoVertex);
    if (best.empty() || code < best) {
      best = std::move(code);
    }
  }
  return best;
}

/// One labeled representative of every isomorphism class of trees on n
/// vertices, found by running through all Pruefer sequences.
inline std::vector<std::vector<std::pair<Vertex, Vertex>>> all_unlabeled_trees(std::size_t n) {
  if (n > 10) {
    throw std::invalid_argument("tree enumeration is limited to 10 vertices");
  }
  if (n <= 1) {
    return {{}};
  }
  if (n == 2) {
    return {{{0, 1}}};
  }
  std::set<std::string> seen;
  std::vector<std::vector<std::pair<Vertex, Vertex>>> out;
  std::vector<Vertex> seq(n - 2, 0);
  for (;;) {
    auto shape = pruefer_decode(seq);
    if (seen.insert(tree_canonical_form(n, shape)).second) {
      out.push_back(std::move(shape));
    }
    std::size_t i = 0;
    while (i < seq.size() && ++seq[i] == n) {
      seq[i++] = 0;
    }
    if (i == seq.size()) {
      break;
    }
  }
  return out;
}

/// Calls f on every weight vector in [1, max_weight]^m, in lexicographic order.
inline void for_each_weighting(std::size_t m, Weight max_weight, const std::function<void(const std::vector<Weight>&)>& f) {
  std::vector<Weight> w(m, 1);
  for (;;) {
    f(w);
    std::size_t i = 0;
    while (i < m && ++w[i] > max_weight) {
      w[i++] = 1;
    }
    if (i == m) {
      return;
    }
  }
}

}  // namespace wpo
