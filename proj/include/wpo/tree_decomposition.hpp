#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wpo/graph.hpp"

namespace wpo {

using Bag = std::vector<Vertex>;  // sorted, no duplicates

struct TreeDecomposition {
  std::vector<Bag> bags;
  std::vector<std::pair<std::size_t, std::size_t>> tree_edges;
  std::size_t root = 0;
};

/// Thrown by validate_td.  `condition` is 0 for structural problems (bag ids,
/// tree shape) and 1..3 for the covering / edge / connectivity conditions.
class InvalidDecomposition : public std::invalid_argument {
 public:
  InvalidDecomposition(int condition, const std::string& what)
      : std::invalid_argument(what), condition_(condition) {}
  int condition() const { return condition_; }

 private:
  int condition_;
};

namespace detail {

inline bool bag_contains(const Bag& bag, Vertex v) { return std::binary_search(bag.begin(), bag.end(), v); }

inline std::string bag_label(std::size_t t) { return "bag " + std::to_string(t); }

}  // namespace detail

/// Checks the three decomposition conditions and returns the width
/// (largest bag size minus one; -1 when every bag is empty).
inline int validate_td(const WeightedGraph& g, const TreeDecomposition& td) {
  const std::size_t nb = td.bags.size();
  if (nb == 0) {
    throw InvalidDecomposition(0, "decomposition has no bags");
  }
  if (td.root >= nb) {
    throw InvalidDecomposition(0, "root " + std::to_string(td.root) + " is not a bag");
  }
  std::size_t max_bag = 0;
  for (std::size_t t = 0; t < nb; ++t) {
    const Bag& bag = td.bags[t];
    if (!std::is_sorted(bag.begin(), bag.end()) || std::adjacent_find(bag.begin(), bag.end()) != bag.end()) {
      throw InvalidDecomposition(0, detail::bag_label(t) + " is not a sorted set");
    }
    if (!bag.empty() && bag.back() >= g.num_vertices()) {
      throw InvalidDecomposition(0, detail::bag_label(t) + " names vertex " + std::to_string(bag.back()) +
                                        " outside the graph");
    }
    max_bag = std::max(max_bag, bag.size());
  }

  // The bag graph must be a tree.
  if (td.tree_edges.size() + 1 != nb) {
    throw InvalidDecomposition(0, "decomposition tree has " + std::to_string(td.tree_edges.size()) +
                                      " edges for " + std::to_string(nb) + " bags");
  }
  std::vector<std::size_t> comp(nb);
  std::iota(comp.begin(), comp.end(), 0);
  auto find = [&](std::size_t x) {
    while (comp[x] != x) {
      x = comp[x] = comp[comp[x]];
    }
    return x;
  };
  for (const auto& [a, b] : td.tree_edges) {
    if (a >= nb || b >= nb) {
      throw InvalidDecomposition(0, "decomposition tree edge names a missing bag");
    }
    const std::size_t ra = find(a);
    const std::size_t rb = find(b);
    if (ra == rb) {
      throw InvalidDecomposition(0, "decomposition tree has a cycle through bags " + std::to_string(a) + " and " +
                                        std::to_string(b));
    }
    comp[ra] = rb;
  }

  // Condition 1: every vertex in some bag.
  std::vector<std::size_t> occurrences(g.num_vertices(), 0);
  for (const Bag& bag : td.bags) {
    for (Vertex v : bag) {
      ++occurrences[v];
    }
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (occurrences[v] == 0) {
      throw InvalidDecomposition(1, "vertex " + std::to_string(v) + " is in no bag");
    }
  }

  // Condition 2: every edge inside some bag.
  std::vector<std::vector<std::size_t>> bags_of(g.num_vertices());
  for (std::size_t t = 0; t < nb; ++t) {
    for (Vertex v : td.bags[t]) {
      bags_of[v].push_back(t);
    }
  }
  for (const Edge& e : g.edges()) {
    const auto& candidates = bags_of[e.u].size() <= bags_of[e.v].size() ? bags_of[e.u] : bags_of[e.v];
    const Vertex other = bags_of[e.u].size() <= bags_of[e.v].size() ? e.v : e.u;
    const bool covered = std::any_of(candidates.begin(), candidates.end(),
                                     [&](std::size_t t) { return detail::bag_contains(td.bags[t], other); });
    if (!covered) {
      throw InvalidDecomposition(2, "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                        "} is in no bag");
    }
  }

  // Condition 3: the bags holding v span a subtree, i.e. they carry exactly
  // occurrences(v) - 1 tree edges.
  std::vector<std::size_t> inner_edges(g.num_vertices(), 0);
  for (const auto& [a, b] : td.tree_edges) {
    const Bag& x = td.bags[a];
    const Bag& y = td.bags[b];
    std::vector<Vertex> shared;
    std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(shared));
    for (Vertex v : shared) {
      ++inner_edges[v];
    }
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (inner_edges[v] + 1 != occurrences[v]) {
      throw InvalidDecomposition(3, "bags containing vertex " + std::to_string(v) + " are not connected");
    }
  }
  return static_cast<int>(max_bag) - 1;
}

enum class NodeKind : std::uint8_t { Leaf, Introduce, Forget, Join };

struct NiceNode {
  NodeKind kind = NodeKind::Leaf;
  Bag bag;
  Vertex vertex = kNoVertex;                   // introduced / forgotten vertex
  std::vector<std::size_t> children;           // 0, 1 or 2 entries
};

/// Rooted decomposition whose nodes are listed children-first; the root is
/// the last node.
struct NiceTreeDecomposition {
  std::vector<NiceNode> nodes;

  std::size_t root() const { return nodes.size() - 1; }

  TreeDecomposition to_tree_decomposition() const {
    TreeDecomposition td;
    td.root = root();
    for (std::size_t t = 0; t < nodes.size(); ++t) {
      td.bags.push_back(nodes[t].bag);
      for (std::size_t c : nodes[t].children) {
        td.tree_edges.emplace_back(t, c);
      }
    }
    return td;
  }

  int width() const {
    std::size_t best = 0;
    for (const NiceNode& node : nodes) {
      best = std::max(best, node.bag.size());
    }
    return static_cast<int>(best) - 1;
  }
};

/// Checks node kinds against the introduce / forget / join shape rules and
/// the children-first ordering.
inline void validate_nice_shape(const NiceTreeDecomposition& ntd) {
  if (ntd.nodes.empty()) {
    throw InvalidDecomposition(0, "nice decomposition has no nodes");
  }
  std::vector<std::size_t> parents(ntd.nodes.size(), 0);
  for (std::size_t t = 0; t < ntd.nodes.size(); ++t) {
    const NiceNode& node = ntd.nodes[t];
    const std::string where = "nice node " + std::to_string(t);
    for (std::size_t c : node.children) {
      if (c >= t) {
        throw InvalidDecomposition(0, where + ": child listed after its parent");
      }
      ++parents[c];
    }
    auto child_bag = [&](std::size_t i) -> const Bag& { return ntd.nodes[node.children[i]].bag; };
    switch (node.kind) {
      case NodeKind::Leaf:
        if (!node.children.empty()) {
          throw InvalidDecomposition(0, where + ": leaf with children");
        }
        break;
      case NodeKind::Introduce: {
        if (node.children.size() != 1 || detail::bag_contains(child_bag(0), node.vertex)) {
          throw InvalidDecomposition(0, where + ": malformed introduce node");
        }
        Bag expect = child_bag(0);
        expect.insert(std::upper_bound(expect.begin(), expect.end(), node.vertex), node.vertex);
        if (expect != node.bag) {
          throw InvalidDecomposition(0, where + ": introduce bag mismatch");
        }
        break;
      }
      case NodeKind::Forget: {
        if (node.children.size() != 1 || !detail::bag_contains(child_bag(0), node.vertex)) {
          throw InvalidDecomposition(0, where + ": malformed forget node");
        }
        Bag expect = child_bag(0);
        expect.erase(std::lower_bound(expect.begin(), expect.end(), node.vertex));
        if (expect != node.bag) {
          throw InvalidDecomposition(0, where + ": forget bag mismatch");
        }
        break;
      }
      case NodeKind::Join:
        if (node.children.size() != 2 || child_bag(0) != node.bag || child_bag(1) != node.bag) {
          throw InvalidDecomposition(0, where + ": malformed join node");
        }
        break;
    }
  }
  for (std::size_t t = 0; t + 1 < ntd.nodes.size(); ++t) {
    if (parents[t] != 1) {
      throw InvalidDecomposition(0, "nice node " + std::to_string(t) + " does not have exactly one parent");
    }
  }
}

/// Standard expansion into a nice decomposition of the same width.  Every
/// bag edge becomes a chain of forgets followed by introduces; bags with
/// several children become left-deep chains of binary joins.  Leaf bags are
/// kept as they are.
inline NiceTreeDecomposition nicefy(const TreeDecomposition& td) {
  const std::size_t nb = td.bags.size();
  if (nb == 0 || td.root >= nb) {
    throw InvalidDecomposition(0, "cannot nicefy an empty decomposition");
  }
  std::vector<std::vector<std::size_t>> adj(nb);
  for (const auto& [a, b] : td.tree_edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<std::size_t> order{td.root};
  std::vector<std::size_t> parent(nb, nb);
  std::vector<std::uint8_t> seen(nb, 0);
  seen[td.root] = 1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t c : adj[order[i]]) {
      if (!seen[c]) {
        seen[c] = 1;
        parent[c] = order[i];
        order.push_back(c);
      }
    }
  }

  NiceTreeDecomposition out;
  auto add = [&](NiceNode node) {
    out.nodes.push_back(std::move(node));
    return out.nodes.size() - 1;
  };
  // Walks from the node `from` (bag Y) to a node whose bag is `target`.
  auto chain = [&](std::size_t from, const Bag& target) {
    std::size_t top = from;
    const Bag start = out.nodes[from].bag;
    for (Vertex v : start) {
      if (!detail::bag_contains(target, v)) {
        Bag bag = out.nodes[top].bag;
        bag.erase(std::lower_bound(bag.begin(), bag.end(), v));
        top = add({NodeKind::Forget, std::move(bag), v, {top}});
      }
    }
    for (Vertex v : target) {
      if (!detail::bag_contains(start, v)) {
        Bag bag = out.nodes[top].bag;
        bag.insert(std::upper_bound(bag.begin(), bag.end(), v), v);
        top = add({NodeKind::Introduce, std::move(bag), v, {top}});
      }
    }
    return top;
  };

  std::vector<std::size_t> node_of(nb, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const std::size_t t = *it;
    const Bag& bag = td.bags[t];
    std::vector<std::size_t> tops;
    for (std::size_t c : adj[t]) {
      if (parent[c] == t && c != td.root) {
        tops.push_back(chain(node_of[c], bag));
      }
    }
    if (tops.empty()) {
      node_of[t] = add({NodeKind::Leaf, bag, kNoVertex, {}});
      continue;
    }
    std::size_t acc = tops[0];
    for (std::size_t i = 1; i < tops.size(); ++i) {
      acc = add({NodeKind::Join, bag, kNoVertex, {acc, tops[i]}});
    }
    node_of[t] = acc;
  }
  return out;
}

namespace detail {

// Merges tree edges whose bags are nested, keeping the larger bag.
inline TreeDecomposition contract_nested_bags(const TreeDecomposition& td) {
  const std::size_t nb = td.bags.size();
  std::vector<std::size_t> rep(nb);
  std::iota(rep.begin(), rep.end(), 0);
  auto find = [&](std::size_t x) {
    while (rep[x] != x) {
      x = rep[x] = rep[rep[x]];
    }
    return x;
  };
  std::vector<Bag> bags = td.bags;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [a0, b0] : td.tree_edges) {
      const std::size_t a = find(a0);
      const std::size_t b = find(b0);
      if (a == b) {
        continue;
      }
      if (std::includes(bags[a].begin(), bags[a].end(), bags[b].begin(), bags[b].end())) {
        rep[b] = a;
        changed = true;
      } else if (std::includes(bags[b].begin(), bags[b].end(), bags[a].begin(), bags[a].end())) {
        rep[a] = b;
        changed = true;
      }
    }
  }
  std::vector<std::size_t> new_id(nb, nb);
  TreeDecomposition out;
  for (std::size_t t = 0; t < nb; ++t) {
    if (find(t) == t) {
      new_id[t] = out.bags.size();
      out.bags.push_back(bags[t]);
    }
  }
  for (const auto& [a, b] : td.tree_edges) {
    const std::size_t ra = find(a);
    const std::size_t rb = find(b);
    if (ra != rb) {
      out.tree_edges.emplace_back(new_id[ra], new_id[rb]);
    }
  }
  out.root = new_id[find(td.root)];
  return out;
}

}  // namespace detail

/// Decomposition from a min-fill elimination ordering (ties: fewer
/// neighbors, then lower index).  Always valid; the width is not guaranteed.
inline TreeDecomposition heuristic_td(const WeightedGraph& g) {
  const std::size_t n = g.num_vertices();
  if (n == 0) {
    return TreeDecomposition{{Bag{}}, {}, 0};
  }
  std::vector<std::set<Vertex>> nbr(n);
  for (const Edge& e : g.edges()) {
    nbr[e.u].insert(e.v);
    nbr[e.v].insert(e.u);
  }
  std::vector<std::uint8_t> eliminated(n, 0);
  auto fill_in = [&](Vertex v) {
    std::size_t missing = 0;
    for (auto i = nbr[v].begin(); i != nbr[v].end(); ++i) {
      for (auto j = std::next(i); j != nbr[v].end(); ++j) {
        missing += nbr[*i].count(*j) == 0;
      }
    }
    return missing;
  };
  std::vector<std::size_t> score(n);
  std::vector<std::uint8_t> dirty(n, 1);

  std::vector<Vertex> elim_order;
  std::vector<Bag> bags;
  elim_order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    Vertex best = kNoVertex;
    for (Vertex v = 0; v < n; ++v) {
      if (eliminated[v]) {
        continue;
      }
      if (dirty[v]) {
        score[v] = fill_in(v);
        dirty[v] = 0;
      }
      if (best == kNoVertex || std::make_pair(score[v], nbr[v].size()) < std::make_pair(score[best], nbr[best].size())) {
        best = v;
      }
    }
    Bag bag(nbr[best].begin(), nbr[best].end());
    bag.insert(std::upper_bound(bag.begin(), bag.end(), best), best);
    bags.push_back(std::move(bag));
    elim_order.push_back(best);
    const std::vector<Vertex> hood(nbr[best].begin(), nbr[best].end());
    for (std::size_t i = 0; i < hood.size(); ++i) {
      for (std::size_t j = i + 1; j < hood.size(); ++j) {
        nbr[hood[i]].insert(hood[j]);
        nbr[hood[j]].insert(hood[i]);
      }
    }
    for (Vertex x : hood) {
      nbr[x].erase(best);
    }
    eliminated[best] = 1;
    for (Vertex x : hood) {
      dirty[x] = 1;
      for (Vertex y : nbr[x]) {
        dirty[y] = 1;
      }
    }
  }

  // Bag i hangs below the bag of its earliest-eliminated remaining neighbor;
  // bags without one are chained to the next bag so the tree stays connected.
  std::vector<std::size_t> step_of(n);
  for (std::size_t i = 0; i < n; ++i) {
    step_of[elim_order[i]] = i;
  }
  TreeDecomposition td;
  td.bags = std::move(bags);
  td.root = n - 1;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    std::size_t parent = n;
    for (Vertex x : td.bags[i]) {
      if (x != elim_order[i]) {
        parent = std::min(parent, step_of[x]);
      }
    }
    td.tree_edges.emplace_back(i, parent == n ? i + 1 : parent);
  }
  return detail::contract_nested_bags(td);
}

}  // namespace wpo
