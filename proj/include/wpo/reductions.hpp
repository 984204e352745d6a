#pragma once

// Instance generators for the two hardness constructions: Subset Sum to
// trees, and Minimum Maximum Indegree (MMI) to weighted proper orientation
// via even instances, the triangle gadget and the per-edge gadgets.

#include <array>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wpo/graph.hpp"

namespace wpo {

/// Where an instance came from.  `labels` names every vertex of the output
/// graph; `bounds` lists the decision bound after each construction stage.
struct Provenance {
  std::string construction;
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, Weight>> bounds;
  std::vector<std::string> notes;
};

struct WpoInstance {
  WeightedGraph graph;
  Weight k = 0;
  Provenance provenance;
};

/// Does some orientation of `graph` have every inweight <= k?
struct MmiInstance {
  WeightedGraph graph;
  Weight k = 0;
  std::vector<std::string> labels;  // empty means "v<i>"
};

namespace detail {

inline std::vector<std::string> labels_or_default(const MmiInstance& inst) {
  if (!inst.labels.empty()) {
    if (inst.labels.size() != inst.graph.num_vertices()) {
      throw std::invalid_argument("label count does not match vertex count");
    }
    return inst.labels;
  }
  std::vector<std::string> out;
  for (std::size_t v = 0; v < inst.graph.num_vertices(); ++v) {
    out.push_back("v" + std::to_string(v));
  }
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Subset Sum -> tree

/// Vertex layout of T(S): item vertices first, then w, w1, w2, w3, then the
/// four vertices of each path P_l in increasing l.
struct SubsetSumTreeLayout {
  std::vector<Vertex> item;        // v_j for item j
  Vertex w = 0;
  std::array<Vertex, 3> spine{};   // w1, w2, w3
  std::vector<Weight> path_weights;
  std::vector<std::array<Vertex, 4>> paths;  // u1..u4 per entry of path_weights
};

inline SubsetSumTreeLayout subsetsum_tree_layout(std::size_t items, Weight k) {
  SubsetSumTreeLayout layout;
  Vertex next = 0;
  for (std::size_t j = 0; j < items; ++j) {
    layout.item.push_back(next++);
  }
  layout.w = next++;
  for (Vertex& s : layout.spine) {
    s = next++;
  }
  for (Weight l = k + 4; l <= 2 * k + 5; ++l) {
    if (l == 2 * k + 4) {
      continue;
    }
    layout.path_weights.push_back(l);
    layout.paths.push_back({next, next + 1, next + 2, next + 3});
    next += 4;
  }
  return layout;
}

/// The tree T(S) with bound 2k+6: yes for Subset Sum iff po(T(S)) <= 2k+6.
inline WpoInstance subsetsum_to_tree(const std::vector<Weight>& items, Weight k) {
  for (std::size_t j = 0; j < items.size(); ++j) {
    if (items[j] == 0 || items[j] >= k) {
      throw std::invalid_argument("item " + std::to_string(j) + " = " + std::to_string(items[j]) +
                                  " is not in the open range (0, " + std::to_string(k) + ")");
    }
  }
  if (k > (std::numeric_limits<Weight>::max() - 6) / 2) {
    throw std::overflow_error("target too large");
  }
  const SubsetSumTreeLayout layout = subsetsum_tree_layout(items.size(), k);
  const std::size_t n = items.size() + 4 + 4 * layout.paths.size();

  std::vector<Edge> edges;
  std::vector<std::string> labels(n);
  for (std::size_t j = 0; j < items.size(); ++j) {
    edges.push_back({layout.w, layout.item[j], items[j]});
    labels[layout.item[j]] = "v" + std::to_string(j + 1);
  }
  labels[layout.w] = "w";
  edges.push_back({layout.w, layout.spine[0], k + 5});
  edges.push_back({layout.spine[0], layout.spine[1], 2 * k + 6});
  edges.push_back({layout.spine[1], layout.spine[2], 2 * k + 6});
  for (std::size_t s = 0; s < 3; ++s) {
    labels[layout.spine[s]] = "w" + std::to_string(s + 1);
  }
  for (std::size_t p = 0; p < layout.paths.size(); ++p) {
    const Weight l = layout.path_weights[p];
    const auto& path = layout.paths[p];
    edges.push_back({layout.w, path[0], 1});
    for (std::size_t i = 0; i + 1 < 4; ++i) {
      edges.push_back({path[i], path[i + 1], l});
    }
    for (std::size_t i = 0; i < 4; ++i) {
      labels[path[i]] = "u" + std::to_string(i + 1) + "_" + std::to_string(l);
    }
  }

  WpoInstance inst{WeightedGraph(n, std::move(edges)), 2 * k + 6, {}};
  inst.provenance.construction = "subsetsum";
  inst.provenance.labels = std::move(labels);
  inst.provenance.bounds = {{"k", k}, {"k'", 2 * k + 6}};
  std::string set = "S=";
  for (std::size_t j = 0; j < items.size(); ++j) {
    set += (j ? "," : "") + std::to_string(items[j]);
  }
  inst.provenance.notes.push_back(set);
  return inst;
}

// ---------------------------------------------------------------------------
// MMI -> weighted proper orientation

/// Doubles every weight and the bound.
inline MmiInstance evenize(const MmiInstance& inst) {
  std::vector<Edge> edges(inst.graph.edges().begin(), inst.graph.edges().end());
  for (Edge& e : edges) {
    e.w = checked_mul(e.w, 2);
  }
  return {WeightedGraph(inst.graph.num_vertices(), std::move(edges)), checked_mul(inst.k, 2), inst.labels};
}

inline bool is_even(const MmiInstance& inst) {
  if (inst.k % 2 != 0) {
    return false;
  }
  for (const Edge& e : inst.graph.edges()) {
    if (e.w % 2 != 0) {
      return false;
    }
  }
  return true;
}

/// Both endpoints of every weight-k edge have incident weight below 2k.
inline bool has_star_property(const MmiInstance& inst) {
  const Weight twice = checked_mul(inst.k, 2);
  for (const Edge& e : inst.graph.edges()) {
    if (e.w == inst.k && (inst.graph.incident_weight(e.u) >= twice || inst.graph.incident_weight(e.v) >= twice)) {
      return false;
    }
  }
  return true;
}

/// Attaches a triangle (v, v1, v2) with weights 2, 2, k+2 to every vertex and
/// raises the bound to k+2.  Vertex v's triangle uses n+2v and n+2v+1.
inline MmiInstance enforce_star_property(const MmiInstance& inst) {
  if (!is_even(inst)) {
    throw std::invalid_argument("instance is not even");
  }
  for (EdgeId e = 0; e < inst.graph.num_edges(); ++e) {
    if (inst.graph.edge(e).w > inst.k) {
      throw std::invalid_argument("edge " + std::to_string(e) + " has weight " +
                                  std::to_string(inst.graph.edge(e).w) + " above the bound " +
                                  std::to_string(inst.k));
    }
  }
  const std::size_t n = inst.graph.num_vertices();
  const Weight k2 = checked_add(inst.k, 2);
  std::vector<Edge> edges(inst.graph.edges().begin(), inst.graph.edges().end());
  std::vector<std::string> labels = detail::labels_or_default(inst);
  for (Vertex v = 0; v < n; ++v) {
    const auto v1 = static_cast<Vertex>(n + 2 * v);
    const auto v2 = static_cast<Vertex>(n + 2 * v + 1);
    edges.push_back({v, v1, 2});
    edges.push_back({v, v2, 2});
    edges.push_back({v1, v2, k2});
  }
  for (Vertex v = 0; v < n; ++v) {
    labels.push_back(labels[v] + ".t1");
    labels.push_back(labels[v] + ".t2");
  }
  return {WeightedGraph(3 * n, std::move(edges)), k2, std::move(labels)};
}

/// Inweights reached by the two forbidden configurations of the light-edge
/// gadget; both must exceed k for the gadget to be sound.
struct GadgetCheck {
  Weight both_out_of_x;     // xy and xz both leave x: 2k - w - 1
  Weight both_into_x;       // yx, ux and vx all enter x: k + w - 1
  bool blocked(Weight k) const { return both_out_of_x > k && both_into_x > k; }
};

inline GadgetCheck light_gadget_check(Weight w, Weight k) {
  return {2 * k - w - 1, k + w - 1};
}

/// Vertices added for one source edge; z is kNoVertex for the heavy gadget.
struct EdgeGadget {
  EdgeId source;
  Vertex x = kNoVertex;
  Vertex y = kNoVertex;
  Vertex z = kNoVertex;
};

struct GadgetInstance {
  WpoInstance instance;
  std::vector<EdgeGadget> gadgets;
};

/// Replaces each edge uv of weight w < k by u-x-v with a triangle x,y,z
/// (weights w, w, k-1-w on xy, k on yz, k-w-1 on xz) and each weight-k edge
/// by the path u-x-y-v (weights k, 1, k).  The bound stays k.
inline GadgetInstance mmi_to_wpo_gadgets(const MmiInstance& inst) {
  if (!is_even(inst)) {
    throw std::invalid_argument("instance is not even");
  }
  if (!has_star_property(inst)) {
    throw std::invalid_argument("instance violates the star property");
  }
  const Weight k = inst.k;
  const std::size_t n = inst.graph.num_vertices();
  std::vector<Edge> edges;
  std::vector<std::string> labels = detail::labels_or_default(inst);
  std::vector<EdgeGadget> gadgets;
  auto next = static_cast<Vertex>(n);
  for (EdgeId id = 0; id < inst.graph.num_edges(); ++id) {
    const Edge& e = inst.graph.edge(id);
    const std::string tag = "e" + std::to_string(id);
    EdgeGadget gadget{id};
    if (e.w > k) {
      throw std::invalid_argument("edge " + std::to_string(id) + " has weight above the bound");
    }
    if (e.w < k) {
      // Even w below even k gives 2 <= w <= k-2, so every weight is positive.
      if (e.w + 1 >= k) {
        throw std::invalid_argument("edge " + std::to_string(id) + " yields a non-positive gadget weight");
      }
      if (!light_gadget_check(e.w, k).blocked(k)) {
        throw std::logic_error("gadget for edge " + std::to_string(id) + " fails its soundness checks");
      }
      gadget.x = next++;
      gadget.y = next++;
      gadget.z = next++;
      edges.push_back({e.u, gadget.x, e.w});
      edges.push_back({gadget.x, e.v, e.w});
      edges.push_back({gadget.x, gadget.y, k - 1 - e.w});
      edges.push_back({gadget.y, gadget.z, k});
      edges.push_back({gadget.x, gadget.z, k - e.w - 1});
      labels.push_back(tag + ".x");
      labels.push_back(tag + ".y");
      labels.push_back(tag + ".z");
    } else {
      gadget.x = next++;
      gadget.y = next++;
      edges.push_back({e.u, gadget.x, k});
      edges.push_back({gadget.x, gadget.y, 1});
      edges.push_back({gadget.y, e.v, k});
      labels.push_back(tag + ".x");
      labels.push_back(tag + ".y");
    }
    gadgets.push_back(gadget);
  }
  GadgetInstance out{{WeightedGraph(next, std::move(edges)), k, {}}, std::move(gadgets)};
  out.instance.provenance.construction = "mmi";
  out.instance.provenance.labels = std::move(labels);
  out.instance.provenance.bounds = {{"k", k}};
  return out;
}

inline WpoInstance mmi_to_wpo(const MmiInstance& inst) { return mmi_to_wpo_gadgets(inst).instance; }

/// evenize, then the triangle gadget, then the edge gadgets.  The final bound
/// is 2k+2; every stage's bound is recorded in the provenance.
inline WpoInstance mmi_reduce_full(const MmiInstance& inst) {
  for (EdgeId e = 0; e < inst.graph.num_edges(); ++e) {
    if (inst.graph.edge(e).w > inst.k) {
      throw std::invalid_argument("edge " + std::to_string(e) + " has weight " +
                                  std::to_string(inst.graph.edge(e).w) + " above the bound " +
                                  std::to_string(inst.k));
    }
  }
  const MmiInstance even = evenize(inst);
  const MmiInstance star = enforce_star_property(even);
  WpoInstance out = mmi_to_wpo(star);
  out.provenance.bounds = {{"k", inst.k}, {"k_even", even.k}, {"k_star", star.k}, {"k_final", out.k}};
  out.provenance.notes.push_back("source n=" + std::to_string(inst.graph.num_vertices()) +
                                 " m=" + std::to_string(inst.graph.num_edges()));
  return out;
}

}  // namespace wpo
