#pragma once

// Weighted graphs, orientations and the inweight bookkeeping every solver
// in this library is built on.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wpo {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;
using Weight = std::uint64_t;

inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

/// Adds two weights, throwing instead of wrapping around.
inline Weight checked_add(Weight a, Weight b) {
  if (a > std::numeric_limits<Weight>::max() - b) {
    throw std::overflow_error("weight sum overflows 64 bits");
  }
  return a + b;
}

inline Weight checked_mul(Weight a, Weight b) {
  if (a != 0 && b > std::numeric_limits<Weight>::max() / a) {
    throw std::overflow_error("weight product overflows 64 bits");
  }
  return a * b;
}

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  Weight w = 1;

  Vertex other(Vertex x) const { return x == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
  Vertex neighbor;
  EdgeId edge;
};

/// Simple undirected graph on vertices 0..n-1 with positive edge weights.
/// Edge ids are positions in the construction list and never change.
class WeightedGraph {
 public:
  WeightedGraph() = default;

  WeightedGraph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ >= kNoVertex) {
      throw std::invalid_argument("too many vertices");
    }
    if (edges_.size() >= std::numeric_limits<EdgeId>::max()) {
      throw std::invalid_argument("too many edges");
    }
    std::vector<std::pair<Vertex, Vertex>> keys;
    keys.reserve(edges_.size());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const Edge& e = edges_[i];
      const std::string where = "edge " + std::to_string(i);
      if (e.u >= n_ || e.v >= n_) {
        throw std::invalid_argument(where + ": endpoint out of range");
      }
      if (e.u == e.v) {
        throw std::invalid_argument(where + ": self-loop at vertex " + std::to_string(e.u));
      }
      if (e.w == 0) {
        throw std::invalid_argument(where + ": weight must be positive");
      }
      keys.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
      total_weight_ = checked_add(total_weight_, e.w);
      max_weight_ = std::max(max_weight_, e.w);
    }
    std::sort(keys.begin(), keys.end());
    if (auto dup = std::adjacent_find(keys.begin(), keys.end()); dup != keys.end()) {
      throw std::invalid_argument("duplicate edge {" + std::to_string(dup->first) + "," +
                                  std::to_string(dup->second) + "}");
    }

    offsets_.assign(n_ + 1, 0);
    for (const Edge& e : edges_) {
      ++offsets_[e.u + 1];
      ++offsets_[e.v + 1];
    }
    for (std::size_t v = 0; v < n_; ++v) {
      offsets_[v + 1] += offsets_[v];
    }
    incidences_.resize(2 * edges_.size());
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (EdgeId id = 0; id < edges_.size(); ++id) {
      const Edge& e = edges_[id];
      incidences_[fill[e.u]++] = {e.v, id};
      incidences_[fill[e.v]++] = {e.u, id};
    }
  }

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }

  const Edge& edge(EdgeId id) const { return edges_.at(id); }
  std::span<const Edge> edges() const { return edges_; }

  std::span<const Incidence> incident(Vertex v) const {
    return std::span<const Incidence>(incidences_).subspan(offsets_[v], offsets_[v + 1] - offsets_[v]);
  }

  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  /// K: the heaviest edge weight, 0 for edgeless graphs.
  Weight max_weight() const { return max_weight_; }
  Weight total_weight() const { return total_weight_; }

  Weight incident_weight(Vertex v) const {
    Weight sum = 0;
    for (const Incidence& inc : incident(v)) {
      sum += edges_[inc.edge].w;
    }
    return sum;
  }

  std::optional<EdgeId> find_edge(Vertex a, Vertex b) const {
    if (a >= n_ || b >= n_) {
      return std::nullopt;
    }
    const Vertex from = degree(a) <= degree(b) ? a : b;
    const Vertex to = from == a ? b : a;
    for (const Incidence& inc : incident(from)) {
      if (inc.neighbor == to) {
        return inc.edge;
      }
    }
    return std::nullopt;
  }

  friend bool operator==(const WeightedGraph& x, const WeightedGraph& y) {
    return x.n_ == y.n_ && x.edges_ == y.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Incidence> incidences_;
  Weight total_weight_ = 0;
  Weight max_weight_ = 0;
};

inline WeightedGraph build_graph(std::size_t n, std::vector<Edge> edge_list) {
  return WeightedGraph(n, std::move(edge_list));
}

/// One direction bit per edge: true means the stored edge (u,v) is the arc u->v.
class Orientation {
 public:
  Orientation() = default;
  explicit Orientation(std::size_t num_edges, bool toward_v = true)
      : toward_v_(num_edges, toward_v ? 1 : 0) {}

  std::size_t size() const { return toward_v_.size(); }

  bool toward_v(EdgeId e) const { return toward_v_.at(e) != 0; }
  void set_toward_v(EdgeId e, bool value) { toward_v_.at(e) = value ? 1 : 0; }

  Vertex head(const WeightedGraph& g, EdgeId e) const {
    const Edge& ed = g.edge(e);
    return toward_v(e) ? ed.v : ed.u;
  }
  Vertex tail(const WeightedGraph& g, EdgeId e) const {
    const Edge& ed = g.edge(e);
    return toward_v(e) ? ed.u : ed.v;
  }

  /// Points edge e at `head`, which must be one of its endpoints.
  void point_to(const WeightedGraph& g, EdgeId e, Vertex head) {
    const Edge& ed = g.edge(e);
    if (head != ed.u && head != ed.v) {
      throw std::invalid_argument("vertex is not an endpoint of the edge");
    }
    set_toward_v(e, head == ed.v);
  }

  Orientation reversed() const {
    Orientation r = *this;
    for (auto& bit : r.toward_v_) {
      bit ^= 1;
    }
    return r;
  }

  friend bool operator==(const Orientation&, const Orientation&) = default;

 private:
  std::vector<std::uint8_t> toward_v_;
};

/// An optimum value together with an orientation attaining it.
struct PoSolution {
  Weight po = 0;
  Orientation witness;
};

struct InweightProfile {
  std::vector<Weight> inweight;
  std::vector<Weight> outweight;
};

inline void require_covers(const WeightedGraph& g, const Orientation& d) {
  if (d.size() != g.num_edges()) {
    throw std::invalid_argument("orientation has " + std::to_string(d.size()) +
                                " directions for " + std::to_string(g.num_edges()) + " edges");
  }
}

inline InweightProfile compute_inweights(const WeightedGraph& g, const Orientation& d) {
  require_covers(g, d);
  InweightProfile p{std::vector<Weight>(g.num_vertices(), 0), std::vector<Weight>(g.num_vertices(), 0)};
  // The graph constructor bounds the total weight, so these sums cannot overflow.
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Weight w = g.edge(e).w;
    p.inweight[d.head(g, e)] += w;
    p.outweight[d.tail(g, e)] += w;
  }
  return p;
}

/// mu^-: the largest inweight, 0 for graphs without vertices or edges.
inline Weight mu_minus(const InweightProfile& p) {
  return p.inweight.empty() ? 0 : *std::max_element(p.inweight.begin(), p.inweight.end());
}

inline Weight mu_minus(const WeightedGraph& g, const Orientation& d) {
  return mu_minus(compute_inweights(g, d));
}

inline std::size_t max_indegree(const WeightedGraph& g, const Orientation& d) {
  require_covers(g, d);
  std::vector<std::size_t> indeg(g.num_vertices(), 0);
  std::size_t best = 0;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    best = std::max(best, ++indeg[d.head(g, e)]);
  }
  return best;
}

/// First edge whose endpoints receive equal inweight, if any.
inline std::optional<EdgeId> find_conflict(const WeightedGraph& g, const Orientation& d) {
  const InweightProfile p = compute_inweights(g, d);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    if (p.inweight[ed.u] == p.inweight[ed.v]) {
      return e;
    }
  }
  return std::nullopt;
}

/// Linear-time check that the inweights properly color the graph.
inline bool is_proper(const WeightedGraph& g, const Orientation& d) {
  return !find_conflict(g, d).has_value();
}

/// Orients every edge from its side-0 endpoint to its side-1 endpoint.
inline Orientation bipartition_orientation(const WeightedGraph& g, std::span<const std::uint8_t> side) {
  if (side.size() != g.num_vertices()) {
    throw std::invalid_argument("side vector does not match vertex count");
  }
  Orientation d(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    const bool su = side[ed.u] != 0;
    const bool sv = side[ed.v] != 0;
    if (su == sv) {
      throw std::invalid_argument("edge {" + std::to_string(ed.u) + "," + std::to_string(ed.v) +
                                  "} does not cross the bipartition");
    }
    d.set_toward_v(e, sv);
  }
  return d;
}

}  // namespace wpo
