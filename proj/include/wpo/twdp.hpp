#pragma once

// Dynamic program over a nice tree decomposition deciding po(G, w) <= k.
//
// A table entry at node t is a bag state: an orientation of the edges inside
// the bag, and per bag vertex a pair (a, d) where a is the inweight collected
// inside the subgraph below t and d <= k the inweight it is promised to end
// with.  An entry is stored iff some orientation of that subgraph has those
// accumulated inweights and is properly colored when bag vertices take their
// promised values and forgotten vertices their actual ones.
//
// Tables are sorted vectors of bit-packed keys.  The packing puts the
// orientation and the promised values first, so entries sharing both are
// contiguous, which is what the join step pairs up.

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wpo/graph.hpp"
#include "wpo/tree_decomposition.hpp"

namespace wpo {

namespace detail {

inline constexpr std::size_t kMaxDpBag = 11;  // keeps bag orientations within 64 bits

struct DpState {
  std::uint64_t orient = 0;  // bit i: bag edge i points at its stored v endpoint
  std::array<Weight, kMaxDpBag> a{};
  std::array<Weight, kMaxDpBag> d{};
};

struct BagEdge {
  std::size_t i;       // bag position of the stored u endpoint
  std::size_t j;       // bag position of the stored v endpoint
  EdgeId id;
  Weight w;
};

// Canonical per-node view of G[bag]: edges ordered by their id.
struct NodeLayout {
  Bag bag;
  std::vector<BagEdge> edges;
  std::vector<std::vector<std::size_t>> edges_at;  // bag position -> incident bag edges

  std::size_t size() const { return bag.size(); }

  std::size_t position(Vertex v) const {
    return static_cast<std::size_t>(std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
  }

  std::size_t edge_index(EdgeId id) const {
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (edges[e].id == id) {
        return e;
      }
    }
    throw std::logic_error("edge is not inside the bag");
  }

  std::size_t head(std::size_t e, std::uint64_t orient) const {
    return ((orient >> e) & 1U) ? edges[e].j : edges[e].i;
  }

  void local_inweight(std::uint64_t orient, std::array<Weight, kMaxDpBag>& o) const {
    o.fill(0);
    for (std::size_t e = 0; e < edges.size(); ++e) {
      o[head(e, orient)] += edges[e].w;
    }
  }
};

inline NodeLayout make_layout(const WeightedGraph& g, const Bag& bag) {
  NodeLayout layout;
  layout.bag = bag;
  layout.edges_at.assign(bag.size(), {});
  std::vector<std::pair<EdgeId, std::size_t>> found;
  for (std::size_t p = 0; p < bag.size(); ++p) {
    for (const Incidence& inc : g.incident(bag[p])) {
      if (inc.neighbor > bag[p] && std::binary_search(bag.begin(), bag.end(), inc.neighbor)) {
        found.emplace_back(inc.edge, 0);
      }
    }
  }
  std::sort(found.begin(), found.end());
  for (const auto& [id, unused] : found) {
    const Edge& e = g.edge(id);
    layout.edges.push_back({layout.position(e.u), layout.position(e.v), id, e.w});
  }
  for (std::size_t e = 0; e < layout.edges.size(); ++e) {
    layout.edges_at[layout.edges[e].i].push_back(e);
    layout.edges_at[layout.edges[e].j].push_back(e);
  }
  return layout;
}

template <std::size_t Words>
class TwdpEngine {
 public:
  using Key = std::array<std::uint64_t, Words>;

  static constexpr std::size_t capacity_bits() { return 64 * Words; }

  /// Bits needed to pack the widest node for bound k.
  static std::size_t required_bits(const std::vector<NodeLayout>& layouts, Weight k) {
    const std::size_t b = value_bits(k);
    std::size_t need = 0;
    for (const NodeLayout& l : layouts) {
      need = std::max(need, l.edges.size() + 2 * l.size() * b);
    }
    return need;
  }

  TwdpEngine(const WeightedGraph& g, const NiceTreeDecomposition& ntd, std::vector<NodeLayout> layouts, Weight k)
      : g_(g), ntd_(ntd), layouts_(std::move(layouts)), k_(k), bits_(value_bits(k)) {}

  /// Fills every table bottom-up; true iff the root accepts.
  bool run() {
    tables_.assign(ntd_.nodes.size(), {});
    for (std::size_t t = 0; t < ntd_.nodes.size(); ++t) {
      const NiceNode& node = ntd_.nodes[t];
      switch (node.kind) {
        case NodeKind::Leaf:
          tables_[t] = leaf(t);
          break;
        case NodeKind::Introduce:
          tables_[t] = introduce(t);
          break;
        case NodeKind::Forget:
          tables_[t] = forget(t);
          break;
        case NodeKind::Join:
          tables_[t] = join(t);
          break;
      }
    }
    return accepting_root_key().has_value();
  }

  /// Decoded entries of one node's table.
  std::vector<DpState> decoded_table(std::size_t t) const {
    std::vector<DpState> out;
    out.reserve(tables_[t].size());
    for (const Key& key : tables_[t]) {
      out.push_back(decode(layouts_[t], key));
    }
    return out;
  }

  std::size_t table_size(std::size_t t) const { return tables_[t].size(); }

  /// Walks accepted entries from the root down, picking one consistent child
  /// entry per node, and collects the bag orientations along the way.
  Orientation witness() const {
    const auto root_key = accepting_root_key();
    if (!root_key) {
      throw std::logic_error("no accepting root entry");
    }
    Orientation d(g_.num_edges());
    std::vector<std::pair<std::size_t, Key>> stack{{ntd_.root(), *root_key}};
    while (!stack.empty()) {
      const auto [t, key] = stack.back();
      stack.pop_back();
      const NiceNode& node = ntd_.nodes[t];
      const NodeLayout& layout = layouts_[t];
      const DpState s = decode(layout, key);
      for (std::size_t e = 0; e < layout.edges.size(); ++e) {
        d.set_toward_v(layout.edges[e].id, ((s.orient >> e) & 1U) != 0);
      }
      switch (node.kind) {
        case NodeKind::Leaf:
          break;
        case NodeKind::Introduce:
          stack.emplace_back(node.children[0], introduce_child_key(t, s));
          break;
        case NodeKind::Forget:
          stack.emplace_back(node.children[0], forget_child_key(t, s));
          break;
        case NodeKind::Join: {
          const auto [k1, k2] = join_child_keys(t, key, s);
          stack.emplace_back(node.children[0], k1);
          stack.emplace_back(node.children[1], k2);
          break;
        }
      }
    }
    return d;
  }

 private:
  static std::size_t value_bits(Weight k) { return std::max<std::size_t>(1, std::bit_width(k)); }

  // MSB-first bit packing: global bit p lives in word p / 64.
  static void put(Key& key, std::size_t& pos, std::uint64_t value, std::size_t bits) {
    if (bits == 0) {
      return;
    }
    const std::size_t word = pos / 64;
    const std::size_t off = pos % 64;
    if (Words == 1 || off + bits <= 64) {
      key[word] |= value << (64 - off - bits);
    } else if constexpr (Words > 1) {
      const std::size_t rest = off + bits - 64;
      key[word] |= value >> rest;
      key[word + 1] |= value << (64 - rest);
    }
    pos += bits;
  }

  static std::uint64_t get(const Key& key, std::size_t& pos, std::size_t bits) {
    if (bits == 0) {
      return 0;
    }
    const std::uint64_t mask = bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
    const std::size_t word = pos / 64;
    const std::size_t off = pos % 64;
    std::uint64_t value = 0;
    if (Words == 1 || off + bits <= 64) {
      value = key[word] >> (64 - off - bits);
    } else if constexpr (Words > 1) {
      const std::size_t rest = off + bits - 64;
      value = (key[word] << rest) | (key[word + 1] >> (64 - rest));
    }
    pos += bits;
    return value & mask;
  }

  Key encode(const NodeLayout& l, const DpState& s) const {
    Key key{};
    std::size_t pos = 0;
    put(key, pos, s.orient, l.edges.size());
    for (std::size_t i = 0; i < l.size(); ++i) {
      put(key, pos, s.d[i], bits_);
    }
    for (std::size_t i = 0; i < l.size(); ++i) {
      put(key, pos, s.a[i], bits_);
    }
    return key;
  }

  DpState decode(const NodeLayout& l, const Key& key) const {
    DpState s;
    std::size_t pos = 0;
    s.orient = get(key, pos, l.edges.size());
    for (std::size_t i = 0; i < l.size(); ++i) {
      s.d[i] = get(key, pos, bits_);
    }
    for (std::size_t i = 0; i < l.size(); ++i) {
      s.a[i] = get(key, pos, bits_);
    }
    return s;
  }

  // The key with its accumulated-inweight fields zeroed.
  Key group_of(const NodeLayout& l, const Key& key) const {
    const std::size_t prefix = l.edges.size() + l.size() * bits_;
    Key out = key;
    for (std::size_t w = 0; w < Words; ++w) {
      const std::size_t lo = w * 64;
      if (prefix <= lo) {
        out[w] = 0;
      } else if (prefix < lo + 64) {
        out[w] &= ~std::uint64_t{0} << (lo + 64 - prefix);
      }
    }
    return out;
  }

  static void normalize(std::vector<Key>& keys) {
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  }

  bool contains(std::size_t t, const Key& key) const {
    return std::binary_search(tables_[t].begin(), tables_[t].end(), key);
  }

  std::vector<Key> leaf(std::size_t t) {
    const NodeLayout& l = layouts_[t];
    const std::size_t p = l.size();
    std::vector<Key> out;
    const std::uint64_t orientations = std::uint64_t{1} << l.edges.size();
    for (std::uint64_t orient = 0; orient < orientations; ++orient) {
      DpState s;
      s.orient = orient;
      l.local_inweight(orient, s.a);
      bool fits = true;
      for (std::size_t i = 0; i < p; ++i) {
        fits = fits && s.a[i] <= k_;
      }
      if (!fits) {
        continue;
      }
      // Promised values: d_i in [a_i, k], distinct across bag edges.
      auto assign = [&](auto&& self, std::size_t i) -> void {
        if (i == p) {
          out.push_back(encode(l, s));
          return;
        }
        for (Weight value = s.a[i]; value <= k_; ++value) {
          bool clash = false;
          for (std::size_t e : l.edges_at[i]) {
            const std::size_t other = l.edges[e].i == i ? l.edges[e].j : l.edges[e].i;
            clash = clash || (other < i && s.d[other] == value);
          }
          if (!clash) {
            s.d[i] = value;
            self(self, i + 1);
          }
        }
      };
      assign(assign, 0);
    }
    normalize(out);
    return out;
  }

  // Bag-position and bag-edge correspondences between a node and its child,
  // where the two bags differ by `v` only.
  struct Transfer {
    std::size_t v_pos;                        // position of v in the larger bag
    std::vector<std::size_t> small_to_large;  // bag positions
    std::vector<std::size_t> edge_map;        // small-bag edge -> large-bag edge
    std::vector<std::size_t> v_edges;         // large-bag edges touching v
  };

  Transfer transfer(const NodeLayout& large, const NodeLayout& small, Vertex v) const {
    Transfer tr;
    tr.v_pos = large.position(v);
    for (Vertex x : small.bag) {
      tr.small_to_large.push_back(large.position(x));
    }
    for (const BagEdge& e : small.edges) {
      tr.edge_map.push_back(large.edge_index(e.id));
    }
    tr.v_edges = large.edges_at[tr.v_pos];
    return tr;
  }

  // Lifts a state of the small bag into the large bag, leaving v's fields,
  // v's edges and the corresponding inweight updates to the caller.
  static DpState lift(const Transfer& tr, const DpState& small, std::size_t small_size) {
    DpState s;
    for (std::size_t e = 0; e < tr.edge_map.size(); ++e) {
      if ((small.orient >> e) & 1U) {
        s.orient |= std::uint64_t{1} << tr.edge_map[e];
      }
    }
    for (std::size_t i = 0; i < small_size; ++i) {
      s.a[tr.small_to_large[i]] = small.a[i];
      s.d[tr.small_to_large[i]] = small.d[i];
    }
    return s;
  }

  static DpState lower(const Transfer& tr, const DpState& large, std::size_t small_size) {
    DpState s;
    for (std::size_t e = 0; e < tr.edge_map.size(); ++e) {
      if ((large.orient >> tr.edge_map[e]) & 1U) {
        s.orient |= std::uint64_t{1} << e;
      }
    }
    for (std::size_t i = 0; i < small_size; ++i) {
      s.a[i] = large.a[tr.small_to_large[i]];
      s.d[i] = large.d[tr.small_to_large[i]];
    }
    return s;
  }

  std::vector<Key> introduce(std::size_t t) {
    const NiceNode& node = ntd_.nodes[t];
    const std::size_t child = node.children[0];
    const NodeLayout& l = layouts_[t];
    const NodeLayout& cl = layouts_[child];
    const Transfer tr = transfer(l, cl, node.vertex);
    const std::uint64_t choices = std::uint64_t{1} << tr.v_edges.size();
    std::vector<Key> out;
    for (const Key& ck : tables_[child]) {
      const DpState base = lift(tr, decode(cl, ck), cl.size());
      for (std::uint64_t mask = 0; mask < choices; ++mask) {
        DpState s = base;
        bool fits = true;
        for (std::size_t b = 0; b < tr.v_edges.size() && fits; ++b) {
          const std::size_t e = tr.v_edges[b];
          if ((mask >> b) & 1U) {
            s.orient |= std::uint64_t{1} << e;
          }
          const std::size_t h = l.head(e, s.orient);
          s.a[h] += l.edges[e].w;
          fits = h == tr.v_pos ? s.a[h] <= k_ : s.a[h] <= s.d[h];
        }
        if (!fits) {
          continue;
        }
        for (Weight value = s.a[tr.v_pos]; value <= k_; ++value) {
          bool clash = false;
          for (std::size_t e : tr.v_edges) {
            const std::size_t other = l.edges[e].i == tr.v_pos ? l.edges[e].j : l.edges[e].i;
            clash = clash || s.d[other] == value;
          }
          if (!clash) {
            s.d[tr.v_pos] = value;
            out.push_back(encode(l, s));
          }
        }
      }
    }
    normalize(out);
    return out;
  }

  std::vector<Key> forget(std::size_t t) {
    const NiceNode& node = ntd_.nodes[t];
    const std::size_t child = node.children[0];
    const NodeLayout& l = layouts_[t];
    const NodeLayout& cl = layouts_[child];
    const Transfer tr = transfer(cl, l, node.vertex);
    std::vector<Key> out;
    for (const Key& ck : tables_[child]) {
      const DpState cs = decode(cl, ck);
      if (cs.a[tr.v_pos] != cs.d[tr.v_pos]) {
        continue;
      }
      out.push_back(encode(l, lower(tr, cs, l.size())));
    }
    normalize(out);
    return out;
  }

  // [first, last) of the entries of table t whose group equals `group`.
  std::pair<std::size_t, std::size_t> group_range(std::size_t t, const Key& group) const {
    const NodeLayout& l = layouts_[t];
    const auto& table = tables_[t];
    const auto first = std::lower_bound(table.begin(), table.end(), group,
                                        [&](const Key& x, const Key& g) { return group_of(l, x) < g; });
    const auto last = std::upper_bound(first, table.end(), group,
                                       [&](const Key& g, const Key& x) { return g < group_of(l, x); });
    return {static_cast<std::size_t>(first - table.begin()), static_cast<std::size_t>(last - table.begin())};
  }

  std::vector<Key> join(std::size_t t) {
    const NiceNode& node = ntd_.nodes[t];
    const std::size_t c1 = node.children[0];
    const std::size_t c2 = node.children[1];
    const NodeLayout& l = layouts_[t];
    const std::size_t p = l.size();
    const auto& left = tables_[c1];
    std::vector<Key> out;
    std::vector<Key> group_out;
    std::vector<DpState> rights;
    std::array<Weight, kMaxDpBag> o{};
    for (std::size_t i = 0; i < left.size();) {
      const Key group = group_of(l, left[i]);
      std::size_t j = i;
      while (j < left.size() && group_of(l, left[j]) == group) {
        ++j;
      }
      const auto [r0, r1] = group_range(c2, group);
      if (r0 < r1) {
        rights.clear();
        for (std::size_t r = r0; r < r1; ++r) {
          rights.push_back(decode(l, tables_[c2][r]));
        }
        l.local_inweight(decode(l, left[i]).orient, o);
        group_out.clear();
        for (std::size_t x = i; x < j; ++x) {
          const DpState s1 = decode(l, left[x]);
          for (const DpState& s2 : rights) {
            DpState s = s1;
            bool fits = true;
            for (std::size_t q = 0; q < p && fits; ++q) {
              // Bag-internal edges are counted in both children.
              s.a[q] = s1.a[q] + s2.a[q] - o[q];
              fits = s.a[q] <= s.d[q];
            }
            if (fits) {
              group_out.push_back(encode(l, s));
            }
          }
        }
        normalize(group_out);
        out.insert(out.end(), group_out.begin(), group_out.end());
      }
      i = j;
    }
    normalize(out);
    return out;
  }

  std::optional<Key> accepting_root_key() const {
    const std::size_t r = ntd_.root();
    const NodeLayout& l = layouts_[r];
    for (const Key& key : tables_[r]) {
      const DpState s = decode(l, key);
      bool settled = true;
      for (std::size_t i = 0; i < l.size(); ++i) {
        settled = settled && s.a[i] == s.d[i];
      }
      if (settled) {
        return key;
      }
    }
    return std::nullopt;
  }

  Key introduce_child_key(std::size_t t, const DpState& s) const {
    const NiceNode& node = ntd_.nodes[t];
    const std::size_t child = node.children[0];
    const NodeLayout& l = layouts_[t];
    const NodeLayout& cl = layouts_[child];
    const Transfer tr = transfer(l, cl, node.vertex);
    DpState adjusted = s;
    for (std::size_t e : tr.v_edges) {
      adjusted.a[l.head(e, s.orient)] -= l.edges[e].w;
    }
    const Key key = encode(cl, lower(tr, adjusted, cl.size()));
    if (!contains(child, key)) {
      throw std::logic_error("introduce entry has no child entry");
    }
    return key;
  }

  Key forget_child_key(std::size_t t, const DpState& s) const {
    const NiceNode& node = ntd_.nodes[t];
    const std::size_t child = node.children[0];
    const NodeLayout& l = layouts_[t];
    const NodeLayout& cl = layouts_[child];
    const Transfer tr = transfer(cl, l, node.vertex);
    const DpState base = lift(tr, s, l.size());
    const std::uint64_t choices = std::uint64_t{1} << tr.v_edges.size();
    for (std::uint64_t mask = 0; mask < choices; ++mask) {
      DpState c = base;
      for (std::size_t b = 0; b < tr.v_edges.size(); ++b) {
        if ((mask >> b) & 1U) {
          c.orient |= std::uint64_t{1} << tr.v_edges[b];
        }
      }
      for (Weight value = 0; value <= k_; ++value) {
        c.a[tr.v_pos] = value;
        c.d[tr.v_pos] = value;
        const Key key = encode(cl, c);
        if (contains(child, key)) {
          return key;
        }
      }
    }
    throw std::logic_error("forget entry has no child entry");
  }

  std::pair<Key, Key> join_child_keys(std::size_t t, const Key& key, const DpState& s) const {
    const NiceNode& node = ntd_.nodes[t];
    const std::size_t c1 = node.children[0];
    const std::size_t c2 = node.children[1];
    const NodeLayout& l = layouts_[t];
    std::array<Weight, kMaxDpBag> o{};
    l.local_inweight(s.orient, o);
    const auto [r0, r1] = group_range(c1, group_of(l, key));
    for (std::size_t r = r0; r < r1; ++r) {
      const DpState s1 = decode(l, tables_[c1][r]);
      DpState s2 = s;
      bool fits = true;
      for (std::size_t q = 0; q < l.size() && fits; ++q) {
        fits = s.a[q] + o[q] >= s1.a[q];
        s2.a[q] = s.a[q] + o[q] - s1.a[q];
      }
      if (!fits) {
        continue;
      }
      const Key k2 = encode(l, s2);
      if (contains(c2, k2)) {
        return {tables_[c1][r], k2};
      }
    }
    throw std::logic_error("join entry has no pair of child entries");
  }

  const WeightedGraph& g_;
  const NiceTreeDecomposition& ntd_;
  std::vector<NodeLayout> layouts_;
  Weight k_;
  std::size_t bits_;
  std::vector<std::vector<Key>> tables_;
};

inline std::vector<NodeLayout> make_layouts(const WeightedGraph& g, const NiceTreeDecomposition& ntd) {
  std::vector<NodeLayout> layouts;
  layouts.reserve(ntd.nodes.size());
  for (const NiceNode& node : ntd.nodes) {
    if (node.bag.size() > kMaxDpBag) {
      throw std::invalid_argument("bag of size " + std::to_string(node.bag.size()) +
                                  " exceeds the supported maximum of " + std::to_string(kMaxDpBag));
    }
    layouts.push_back(make_layout(g, node.bag));
  }
  return layouts;
}

template <std::size_t Words>
std::optional<Orientation> run_engine(const WeightedGraph& g, const NiceTreeDecomposition& ntd,
                                      std::vector<NodeLayout> layouts, Weight k) {
  TwdpEngine<Words> engine(g, ntd, std::move(layouts), k);
  if (!engine.run()) {
    return std::nullopt;
  }
  return engine.witness();
}

inline void require_valid_nice(const WeightedGraph& g, const NiceTreeDecomposition& ntd) {
  validate_nice_shape(ntd);
  validate_td(g, ntd.to_tree_decomposition());
}

inline void ensure_witness(const WeightedGraph& g, const Orientation& d, Weight k) {
  if (!is_proper(g, d) || mu_minus(g, d) > k) {
    throw std::logic_error("treewidth DP produced an invalid witness");
  }
}

inline std::optional<Orientation> twdp_decide_unchecked(const WeightedGraph& g, Weight k,
                                                        const NiceTreeDecomposition& ntd) {
  if (k < g.max_weight()) {
    return std::nullopt;
  }
  std::vector<NodeLayout> layouts = make_layouts(g, ntd);
  const std::size_t need = TwdpEngine<1>::required_bits(layouts, k);
  std::optional<Orientation> result;
  if (need <= 64) {
    result = run_engine<1>(g, ntd, std::move(layouts), k);
  } else if (need <= 128) {
    result = run_engine<2>(g, ntd, std::move(layouts), k);
  } else if (need <= 256) {
    result = run_engine<4>(g, ntd, std::move(layouts), k);
  } else if (need <= 512) {
    result = run_engine<8>(g, ntd, std::move(layouts), k);
  } else {
    throw std::invalid_argument("decomposition too wide for bound " + std::to_string(k));
  }
  if (result) {
    ensure_witness(g, *result, k);
  }
  return result;
}

}  // namespace detail

/// A proper orientation with mu^- <= k, or nullopt if none exists.
inline std::optional<Orientation> twdp_decide(const WeightedGraph& g, Weight k, const NiceTreeDecomposition& ntd) {
  detail::require_valid_nice(g, ntd);
  return detail::twdp_decide_unchecked(g, k, ntd);
}

/// po(G, w) restricted to values <= cap: the least feasible k and a witness,
/// or nullopt when no proper orientation reaches mu^- <= cap.  Probes k
/// upward from K with doubling steps, then bisects the last gap, so the
/// expensive large bounds are only tried when the smaller ones fail.
inline std::optional<PoSolution> twdp_po_capped(const WeightedGraph& g, const NiceTreeDecomposition& ntd, Weight cap) {
  detail::require_valid_nice(g, ntd);
  if (g.num_edges() == 0) {
    return PoSolution{0, Orientation(0)};
  }
  const Weight lo_bound = g.max_weight();
  if (cap < lo_bound) {
    return std::nullopt;
  }
  Weight k = lo_bound;
  Weight step = 1;
  std::optional<Weight> last_no;
  std::optional<Orientation> found;
  for (;;) {
    found = detail::twdp_decide_unchecked(g, k, ntd);
    if (found) {
      break;
    }
    last_no = k;
    if (k >= cap) {
      return std::nullopt;
    }
    k = (cap - k > step) ? k + step : cap;
    step *= 2;
  }
  Weight lo = last_no ? *last_no + 1 : k;
  Weight hi = k;
  while (lo < hi) {
    const Weight mid = lo + (hi - lo) / 2;
    if (auto d = detail::twdp_decide_unchecked(g, mid, ntd)) {
      hi = mid;
      found = std::move(d);
    } else {
      lo = mid + 1;
    }
  }
  PoSolution sol{hi, std::move(*found)};
  if (mu_minus(g, sol.witness) != hi) {
    throw std::logic_error("treewidth DP witness does not attain the optimum");
  }
  return sol;
}

/// po(G, w) by the treewidth DP, searching k in [K, total weight].  nullopt
/// means the graph has no proper orientation at all.
inline std::optional<PoSolution> twdp_po(const WeightedGraph& g, const NiceTreeDecomposition& ntd) {
  return twdp_po_capped(g, ntd, g.total_weight());
}

}  // namespace wpo
