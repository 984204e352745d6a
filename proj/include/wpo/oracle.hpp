#pragma once

// Ground truth for small instances.  Everything here enumerates orientations
// directly from the definitions; nothing reuses the solvers it is meant to
// check.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wpo/graph.hpp"

namespace wpo {

inline constexpr std::size_t kDefaultBruteForceLimit = 22;

namespace detail {

inline void require_brute_force_size(const WeightedGraph& g, std::size_t limit) {
  if (limit > 40) {
    throw std::invalid_argument("brute-force limit above 40 edges is not supported");
  }
  if (g.num_edges() > limit) {
    throw std::invalid_argument("graph has " + std::to_string(g.num_edges()) +
                                " edges, above the brute-force limit of " + std::to_string(limit));
  }
}

// Bit e of `counter` orients edge e toward its stored v endpoint.
inline Orientation orientation_from_counter(std::size_t m, std::uint64_t counter) {
  Orientation d(m);
  for (EdgeId e = 0; e < m; ++e) {
    d.set_toward_v(e, ((counter >> e) & 1U) != 0);
  }
  return d;
}

}  // namespace detail

/// Minimum mu^- over all proper orientations, by scanning every orientation
/// in binary-counter order.  Ties go to the lowest counter.  nullopt when no
/// orientation is proper.
inline std::optional<PoSolution> brute_force_po(const WeightedGraph& g,
                                                std::size_t limit = kDefaultBruteForceLimit) {
  detail::require_brute_force_size(g, limit);
  const std::size_t m = g.num_edges();
  const std::uint64_t count = std::uint64_t{1} << m;
  std::optional<std::uint64_t> best_counter;
  Weight best = 0;
  std::vector<Weight> in(g.num_vertices());
  for (std::uint64_t counter = 0; counter < count; ++counter) {
    std::fill(in.begin(), in.end(), 0);
    for (EdgeId e = 0; e < m; ++e) {
      const Edge& ed = g.edge(e);
      in[((counter >> e) & 1U) ? ed.v : ed.u] += ed.w;
    }
    bool proper = true;
    for (const Edge& ed : g.edges()) {
      if (in[ed.u] == in[ed.v]) {
        proper = false;
        break;
      }
    }
    if (!proper) {
      continue;
    }
    const Weight mu = in.empty() ? 0 : *std::max_element(in.begin(), in.end());
    if (!best_counter || mu < best) {
      best = mu;
      best_counter = counter;
    }
  }
  if (!best_counter) {
    return std::nullopt;
  }
  return PoSolution{best, detail::orientation_from_counter(m, *best_counter)};
}

/// Any orientation (proper or not) with mu^- <= k: the first in counter order.
inline std::optional<Orientation> brute_force_mmi(const WeightedGraph& g, Weight k,
                                                  std::size_t limit = kDefaultBruteForceLimit) {
  detail::require_brute_force_size(g, limit);
  const std::size_t m = g.num_edges();
  const std::uint64_t count = std::uint64_t{1} << m;
  std::vector<Weight> in(g.num_vertices());
  for (std::uint64_t counter = 0; counter < count; ++counter) {
    std::fill(in.begin(), in.end(), 0);
    bool within = true;
    for (EdgeId e = 0; e < m && within; ++e) {
      const Edge& ed = g.edge(e);
      const Vertex head = ((counter >> e) & 1U) ? ed.v : ed.u;
      in[head] += ed.w;
      within = in[head] <= k;
    }
    if (within) {
      return detail::orientation_from_counter(m, counter);
    }
  }
  return std::nullopt;
}

/// Complete depth-first search for a proper orientation with mu^- <= k.
/// Branches are cut only when a partial inweight exceeds k or two finished
/// neighbors collide, so it explores every orientation not excluded by those
/// two facts.  Meant for gadget graphs that are too large for the counter scan
/// but highly constrained.
inline std::optional<Orientation> exhaustive_decide_po(const WeightedGraph& g, Weight k) {
  const std::size_t n = g.num_vertices();
  const std::size_t m = g.num_edges();

  // Breadth-first vertex order; edges sorted by the later endpoint so that
  // vertices complete as early as possible.
  std::vector<std::size_t> pos(n, n);
  std::size_t next = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (pos[s] != n) {
      continue;
    }
    std::vector<Vertex> queue{s};
    pos[s] = next++;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (const Incidence& inc : g.incident(queue[i])) {
        if (pos[inc.neighbor] == n) {
          pos[inc.neighbor] = next++;
          queue.push_back(inc.neighbor);
        }
      }
    }
  }
  std::vector<EdgeId> order(m);
  for (EdgeId e = 0; e < m; ++e) {
    order[e] = e;
  }
  std::sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
    const Edge& x = g.edge(a);
    const Edge& y = g.edge(b);
    const auto kx = std::make_pair(std::max(pos[x.u], pos[x.v]), std::min(pos[x.u], pos[x.v]));
    const auto ky = std::make_pair(std::max(pos[y.u], pos[y.v]), std::min(pos[y.u], pos[y.v]));
    return kx < ky;
  });

  std::vector<Weight> in(n, 0);
  std::vector<std::size_t> open(n);
  for (Vertex v = 0; v < n; ++v) {
    open[v] = g.degree(v);
  }
  Orientation d(m);

  auto collides = [&](Vertex x) {
    for (const Incidence& inc : g.incident(x)) {
      if (open[inc.neighbor] == 0 && in[inc.neighbor] == in[x]) {
        return true;
      }
    }
    return false;
  };

  auto search = [&](auto&& self, std::size_t i) -> bool {
    if (i == m) {
      return true;
    }
    const EdgeId e = order[i];
    const Edge& ed = g.edge(e);
    for (const bool toward_v : {true, false}) {
      const Vertex head = toward_v ? ed.v : ed.u;
      if (in[head] + ed.w > k) {
        continue;
      }
      in[head] += ed.w;
      --open[ed.u];
      --open[ed.v];
      const bool ok = !(open[ed.u] == 0 && collides(ed.u)) && !(open[ed.v] == 0 && collides(ed.v));
      if (ok) {
        d.set_toward_v(e, toward_v);
        if (self(self, i + 1)) {
          return true;
        }
      }
      ++open[ed.u];
      ++open[ed.v];
      in[head] -= ed.w;
    }
    return false;
  };
  if (!search(search, 0)) {
    return std::nullopt;
  }
  return d;
}

/// Subset Sum by listing all 2^n index subsets.
inline bool brute_force_subset_sum(const std::vector<Weight>& items, Weight target) {
  if (items.size() > 30) {
    throw std::invalid_argument("too many items for subset enumeration");
  }
  const std::uint64_t count = std::uint64_t{1} << items.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    Weight sum = 0;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if ((mask >> i) & 1U) {
        sum += items[i];
      }
    }
    if (sum == target) {
      return true;
    }
  }
  return false;
}

}  // namespace wpo
