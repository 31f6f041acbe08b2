#pragma once

// Test-only exhaustive MST oracle: enumerates every (n-1)-edge subset and
// keeps the spanning acyclic one with the least total weight. Independent of
// every library code path, including the library's union-find. Usable up to
// roughly m = 20.

#include <cstdint>
#include <utility>
#include <vector>

#include "mst/graph.hpp"

namespace testutil {

struct BruteForceMst {
  std::vector<mst::EdgeId> edges;  // sorted ascending
  mst::Weight total_weight = 0;
  std::size_t spanning_tree_count = 0;
};

inline BruteForceMst brute_force_mst(const mst::Graph& g) {
  const mst::VertexId n = g.vertex_count();
  const auto m = static_cast<unsigned>(g.edge_count());

  // local root finder over a plain parent array (no halving, no sharing)
  auto root_of = [](std::vector<mst::VertexId>& par, mst::VertexId v) {
    while (par[v] != v) v = par[v];
    return v;
  };

  BruteForceMst best;
  bool have = false;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (static_cast<unsigned>(__builtin_popcount(mask)) != n - 1) continue;
    std::vector<mst::VertexId> par(n);
    for (mst::VertexId v = 0; v < n; ++v) par[v] = v;
    bool acyclic = true;
    mst::Weight w = 0;
    std::vector<mst::EdgeId> chosen;
    for (unsigned e = 0; e < m; ++e) {
      if (!(mask & (1u << e))) continue;
      const mst::Edge& ed = g.edge(e);
      const mst::VertexId a = root_of(par, ed.src);
      const mst::VertexId b = root_of(par, ed.dest);
      if (a == b) {
        acyclic = false;
        break;
      }
      par[a] = b;
      w += ed.weight;
      chosen.push_back(e);
    }
    if (!acyclic) continue;
    // n-1 acyclic edges on n vertices always span
    ++best.spanning_tree_count;
    if (!have || w < best.total_weight) {
      best.total_weight = w;
      best.edges = chosen;
      have = true;
    }
  }
  return best;
}

}  // namespace testutil
