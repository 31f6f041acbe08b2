#pragma once

#include <numeric>
#include <vector>

#include "mst/graph.hpp"

namespace mst::detail {

// Minimal single-threaded union-find used by the checking side (input
// validation, Kruskal oracle, result verifier). Deliberately independent of
// ComponentForest so oracle and implementation share no forest code.
struct SimpleDsu {
  std::vector<VertexId> parent;
  std::vector<VertexId> size;

  explicit SimpleDsu(VertexId n) : parent(n), size(n, 1) {
    std::iota(parent.begin(), parent.end(), VertexId{0});
  }

  VertexId find(VertexId v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];  // path halving
      v = parent[v];
    }
    return v;
  }

  // True iff a and b were in different sets (a union happened).
  bool unite(VertexId a, VertexId b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
    return true;
  }
};

}  // namespace mst::detail
