#pragma once

#include <cstdint>
#include <vector>

#include "mst/graph.hpp"

namespace mst {

/// Output contract of every MST algorithm. For a connected input,
/// mst_edges holds exactly n-1 distinct edge ids (sorted ascending) and
/// total_weight is their weight sum. rounds counts outer iterations
/// (1 by convention for Kruskal). elapsed_ms covers the computation only,
/// excluding graph load and covered-flag reset.
struct MstResult {
  std::vector<EdgeId> mst_edges;
  Weight total_weight = 0;
  std::uint32_t rounds = 0;
  double elapsed_ms = 0.0;
};

}  // namespace mst
