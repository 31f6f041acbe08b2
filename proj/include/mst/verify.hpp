#pragma once

#include <string>

#include "mst/graph.hpp"
#include "mst/mst_result.hpp"

namespace mst {

/// Outcome of checking an MstResult against the graph and the Kruskal
/// oracle. All five flags true  <=>  the result is the unique MST.
struct VerifyReport {
  bool is_spanning = false;
  bool is_acyclic = false;
  bool edge_count_ok = false;
  bool weight_matches_oracle = false;
  bool edge_set_matches_oracle = false;
  std::string details;

  bool all_ok() const noexcept {
    return is_spanning && is_acyclic && edge_count_ok && weight_matches_oracle &&
           edge_set_matches_oracle;
  }
};

/// Structural checks use a fresh private union-find over the result edges;
/// oracle checks recompute Kruskal on the graph. Throws std::out_of_range on
/// an edge id outside [0, m).
VerifyReport verify_mst(const Graph& g, const MstResult& result);

/// Same checks against a caller-supplied oracle result (computed once and
/// reused across many verifications of the same graph).
VerifyReport verify_mst(const Graph& g, const MstResult& result, const MstResult& oracle);

}  // namespace mst
