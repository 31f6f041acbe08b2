#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "mst/graph.hpp"
#include "mst/mst_result.hpp"

namespace mst {

/// Static work distribution for T workers: spaced starting offsets into the
/// edge array (every worker still scans all m edges, wrapping around) and a
/// block partition of the vertices for initial ownership.
struct WorkerPlan {
  int num_workers = 1;
  std::vector<EdgeId> edge_start;                          // floor(t*m/T)
  std::vector<std::pair<VertexId, VertexId>> owned_range;  // [first, second)
};

WorkerPlan plan_workers(EdgeId m, VertexId n, int num_workers);

/// Applies f to each edge index in worker t's scan order: start at
/// edge_start[t], walk m steps, wrap at m. Visits every index exactly once.
template <typename F>
void for_each_scan_index(EdgeId start, EdgeId m, F&& f) {
  EdgeId idx = start;
  for (EdgeId k = 0; k < m; ++k) {
    f(idx);
    if (++idx == m) idx = 0;
  }
}

struct ParallelOptions {
  /// Use the guarded-store lock protocol exactly as the hardened one's
  /// predecessor works: check-then-store without compare-exchange. Unsound
  /// (two workers can pass the re-check together, and failed attempts can
  /// leak lock slots); available for study only. Runs that stall because of
  /// a leaked slot abort with WorkerPanic.
  bool faithful_lock = false;
};

/// A worker thread failed or the run stalled; the run was aborted.
class WorkerPanic : public std::runtime_error {
 public:
  explicit WorkerPanic(const std::string& what) : std::runtime_error(what) {}
};

/// Post-run forest observations, taken after the clock stops: every lock
/// slot back to -1, every parent walk terminating, and the live-component
/// count (1 for a completed run).
struct ParallelRunInfo {
  bool locks_quiescent = false;
  bool forest_acyclic = false;
  VertexId final_components = 0;
};

/// Parallel Boruvka, lock-variable variant: workers compute minimum outgoing
/// edges for the component roots they own, then serialize each merge by
/// taking both components' lock slots (non-blocking try-lock, no spinning),
/// re-finding the endpoints under the lock, and unioning only if they still
/// differ. One barrier per round, before the minimum table re-init and the
/// termination check.
MstResult boruvka_lock(Graph& g, int num_workers, const ParallelOptions& opts = {},
                       ParallelRunInfo* info = nullptr);

/// Parallel Boruvka, compare-and-swap variant: no locks; each merge is a
/// single atomic parent swing on the child root, and the edge is admitted to
/// the MST only when that swing succeeds.
MstResult boruvka_cas(Graph& g, int num_workers, ParallelRunInfo* info = nullptr);

}  // namespace mst
