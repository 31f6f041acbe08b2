#include "mst/boruvka_parallel.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>

#include "mst/union_find.hpp"

namespace mst {

WorkerPlan plan_workers(EdgeId m, VertexId n, int num_workers) {
  if (num_workers < 1) throw std::invalid_argument("plan_workers: need num_workers >= 1");
  WorkerPlan plan;
  plan.num_workers = num_workers;
  plan.edge_start.resize(num_workers);
  plan.owned_range.resize(num_workers);
  const VertexId chunk = (n + num_workers - 1) / static_cast<VertexId>(num_workers);
  for (int t = 0; t < num_workers; ++t) {
    plan.edge_start[t] = static_cast<EdgeId>(t) * m / num_workers;
    const VertexId lo = std::min<VertexId>(static_cast<VertexId>(t) * chunk, n);
    const VertexId hi = std::min<VertexId>(lo + chunk, n);
    plan.owned_range[t] = {lo, hi};
  }
  return plan;
}

namespace {

using Clock = std::chrono::steady_clock;

// Shared per-round bookkeeping, written only inside the round-boundary
// `single` block (which the team leaves through a barrier).
struct RoundState {
  VertexId prev_live = 0;
  std::uint32_t rounds = 0;
  std::uint32_t stalled = 0;
  bool stop = false;
  bool stuck = false;
};

// A single merge-free round is legitimate under contention (e.g. two workers
// fail a symmetric try-lock on the last component pair and both retry next
// round). A long unbroken run of them means the protocol is wedged, which is
// what the leaky guarded-store lock mode produces.
constexpr std::uint32_t kMaxStalledRounds = 64;

struct PanicBox {
  std::atomic<bool> flag{false};
  std::mutex mu;
  std::string what;

  void raise(const char* msg) {
    {
      std::lock_guard<std::mutex> g(mu);
      if (what.empty()) what = msg;
    }
    flag.store(true, std::memory_order_release);
  }
};

enum class Variant { Lock, LockFaithful, Cas };

void observe_forest(const ComponentForest& forest, ParallelRunInfo& info) {
  const VertexId n = forest.vertex_count();
  info.final_components = forest.component_count();
  info.locks_quiescent = true;
  info.forest_acyclic = true;
  for (VertexId v = 0; v < n; ++v) {
    if (forest.lock_holder(v) != kNoWorker) info.locks_quiescent = false;
    VertexId cur = v;
    VertexId steps = 0;
    while (forest.parent(cur) != cur) {
      cur = forest.parent(cur);
      if (++steps > n) {  // a walk longer than n vertices must repeat one
        info.forest_acyclic = false;
        break;
      }
    }
  }
}

MstResult run_parallel(Graph& g, int num_workers, Variant variant, ParallelRunInfo* info) {
  if (num_workers < 1) throw std::invalid_argument("boruvka: need num_workers >= 1");
  const VertexId n = g.vertex_count();
  const EdgeId m = g.edge_count();

  g.reset_covered();
  const auto t0 = Clock::now();

  ComponentForest forest(n, num_workers);
  const WorkerPlan plan = plan_workers(m, n, num_workers);

  std::vector<std::atomic<EdgeId>> minimum(n);
  for (auto& cell : minimum) cell.store(kNoEdge, std::memory_order_relaxed);

  std::vector<std::vector<EdgeId>> picked(num_workers);

  // Per-worker round scratch. `mine` lists the vertices this worker owned at
  // round start: a minimum[v] may be consumed only for those, and only while
  // still owned and not acquired from another worker mid-round (`taken`).
  // Candidates for such roots all come from this worker's own completed scan;
  // a survivor acquired mid-round may carry a partially computed minimum from
  // the previous owner's unfinished scan, and merging along such an edge can
  // admit a crossing edge that is not the component minimum.
  struct Scratch {
    std::vector<VertexId> mine;
    std::vector<char> taken;
    std::vector<VertexId> taken_list;
  };
  std::vector<Scratch> scratch(num_workers);
  for (auto& s : scratch) {
    s.taken.assign(n, 0);
    s.mine.reserve(n / num_workers + 2);
  }

  RoundState rs;
  rs.prev_live = n;
  rs.stop = (n <= 1);
  PanicBox panic;
  int team = 0;

  omp_set_dynamic(0);

#pragma omp parallel num_threads(num_workers)
  {
    const int tid = omp_get_thread_num();
#pragma omp single
    team = omp_get_num_threads();
    // implicit barrier: every worker sees `team`

    while (team == num_workers && !rs.stop) {
      if (!panic.flag.load(std::memory_order_relaxed)) {
        try {
          Scratch& sc = scratch[tid];
          for (VertexId v : sc.taken_list) sc.taken[v] = 0;
          sc.taken_list.clear();
          sc.mine.clear();

          // Re-init the minimum table for currently owned vertices.
          for (VertexId v = 0; v < n; ++v)
            if (forest.owner(v) == tid) {
              minimum[v].store(kNoEdge, std::memory_order_release);
              sc.mine.push_back(v);
            }

          // Edge scan from this worker's spaced start, wrapping around.
          for_each_scan_index(plan.edge_start[tid], m, [&](EdgeId e) {
            if (g.covered(e)) return;
            const Edge& ed = g.edge(e);
            const VertexId c1 = forest.find(ed.src);
            const VertexId c2 = forest.find(ed.dest);
            if (c1 == c2) {
              g.set_covered(e);
              return;
            }
            auto offer = [&](VertexId c) {
              if (forest.owner(c) != tid) return;
              const EdgeId cur = minimum[c].load(std::memory_order_acquire);
              if (cur == kNoEdge || g.edge(cur).weight > ed.weight)
                minimum[c].store(e, std::memory_order_release);
            };
            offer(c1);
            offer(c2);
          });

          // Merge phase over the roots owned since round start.
          auto mark_taken = [&](VertexId survivor, WorkerId prior_owner) {
            if (prior_owner != tid && !sc.taken[survivor]) {
              sc.taken[survivor] = 1;
              sc.taken_list.push_back(survivor);
            }
          };
          for (VertexId v : sc.mine) {
            if (forest.owner(v) != tid || !forest.is_root(v)) continue;
            if (sc.taken[v]) continue;  // acquired mid-round: candidates may be partial
            const EdgeId e = minimum[v].load(std::memory_order_acquire);
            if (e == kNoEdge) continue;
            const Edge& ed = g.edge(e);
            const VertexId c1 = forest.find(ed.src);
            const VertexId c2 = forest.find(ed.dest);
            if (c1 == c2) {
              g.set_covered(e);
              continue;
            }
            switch (variant) {
              case Variant::Cas: {
                const VertexId survivor = std::min(c1, c2);
                const WorkerId prior = forest.owner(survivor);
                if (forest.try_union_cas(c1, c2, tid)) {
                  picked[tid].push_back(e);
                  g.set_covered(e);
                  mark_taken(survivor, prior);
                }
                break;
              }
              case Variant::Lock:
              case Variant::LockFaithful: {
                const bool locked = (variant == Variant::LockFaithful)
                                        ? forest.try_lock_pair_faithful(c1, c2, tid)
                                        : forest.try_lock_pair(c1, c2, tid);
                if (!locked) break;  // non-blocking: retry lands in a later round
                // Re-find under the lock. Proceed only if the roots are still
                // the locked pair: only then does holding the lock slots give
                // exclusion over the components actually being merged. If the
                // roots moved, skip; the edge stays uncovered for next round.
                const VertexId r1 = forest.find(ed.src);
                const VertexId r2 = forest.find(ed.dest);
                const bool still_locked_pair =
                    (r1 == c1 && r2 == c2) || (r1 == c2 && r2 == c1);
                if (still_locked_pair) {
                  const WorkerId prior = forest.owner(r1);
                  picked[tid].push_back(e);
                  forest.union_into(r1, r2, tid);
                  g.set_covered(e);
                  mark_taken(r1, prior);
                }
                if (variant == Variant::LockFaithful)
                  forest.unlock_pair_faithful(c1, c2);
                else
                  forest.unlock_pair(c1, c2, tid);
                break;
              }
            }
          }
        } catch (const std::exception& ex) {
          panic.raise(ex.what());
        } catch (...) {
          panic.raise("unknown worker exception");
        }
      }

#pragma omp barrier
#pragma omp single
      {
        rs.rounds += 1;
        const VertexId live = forest.component_count();
        if (panic.flag.load(std::memory_order_acquire)) {
          rs.stop = true;
        } else if (live <= 1) {
          rs.stop = true;
        } else if (live == rs.prev_live) {
          if (++rs.stalled >= kMaxStalledRounds) {
            rs.stop = true;
            rs.stuck = true;
          }
        } else {
          rs.stalled = 0;
        }
        rs.prev_live = live;
      }
      // implicit barrier: all workers observe the verdict together
    }
  }

  if (team != num_workers)
    throw WorkerPanic("requested " + std::to_string(num_workers) + " workers, OpenMP delivered " +
                      std::to_string(team));
  if (panic.flag.load(std::memory_order_acquire)) throw WorkerPanic(panic.what);
  if (rs.stuck)
    throw WorkerPanic("no component merged for " + std::to_string(rs.stalled) +
                      " consecutive rounds with " + std::to_string(rs.prev_live) +
                      " components left (wedged lock protocol?)");

  MstResult out;
  out.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  out.rounds = rs.rounds;
  if (info) observe_forest(forest, *info);
  std::size_t total = 0;
  for (const auto& lst : picked) total += lst.size();
  out.mst_edges.reserve(total);
  for (const auto& lst : picked) out.mst_edges.insert(out.mst_edges.end(), lst.begin(), lst.end());
  std::sort(out.mst_edges.begin(), out.mst_edges.end());
  out.total_weight = 0;
  for (EdgeId e : out.mst_edges) out.total_weight += g.edge(e).weight;
  return out;
}

}  // namespace

MstResult boruvka_lock(Graph& g, int num_workers, const ParallelOptions& opts,
                       ParallelRunInfo* info) {
  return run_parallel(g, num_workers,
                      opts.faithful_lock ? Variant::LockFaithful : Variant::Lock, info);
}

MstResult boruvka_cas(Graph& g, int num_workers, ParallelRunInfo* info) {
  return run_parallel(g, num_workers, Variant::Cas, info);
}

}  // namespace mst
