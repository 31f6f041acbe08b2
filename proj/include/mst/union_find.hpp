#pragma once

#include <atomic>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "mst/graph.hpp"

namespace mst {

using WorkerId = std::int32_t;
inline constexpr WorkerId kNoWorker = -1;

enum class ForestErrorKind { NotARoot, NotHeld };

class ForestError : public std::logic_error {
 public:
  ForestError(ForestErrorKind kind, const std::string& what)
      : std::logic_error(what), kind_(kind) {}
  ForestErrorKind kind() const noexcept { return kind_; }

 private:
  ForestErrorKind kind_;
};

/// Disjoint-set forest shared by all MST algorithms. Per vertex it carries a
/// parent link, a component size (meaningful at roots), the owning worker id,
/// and a lock slot; plus a shared live-component counter.
///
/// All entries are single-word atomics. The concurrent contract:
///   - find() is a read-only parent walk (acquire loads, no writes),
///   - lock slots move only through compare-exchange (acquire-release),
///   - try_union_cas() swings a child root's parent with one compare-exchange,
///   - union_by_size() and find_halving() demand a single-threaded caller.
class ComponentForest {
 public:
  ComponentForest(VertexId n, int num_workers);

  VertexId vertex_count() const noexcept { return static_cast<VertexId>(parent_.size()); }
  int worker_count() const noexcept { return workers_; }

  /// Root of v's component at some instant during the call.
  VertexId find(VertexId v) const noexcept;

  /// Find with path halving. Single-threaded use only.
  VertexId find_halving(VertexId v) noexcept;

  /// Merges two roots, larger component surviving (tie: first argument).
  /// Returns the surviving root. Single-threaded use only.
  /// Throws ForestError{NotARoot} if either argument is not a root.
  VertexId union_by_size(VertexId r1, VertexId r2);

  /// Merges `child` into `survivor` by direct parent assignment and hands
  /// ownership of the survivor to `tid`. The caller must hold exclusion over
  /// both components (lock-variant critical section).
  void union_into(VertexId survivor, VertexId child, WorkerId tid) noexcept;

  /// Single compare-exchange union. The larger of the two ids is always the
  /// child, so every parent link ever created points to a smaller id and the
  /// union digraph stays acyclic under any interleaving. Returns false when
  /// the child root was already merged away by another worker.
  bool try_union_cas(VertexId c1, VertexId c2, WorkerId tid) noexcept;

  /// Non-blocking acquisition of both lock slots via per-entry
  /// compare-exchange(-1 -> tid). On failure every slot this call took is
  /// released again; there is no waiting.
  bool try_lock_pair(VertexId c1, VertexId c2, WorkerId tid) noexcept;

  /// Releases both slots. Throws ForestError{NotHeld} if a slot does not
  /// contain tid (protocol bug in the caller).
  void unlock_pair(VertexId c1, VertexId c2, WorkerId tid);

  /// Guarded-store lock protocol: check both slots are free, plainly store
  /// tid into both, then re-check. Kept for study; the window between check
  /// and store admits two simultaneous holders, and a failed re-check leaks
  /// any slot already overwritten. Do not use where exclusion matters.
  bool try_lock_pair_faithful(VertexId c1, VertexId c2, WorkerId tid) noexcept;
  void unlock_pair_faithful(VertexId c1, VertexId c2) noexcept;

  /// Current number of live components (shared counter snapshot).
  VertexId component_count() const noexcept {
    return live_.load(std::memory_order_acquire);
  }

  VertexId parent(VertexId v) const noexcept {
    return parent_[v].load(std::memory_order_acquire);
  }
  bool is_root(VertexId v) const noexcept { return parent(v) == v; }
  VertexId component_size(VertexId root) const noexcept {
    return size_[root].load(std::memory_order_relaxed);
  }
  WorkerId owner(VertexId v) const noexcept {
    return owner_[v].load(std::memory_order_acquire);
  }
  void set_owner(VertexId v, WorkerId tid) noexcept {
    owner_[v].store(tid, std::memory_order_release);
  }
  WorkerId lock_holder(VertexId v) const noexcept {
    return lock_[v].load(std::memory_order_acquire);
  }

 private:
  std::vector<std::atomic<VertexId>> parent_;
  std::vector<std::atomic<VertexId>> size_;
  std::vector<std::atomic<WorkerId>> owner_;
  std::vector<std::atomic<WorkerId>> lock_;
  std::atomic<VertexId> live_{0};
  int workers_ = 1;
};

}  // namespace mst
