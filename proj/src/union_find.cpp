#include "mst/union_find.hpp"

#include <cassert>

namespace mst {

ComponentForest::ComponentForest(VertexId n, int num_workers) {
  if (n < 1) throw std::invalid_argument("ComponentForest: need n >= 1");
  if (num_workers < 1) throw std::invalid_argument("ComponentForest: need num_workers >= 1");
  workers_ = num_workers;

  parent_ = std::vector<std::atomic<VertexId>>(n);
  size_ = std::vector<std::atomic<VertexId>>(n);
  owner_ = std::vector<std::atomic<WorkerId>>(n);
  lock_ = std::vector<std::atomic<WorkerId>>(n);

  // Block-partition ownership: worker t owns [t*ceil(n/T), (t+1)*ceil(n/T)).
  const VertexId chunk = (n + num_workers - 1) / static_cast<VertexId>(num_workers);
  for (VertexId v = 0; v < n; ++v) {
    parent_[v].store(v, std::memory_order_relaxed);
    size_[v].store(1, std::memory_order_relaxed);
    owner_[v].store(static_cast<WorkerId>(v / chunk), std::memory_order_relaxed);
    lock_[v].store(kNoWorker, std::memory_order_relaxed);
  }
  live_.store(n, std::memory_order_relaxed);
}

VertexId ComponentForest::find(VertexId v) const noexcept {
  VertexId p = parent_[v].load(std::memory_order_acquire);
  while (p != v) {
    v = p;
    p = parent_[v].load(std::memory_order_acquire);
  }
  return v;
}

VertexId ComponentForest::find_halving(VertexId v) noexcept {
  VertexId p = parent_[v].load(std::memory_order_relaxed);
  while (p != v) {
    const VertexId gp = parent_[p].load(std::memory_order_relaxed);
    parent_[v].store(gp, std::memory_order_relaxed);
    v = gp;
    p = parent_[v].load(std::memory_order_relaxed);
  }
  return v;
}

VertexId ComponentForest::union_by_size(VertexId r1, VertexId r2) {
  if (r1 == r2) throw std::invalid_argument("union_by_size: r1 == r2");
  if (parent_[r1].load(std::memory_order_relaxed) != r1)
    throw ForestError(ForestErrorKind::NotARoot, "union_by_size: " + std::to_string(r1));
  if (parent_[r2].load(std::memory_order_relaxed) != r2)
    throw ForestError(ForestErrorKind::NotARoot, "union_by_size: " + std::to_string(r2));

  const VertexId s1 = size_[r1].load(std::memory_order_relaxed);
  const VertexId s2 = size_[r2].load(std::memory_order_relaxed);
  const VertexId survivor = (s2 > s1) ? r2 : r1;  // tie: first argument
  const VertexId child = (survivor == r1) ? r2 : r1;

  parent_[child].store(survivor, std::memory_order_relaxed);
  size_[survivor].store(s1 + s2, std::memory_order_relaxed);
  live_.fetch_sub(1, std::memory_order_relaxed);
  return survivor;
}

void ComponentForest::union_into(VertexId survivor, VertexId child, WorkerId tid) noexcept {
  assert(survivor != child);
  parent_[child].store(survivor, std::memory_order_release);
  size_[survivor].fetch_add(size_[child].load(std::memory_order_relaxed),
                            std::memory_order_relaxed);
  owner_[survivor].store(tid, std::memory_order_release);
  live_.fetch_sub(1, std::memory_order_acq_rel);
}

bool ComponentForest::try_union_cas(VertexId c1, VertexId c2, WorkerId tid) noexcept {
  assert(c1 != c2);
  const VertexId survivor = c1 < c2 ? c1 : c2;
  const VertexId child = c1 < c2 ? c2 : c1;

  VertexId expected = child;  // the swing succeeds only while child is a root
  if (!parent_[child].compare_exchange_strong(expected, survivor, std::memory_order_acq_rel,
                                              std::memory_order_acquire))
    return false;

  // Size bookkeeping is not atomic with the swing; sizes stay heuristic here
  // (only the sequential union path treats them as exact).
  size_[survivor].fetch_add(size_[child].load(std::memory_order_relaxed),
                            std::memory_order_relaxed);
  owner_[survivor].store(tid, std::memory_order_release);
  live_.fetch_sub(1, std::memory_order_acq_rel);
  return true;
}

bool ComponentForest::try_lock_pair(VertexId c1, VertexId c2, WorkerId tid) noexcept {
  assert(c1 != c2);
  WorkerId expected = kNoWorker;
  if (!lock_[c1].compare_exchange_strong(expected, tid, std::memory_order_acq_rel,
                                         std::memory_order_acquire))
    return false;
  expected = kNoWorker;
  if (!lock_[c2].compare_exchange_strong(expected, tid, std::memory_order_acq_rel,
                                         std::memory_order_acquire)) {
    // Roll back the slot we did take so every failed attempt leaves both -1.
    WorkerId held = tid;
    const bool released = lock_[c1].compare_exchange_strong(
        held, kNoWorker, std::memory_order_acq_rel, std::memory_order_acquire);
    assert(released);
    (void)released;
    return false;
  }
  return true;
}

void ComponentForest::unlock_pair(VertexId c1, VertexId c2, WorkerId tid) {
  for (VertexId c : {c1, c2}) {
    WorkerId held = tid;
    if (!lock_[c].compare_exchange_strong(held, kNoWorker, std::memory_order_acq_rel,
                                          std::memory_order_acquire))
      throw ForestError(ForestErrorKind::NotHeld,
                        "unlock_pair: slot " + std::to_string(c) + " holds " +
                            std::to_string(held) + ", not " + std::to_string(tid));
  }
}

bool ComponentForest::try_lock_pair_faithful(VertexId c1, VertexId c2, WorkerId tid) noexcept {
  if (lock_[c1].load(std::memory_order_acquire) == kNoWorker &&
      lock_[c2].load(std::memory_order_acquire) == kNoWorker) {
    lock_[c1].store(tid, std::memory_order_release);
    lock_[c2].store(tid, std::memory_order_release);
  }
  return lock_[c1].load(std::memory_order_acquire) == tid &&
         lock_[c2].load(std::memory_order_acquire) == tid;
}

void ComponentForest::unlock_pair_faithful(VertexId c1, VertexId c2) noexcept {
  lock_[c1].store(kNoWorker, std::memory_order_release);
  lock_[c2].store(kNoWorker, std::memory_order_release);
}

}  // namespace mst
