#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <random>
#include <thread>
#include <vector>

#include "lock_model.hpp"
#include "mst/union_find.hpp"

using namespace mst;

TEST_CASE("init_forest: block ownership, all singletons") {
  ComponentForest f(4, 2);
  CHECK(f.component_count() == 4);
  CHECK(f.owner(0) == 0);
  CHECK(f.owner(1) == 0);
  CHECK(f.owner(2) == 1);
  CHECK(f.owner(3) == 1);
  for (VertexId v = 0; v < 4; ++v) {
    CHECK(f.parent(v) == v);
    CHECK(f.component_size(v) == 1);
    CHECK(f.lock_holder(v) == kNoWorker);
  }

  ComponentForest one(4, 1);
  for (VertexId v = 0; v < 4; ++v) CHECK(one.owner(v) == 0);

  ComponentForest tiny(1, 4);
  CHECK(tiny.component_count() == 1);
  CHECK(tiny.owner(0) == 0);
}

TEST_CASE("find returns the root") {
  ComponentForest f(8, 1);
  CHECK(f.find(5) == 5);

  // chain 3 -> 2 -> 1 built from id-ordered CAS unions (larger id is child)
  REQUIRE(f.try_union_cas(2, 3, 0));
  REQUIRE(f.try_union_cas(1, 2, 0));
  CHECK(f.parent(3) == 2);
  CHECK(f.parent(2) == 1);
  CHECK(f.find(3) == 1);
  CHECK(f.find(2) == 1);
  CHECK(f.find(1) == 1);
}

TEST_CASE("union_by_size: size rule with first-argument tie-break") {
  ComponentForest f(8, 1);
  CHECK(f.union_by_size(0, 1) == 0);  // tie -> first argument
  CHECK(f.component_size(0) == 2);
  CHECK(f.union_by_size(0, 2) == 0);  // 2 vs 1 -> first
  CHECK(f.union_by_size(3, 0) == 0);  // 1 vs 3 -> second (bigger wins)
  CHECK(f.component_size(0) == 4);
  CHECK(f.component_count() == 8 - 3);

  CHECK_THROWS_AS(f.union_by_size(1, 4), ForestError);  // 1 is not a root
  CHECK_THROWS_AS(f.union_by_size(0, 0), std::invalid_argument);
}

TEST_CASE("find_halving compresses paths without changing roots") {
  ComponentForest f(6, 1);
  REQUIRE(f.try_union_cas(4, 5, 0));
  REQUIRE(f.try_union_cas(3, 4, 0));
  REQUIRE(f.try_union_cas(2, 3, 0));
  REQUIRE(f.try_union_cas(1, 2, 0));
  CHECK(f.find_halving(5) == 1);
  CHECK(f.find(5) == 1);
  // after halving the walk from 5 is strictly shorter
  CHECK(f.parent(5) < 4);
}

TEST_CASE("try_lock_pair / unlock_pair basic protocol") {
  ComponentForest f(4, 2);

  CHECK(f.try_lock_pair(0, 2, 0));
  CHECK(f.lock_holder(0) == 0);
  CHECK(f.lock_holder(2) == 0);

  // overlapping pair fails and leaves the untouched slot untouched
  CHECK_FALSE(f.try_lock_pair(0, 3, 1));
  CHECK(f.lock_holder(3) == kNoWorker);
  CHECK_FALSE(f.try_lock_pair(3, 2, 1));  // second slot busy -> rollback of 3
  CHECK(f.lock_holder(3) == kNoWorker);

  f.unlock_pair(0, 2, 0);
  CHECK(f.lock_holder(0) == kNoWorker);
  CHECK(f.lock_holder(2) == kNoWorker);

  // reusable by another worker after release
  CHECK(f.try_lock_pair(0, 2, 1));
  f.unlock_pair(0, 2, 1);

  CHECK_THROWS_AS(f.unlock_pair(0, 2, 1), ForestError);  // not held
}

TEST_CASE("try_union_cas swings the child root exactly once") {
  ComponentForest f(4, 2);
  CHECK(f.try_union_cas(0, 1, 0));
  CHECK(f.parent(1) == 0);  // larger id is the child
  CHECK(f.owner(0) == 0);
  CHECK(f.component_count() == 3);

  // designated child (the larger id) no longer a root -> the expected-value
  // check fails and the forest is unchanged by this call
  CHECK_FALSE(f.try_union_cas(0, 1, 1));
  CHECK(f.component_count() == 3);
  CHECK(f.parent(1) == 0);

  CHECK(f.try_union_cas(2, 3, 1));
  CHECK(f.owner(2) == 1);
}

TEST_CASE("racing CAS unions on one child root: exactly one winner per round") {
  // Two threads repeatedly race to merge the same fresh pair.
  const int kRounds = 10'000;
  for (int round = 0; round < kRounds; ++round) {
    ComponentForest f(2, 2);
    std::atomic<int> wins{0};
    std::atomic<bool> go{false};
    auto race = [&](WorkerId tid) {
      while (!go.load(std::memory_order_acquire)) {
      }
      if (f.try_union_cas(0, 1, tid)) wins.fetch_add(1, std::memory_order_relaxed);
    };
    std::thread a(race, 0), b(race, 1);
    go.store(true, std::memory_order_release);
    a.join();
    b.join();
    REQUIRE(wins.load() == 1);
    REQUIRE(f.component_count() == 1);
  }
}

TEST_CASE("exhaustive two-worker interleavings of the lock protocol") {
  const auto out = testutil::run_exhaustive_lock_interleavings();
  CHECK(out.interleavings > 0);
  CHECK(out.mutual_exclusion_ok);
  CHECK(out.no_residue_ok);
  CHECK(out.rollback_ok);
}

TEST_CASE("lock mutual exclusion under a three-worker stress") {
  const auto out = testutil::run_lock_shadow_stress(3, 20'000);
  CHECK(out.violations == 0);
  CHECK(out.acquisitions > 0);
  CHECK(out.quiescent);
}

TEST_CASE("component_count tracks unions") {
  ComponentForest f(5, 1);
  CHECK(f.component_count() == 5);
  f.union_by_size(0, 1);
  CHECK(f.component_count() == 4);
  f.union_by_size(0, 2);
  f.union_by_size(0, 3);
  f.union_by_size(0, 4);
  CHECK(f.component_count() == 1);
}

TEST_CASE("forest invariants hold after random union sequences") {
  std::mt19937_64 rng(2024);
  for (int iter = 0; iter < 50; ++iter) {
    const VertexId n = 2 + static_cast<VertexId>(rng() % 64);
    ComponentForest f(n, 1);
    VertexId unions = 0;
    const VertexId target = static_cast<VertexId>(rng() % n);
    while (f.component_count() > 1 && unions < target) {
      const VertexId a = f.find(static_cast<VertexId>(rng() % n));
      const VertexId b = f.find(static_cast<VertexId>(rng() % n));
      if (a == b) continue;
      f.union_by_size(a, b);
      ++unions;
    }
    // live + unions == n
    CHECK(f.component_count() + unions == n);
    // acyclic: every walk terminates within n steps, sizes at roots sum to n
    VertexId size_sum = 0;
    for (VertexId v = 0; v < n; ++v) {
      VertexId cur = v;
      VertexId steps = 0;
      while (f.parent(cur) != cur) {
        cur = f.parent(cur);
        REQUIRE(++steps <= n);
      }
      if (f.parent(v) == v) size_sum += f.component_size(v);
    }
    CHECK(size_sum == n);
  }
}

TEST_CASE("faithful lock protocol works single-threaded") {
  ComponentForest f(4, 1);
  CHECK(f.try_lock_pair_faithful(0, 1, 0));
  f.unlock_pair_faithful(0, 1);
  CHECK(f.lock_holder(0) == kNoWorker);
  CHECK(f.lock_holder(1) == kNoWorker);
}
