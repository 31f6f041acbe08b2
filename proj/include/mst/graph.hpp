#pragma once

#include <atomic>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mst {

using VertexId = std::uint32_t;
using EdgeId = std::int64_t;
using Weight = std::uint64_t;

/// Sentinel for "no edge" slots (minimum tables, parse results).
inline constexpr EdgeId kNoEdge = -1;

enum class GraphErrorKind {
  EndpointOutOfRange,
  SelfLoop,
  DuplicateEdge,
  DuplicateWeight,
  NonPositiveWeight,
  Disconnected,
  InfeasibleDegree,
  ParseError,
};

class GraphError : public std::runtime_error {
 public:
  GraphError(GraphErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  GraphErrorKind kind() const noexcept { return kind_; }

 private:
  GraphErrorKind kind_;
};

/// One undirected edge. src and dest are interchangeable.
struct Edge {
  VertexId src;
  VertexId dest;
  Weight weight;
};

/// Edge-list graph with immutable topology and one mutable bit per edge:
/// the `covered` flag. Covered flags are monotonic (false -> true) within a
/// run and are accessed with relaxed atomics, so concurrent writers are safe;
/// a lost update only delays the skip, it never changes results.
class Graph {
 public:
  Graph() = default;
  Graph(Graph&&) noexcept = default;
  Graph& operator=(Graph&&) noexcept = default;

  VertexId vertex_count() const noexcept { return n_; }
  EdgeId edge_count() const noexcept { return static_cast<EdgeId>(edges_.size()); }
  const Edge& edge(EdgeId e) const noexcept { return edges_[static_cast<std::size_t>(e)]; }
  std::span<const Edge> edges() const noexcept { return edges_; }

  bool covered(EdgeId e) const noexcept {
    return covered_[static_cast<std::size_t>(e)].load(std::memory_order_relaxed) != 0;
  }
  void set_covered(EdgeId e) noexcept {
    covered_[static_cast<std::size_t>(e)].store(1, std::memory_order_relaxed);
  }
  /// Clears every covered flag. Each algorithm run calls this first so runs
  /// stay independent.
  void reset_covered() noexcept;

 private:
  friend Graph build_graph(VertexId n, std::span<const Edge> edge_list);

  VertexId n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::atomic<std::uint8_t>> covered_;
};

/// Validates and assembles a graph. Enforces the input contract every
/// algorithm relies on: endpoints in range, no self-loops, no duplicate
/// undirected edges, pairwise-distinct positive weights, and connectivity.
/// Throws GraphError on the first violation found.
Graph build_graph(VertexId n, std::span<const Edge> edge_list);

/// Random connected simple graph with exactly floor(n*avg_degree/2) edges and
/// weights forming a permutation of 1..m. Deterministic in (n, avg_degree,
/// seed): the PRNG is std::mt19937_64 and all bounded draws use rejection
/// sampling, so the edge list is identical across platforms.
/// Throws GraphError{InfeasibleDegree} when m < n-1 or m > n(n-1)/2.
Graph generate_graph(VertexId n, int avg_degree, std::uint64_t seed);

/// Plain-text format: "<n> <m>" on the first line, then m lines
/// "<src> <dest> <weight>". 0-based vertices, positive integer weights.
Graph load_graph(const std::string& path);
void save_graph(const Graph& g, const std::string& path);

}  // namespace mst
