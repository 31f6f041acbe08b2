#include "mst/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>

#include "simple_dsu.hpp"

namespace mst {

namespace {

std::string kind_prefix(GraphErrorKind kind) {
  switch (kind) {
    case GraphErrorKind::EndpointOutOfRange: return "endpoint out of range";
    case GraphErrorKind::SelfLoop: return "self loop";
    case GraphErrorKind::DuplicateEdge: return "duplicate edge";
    case GraphErrorKind::DuplicateWeight: return "duplicate weight";
    case GraphErrorKind::NonPositiveWeight: return "non-positive weight";
    case GraphErrorKind::Disconnected: return "disconnected";
    case GraphErrorKind::InfeasibleDegree: return "infeasible degree";
    case GraphErrorKind::ParseError: return "parse error";
  }
  return "graph error";
}

[[noreturn]] void fail(GraphErrorKind kind, const std::string& detail) {
  throw GraphError(kind, kind_prefix(kind) + ": " + detail);
}

std::uint64_t pair_key(VertexId a, VertexId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

// Uniform draw from [0, bound) via rejection sampling; unlike
// std::uniform_int_distribution this is identical on every implementation.
std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
  std::uint64_t x = rng();
  while (x < threshold) x = rng();
  return x % bound;
}

// Open-addressing set of canonical edge keys; one flat allocation instead of
// per-node heap traffic, which matters at millions of inserts.
class EdgeKeySet {
 public:
  explicit EdgeKeySet(std::size_t expected) {
    std::size_t cap = std::bit_ceil(std::max<std::size_t>(16, expected * 2));
    slots_.assign(cap, kEmpty);
    mask_ = cap - 1;
  }

  // True if newly inserted.
  bool insert(std::uint64_t key) {
    std::size_t i = hash(key) & mask_;
    while (slots_[i] != kEmpty) {
      if (slots_[i] == key) return false;
      i = (i + 1) & mask_;
    }
    slots_[i] = key;
    return true;
  }

 private:
  // Keys have the high word < 2^32-1 (src < dest < 2^32), so ~0 is free.
  static constexpr std::uint64_t kEmpty = ~std::uint64_t{0};

  static std::size_t hash(std::uint64_t k) {
    k ^= k >> 33;
    k *= 0xff51afd7ed558ccdULL;
    k ^= k >> 33;
    return static_cast<std::size_t>(k);
  }

  std::vector<std::uint64_t> slots_;
  std::size_t mask_ = 0;
};

}  // namespace

void Graph::reset_covered() noexcept {
  for (auto& c : covered_) c.store(0, std::memory_order_relaxed);
}

Graph build_graph(VertexId n, std::span<const Edge> edge_list) {
  if (n < 1) throw std::invalid_argument("build_graph: vertex count must be >= 1");

  const std::size_t m = edge_list.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Edge& e = edge_list[i];
    if (e.src >= n || e.dest >= n)
      fail(GraphErrorKind::EndpointOutOfRange,
           "edge " + std::to_string(i) + " touches vertex outside [0," + std::to_string(n) + ")");
    if (e.src == e.dest)
      fail(GraphErrorKind::SelfLoop, "edge " + std::to_string(i) + " at vertex " + std::to_string(e.src));
    if (e.weight == 0)
      fail(GraphErrorKind::NonPositiveWeight, "edge " + std::to_string(i));
  }

  {
    std::vector<std::uint64_t> keys(m);
    for (std::size_t i = 0; i < m; ++i) keys[i] = pair_key(edge_list[i].src, edge_list[i].dest);
    std::sort(keys.begin(), keys.end());
    auto dup = std::adjacent_find(keys.begin(), keys.end());
    if (dup != keys.end())
      fail(GraphErrorKind::DuplicateEdge,
           "{" + std::to_string(static_cast<VertexId>(*dup >> 32)) + "," +
               std::to_string(static_cast<VertexId>(*dup)) + "} appears twice");
  }

  {
    std::vector<Weight> ws(m);
    for (std::size_t i = 0; i < m; ++i) ws[i] = edge_list[i].weight;
    std::sort(ws.begin(), ws.end());
    auto dup = std::adjacent_find(ws.begin(), ws.end());
    if (dup != ws.end())
      fail(GraphErrorKind::DuplicateWeight, "weight " + std::to_string(*dup) + " appears twice");
  }

  {
    detail::SimpleDsu dsu(n);
    VertexId components = n;
    for (const Edge& e : edge_list)
      if (dsu.unite(e.src, e.dest)) --components;
    if (components != 1)
      fail(GraphErrorKind::Disconnected, std::to_string(components) + " components");
  }

  Graph g;
  g.n_ = n;
  g.edges_.assign(edge_list.begin(), edge_list.end());
  g.covered_ = std::vector<std::atomic<std::uint8_t>>(m);
  return g;
}

Graph generate_graph(VertexId n, int avg_degree, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("generate_graph: need n >= 2");
  if (avg_degree < 2) throw std::invalid_argument("generate_graph: need avg_degree >= 2");

  const std::uint64_t m = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(avg_degree) / 2;
  const std::uint64_t max_edges = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  if (m < static_cast<std::uint64_t>(n) - 1)
    fail(GraphErrorKind::InfeasibleDegree,
         "m=" + std::to_string(m) + " cannot connect " + std::to_string(n) + " vertices");
  if (m > max_edges)
    fail(GraphErrorKind::InfeasibleDegree,
         "m=" + std::to_string(m) + " exceeds simple-graph maximum " + std::to_string(max_edges));

  std::mt19937_64 rng(seed);

  // Random spanning tree over a random relabeling: vertex label[i] attaches
  // to label[j] for uniform j < i. Connectivity holds by construction.
  std::vector<VertexId> label(n);
  for (VertexId i = 0; i < n; ++i) label[i] = i;
  for (VertexId i = n; i > 1; --i) {
    const auto j = static_cast<VertexId>(rand_below(rng, i));
    std::swap(label[i - 1], label[j]);
  }

  std::vector<Edge> edges;
  edges.reserve(m);
  EdgeKeySet seen(m);
  for (VertexId i = 1; i < n; ++i) {
    const auto j = static_cast<VertexId>(rand_below(rng, i));
    edges.push_back(Edge{label[i], label[j], 0});
    seen.insert(pair_key(label[i], label[j]));
  }

  while (edges.size() < m) {
    const auto u = static_cast<VertexId>(rand_below(rng, n));
    const auto v = static_cast<VertexId>(rand_below(rng, n));
    if (u == v) continue;
    if (!seen.insert(pair_key(u, v))) continue;
    edges.push_back(Edge{u, v, 0});
  }

  // Weights: random permutation of 1..m, so distinctness needs no retries.
  std::vector<Weight> weights(m);
  for (std::uint64_t i = 0; i < m; ++i) weights[i] = i + 1;
  for (std::uint64_t i = m; i > 1; --i) {
    const std::uint64_t j = rand_below(rng, i);
    std::swap(weights[i - 1], weights[j]);
  }
  for (std::uint64_t i = 0; i < m; ++i) edges[i].weight = weights[i];

  return build_graph(n, edges);
}

namespace {

// Strict line scanner: exactly the requested integer fields, nothing else on
// the line (a trailing '\r' is tolerated).
class LineParser {
 public:
  LineParser(const char* begin, const char* end) : p_(begin), end_(end) {
    if (p_ != end_ && end_[-1] == '\r') --end_;
  }

  template <typename T>
  bool next(T& out) {
    while (p_ != end_ && *p_ == ' ') ++p_;
    if (p_ == end_) return false;
    auto [ptr, ec] = std::from_chars(p_, end_, out);
    if (ec != std::errc{} || ptr == p_) return false;
    p_ = ptr;
    return true;
  }

  bool at_end() {
    while (p_ != end_ && *p_ == ' ') ++p_;
    return p_ == end_;
  }

 private:
  const char* p_;
  const char* end_;
};

}  // namespace

Graph load_graph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(GraphErrorKind::ParseError, "cannot open " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

  const char* p = text.data();
  const char* end = p + text.size();
  auto next_line = [&](const char*& b, const char*& e) {
    if (p == end) return false;
    b = p;
    const char* nl = std::find(p, end, '\n');
    e = nl;
    p = (nl == end) ? end : nl + 1;
    return true;
  };

  const char *lb, *le;
  if (!next_line(lb, le)) fail(GraphErrorKind::ParseError, path + ": empty file");
  std::uint64_t n = 0, m = 0;
  {
    LineParser lp(lb, le);
    if (!lp.next(n) || !lp.next(m) || !lp.at_end())
      fail(GraphErrorKind::ParseError, path + ": header must be \"<n> <m>\"");
  }
  if (n < 1 || n > std::numeric_limits<VertexId>::max())
    fail(GraphErrorKind::ParseError, path + ": bad vertex count " + std::to_string(n));

  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::uint64_t i = 0; i < m; ++i) {
    if (!next_line(lb, le))
      fail(GraphErrorKind::ParseError,
           path + ": expected " + std::to_string(m) + " edge lines, got " + std::to_string(i));
    LineParser lp(lb, le);
    std::uint64_t s = 0, d = 0;
    Weight w = 0;
    if (!lp.next(s) || !lp.next(d) || !lp.next(w) || !lp.at_end())
      fail(GraphErrorKind::ParseError,
           path + ": edge line " + std::to_string(i + 1) + " must be \"<src> <dest> <weight>\"");
    if (s > std::numeric_limits<VertexId>::max() || d > std::numeric_limits<VertexId>::max())
      fail(GraphErrorKind::ParseError, path + ": vertex id overflow on line " + std::to_string(i + 2));
    edges.push_back(Edge{static_cast<VertexId>(s), static_cast<VertexId>(d), w});
  }
  while (next_line(lb, le)) {
    LineParser lp(lb, le);
    if (!lp.at_end()) fail(GraphErrorKind::ParseError, path + ": trailing content after edge list");
  }

  return build_graph(static_cast<VertexId>(n), edges);
}

void save_graph(const Graph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("save_graph: cannot open " + path);

  char buf[96];
  const int header = std::snprintf(buf, sizeof buf, "%llu %llu\n",
                                   static_cast<unsigned long long>(g.vertex_count()),
                                   static_cast<unsigned long long>(g.edge_count()));
  out.write(buf, header);
  for (const Edge& e : g.edges()) {
    const int len = std::snprintf(buf, sizeof buf, "%u %u %llu\n", e.src, e.dest,
                                  static_cast<unsigned long long>(e.weight));
    out.write(buf, len);
  }
  out.flush();
  if (!out) throw std::runtime_error("save_graph: write failed for " + path);
}

}  // namespace mst
