#include "mst/boruvka_seq.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "mst/union_find.hpp"
#include "simple_dsu.hpp"

namespace mst {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

MstResult finish(std::vector<EdgeId> selected, const Graph& g, std::uint32_t rounds,
                 Clock::time_point t0) {
  MstResult out;
  out.elapsed_ms = ms_since(t0);
  std::sort(selected.begin(), selected.end());
  out.total_weight = 0;
  for (EdgeId e : selected) out.total_weight += g.edge(e).weight;
  out.mst_edges = std::move(selected);
  out.rounds = rounds;
  return out;
}

}  // namespace

MstResult boruvka_seq(const Graph& g) {
  const VertexId n = g.vertex_count();
  const EdgeId m = g.edge_count();
  const auto t0 = Clock::now();

  ComponentForest forest(n, 1);
  std::vector<EdgeId> minimum(n, kNoEdge);
  std::vector<EdgeId> selected;
  selected.reserve(n > 0 ? n - 1 : 0);
  std::uint32_t rounds = 0;

  while (forest.component_count() > 1) {
    ++rounds;
    std::fill(minimum.begin(), minimum.end(), kNoEdge);

    for (EdgeId e = 0; e < m; ++e) {
      const Edge& ed = g.edge(e);
      const VertexId c1 = forest.find_halving(ed.src);
      const VertexId c2 = forest.find_halving(ed.dest);
      if (c1 == c2) continue;
      if (minimum[c1] == kNoEdge || g.edge(minimum[c1]).weight > ed.weight) minimum[c1] = e;
      if (minimum[c2] == kNoEdge || g.edge(minimum[c2]).weight > ed.weight) minimum[c2] = e;
    }

    for (VertexId v = 0; v < n; ++v) {
      const EdgeId e = minimum[v];
      if (e == kNoEdge) continue;
      const Edge& ed = g.edge(e);
      const VertexId c1 = forest.find_halving(ed.src);
      const VertexId c2 = forest.find_halving(ed.dest);
      if (c1 == c2) continue;
      selected.push_back(e);
      forest.union_by_size(c1, c2);
    }
  }

  return finish(std::move(selected), g, rounds, t0);
}

MstResult boruvka_seq_opt(Graph& g) {
  const VertexId n = g.vertex_count();
  const EdgeId m = g.edge_count();
  g.reset_covered();
  const auto t0 = Clock::now();

  ComponentForest forest(n, 1);
  std::vector<EdgeId> minimum(n, kNoEdge);
  std::vector<EdgeId> selected;
  selected.reserve(n > 0 ? n - 1 : 0);
  std::uint32_t rounds = 0;

  while (forest.component_count() > 1) {
    ++rounds;
    std::fill(minimum.begin(), minimum.end(), kNoEdge);

    for (EdgeId e = 0; e < m; ++e) {
      if (g.covered(e)) continue;
      const Edge& ed = g.edge(e);
      const VertexId c1 = forest.find_halving(ed.src);
      const VertexId c2 = forest.find_halving(ed.dest);
      if (c1 == c2) {
        g.set_covered(e);  // internal edge, never useful again
        continue;
      }
      if (minimum[c1] == kNoEdge || g.edge(minimum[c1]).weight > ed.weight) minimum[c1] = e;
      if (minimum[c2] == kNoEdge || g.edge(minimum[c2]).weight > ed.weight) minimum[c2] = e;
    }

    for (VertexId v = 0; v < n; ++v) {
      const EdgeId e = minimum[v];
      if (e == kNoEdge) continue;
      const Edge& ed = g.edge(e);
      const VertexId c1 = forest.find_halving(ed.src);
      const VertexId c2 = forest.find_halving(ed.dest);
      if (c1 == c2) {
        g.set_covered(e);
        continue;
      }
      selected.push_back(e);
      forest.union_by_size(c1, c2);
      g.set_covered(e);  // MST edges are covered too
    }
  }

  return finish(std::move(selected), g, rounds, t0);
}

MstResult kruskal_oracle(const Graph& g) {
  const VertexId n = g.vertex_count();
  const EdgeId m = g.edge_count();
  const auto t0 = Clock::now();

  std::vector<EdgeId> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), EdgeId{0});
  std::sort(order.begin(), order.end(),
            [&](EdgeId a, EdgeId b) { return g.edge(a).weight < g.edge(b).weight; });

  detail::SimpleDsu dsu(n);
  std::vector<EdgeId> selected;
  selected.reserve(n > 0 ? n - 1 : 0);
  for (EdgeId e : order) {
    const Edge& ed = g.edge(e);
    if (dsu.unite(ed.src, ed.dest)) {
      selected.push_back(e);
      if (selected.size() + 1 == n) break;
    }
  }

  return finish(std::move(selected), g, 1, t0);
}

}  // namespace mst
