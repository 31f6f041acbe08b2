#include "mst/verify.hpp"

#include <algorithm>
#include <sstream>

#include "mst/boruvka_seq.hpp"
#include "simple_dsu.hpp"

namespace mst {

VerifyReport verify_mst(const Graph& g, const MstResult& result) {
  return verify_mst(g, result, kruskal_oracle(g));
}

VerifyReport verify_mst(const Graph& g, const MstResult& result, const MstResult& oracle) {
  const VertexId n = g.vertex_count();
  const EdgeId m = g.edge_count();

  for (EdgeId e : result.mst_edges)
    if (e < 0 || e >= m)
      throw std::out_of_range("verify_mst: edge id " + std::to_string(e) + " outside [0," +
                              std::to_string(m) + ")");

  VerifyReport rep;
  rep.edge_count_ok = result.mst_edges.size() == static_cast<std::size_t>(n) - 1;

  detail::SimpleDsu dsu(n);
  VertexId components = n;
  rep.is_acyclic = true;
  Weight sum = 0;
  for (EdgeId e : result.mst_edges) {
    const Edge& ed = g.edge(e);
    sum += ed.weight;
    if (dsu.unite(ed.src, ed.dest))
      --components;
    else
      rep.is_acyclic = false;  // joins an already-connected pair
  }
  rep.is_spanning = components == 1;

  rep.weight_matches_oracle = sum == oracle.total_weight;

  std::vector<EdgeId> got(result.mst_edges);
  std::sort(got.begin(), got.end());
  rep.edge_set_matches_oracle = got == oracle.mst_edges;

  std::ostringstream os;
  os << "edges=" << result.mst_edges.size() << " (expected " << (n - 1) << ")"
     << ", weight=" << sum << " (oracle " << oracle.total_weight << ")"
     << ", components=" << components << ", acyclic=" << (rep.is_acyclic ? "yes" : "no")
     << ", edge_set=" << (rep.edge_set_matches_oracle ? "match" : "MISMATCH");
  if (sum != result.total_weight)
    os << "; WARNING: result.total_weight=" << result.total_weight
       << " disagrees with its own edge list";
  rep.details = os.str();
  return rep;
}

}  // namespace mst
