#pragma once

#include "mst/graph.hpp"
#include "mst/mst_result.hpp"

namespace mst {

/// Sequential Boruvka baseline. Repeatedly: every component records its
/// minimum outgoing edge, then merges along it (union by size). Weights are
/// pairwise distinct, so the MST is unique and no tie-breaking is needed.
MstResult boruvka_seq(const Graph& g);

/// Boruvka with the covered-edge optimization: edges found internal to a
/// component, and edges admitted to the MST, are flagged and skipped by all
/// later scans. Identical result to boruvka_seq, typically faster.
/// Resets the graph's covered flags before starting.
MstResult boruvka_seq_opt(Graph& g);

/// Independent oracle: sort edges by weight, grow the tree with a private
/// union-find. Shares no forest code with the Boruvka implementations.
MstResult kruskal_oracle(const Graph& g);

}  // namespace mst
