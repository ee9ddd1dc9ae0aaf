#pragma once

#include <cstdint>
#include <vector>

#include "parcut/graph.hpp"

namespace parcut {

// Reference algorithms used to validate the contraction solver. They favor
// obviously-correct code over speed.

struct OracleCut {
  EdgeWeight value = 0;
  std::vector<NodeID> side;
};

// Stoer-Wagner minimum-cut phases on a dense matrix. n >= 2; a disconnected
// graph yields 0 with the component of vertex 0 as side.
OracleCut oracle_global_mincut(const Graph& graph);

// lambda(G, s, t) by shortest augmenting paths on the bidirected graph.
EdgeWeight oracle_connectivity(const Graph& graph, NodeID s, NodeID t);

// Exhaustive minimum over all 2^(n-1) - 1 proper cuts; n in [2, 24].
OracleCut enumerate_mincut(const Graph& graph);

struct EnumeratedCut {
  std::uint32_t mask;  // bit v set iff v is on the side without vertex n-1
  EdgeWeight weight;
};

// Every proper cut with weight strictly below `bound`; n in [2, 24].
std::vector<EnumeratedCut> enumerate_cuts_below(const Graph& graph, EdgeWeight bound);

}  // namespace parcut
