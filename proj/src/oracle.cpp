#include "parcut/oracle.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace parcut {

OracleCut oracle_global_mincut(const Graph& graph) {
  const NodeID n = graph.num_nodes();
  if (n < 2) throw InputError("minimum cut needs at least two vertices");
  NodeID components = 0;
  auto label = connected_components(graph, &components);
  if (components > 1) {
    OracleCut cut;
    for (NodeID v = 0; v < n; ++v) {
      if (label[v] == label[0]) cut.side.push_back(v);
    }
    return cut;
  }

  std::vector<std::vector<EdgeWeight>> w(n, std::vector<EdgeWeight>(n, 0));
  for (const auto& e : graph.edge_list()) {
    w[e.u][e.v] = e.weight;
    w[e.v][e.u] = e.weight;
  }
  // members[v]: original vertices merged into super-vertex v.
  std::vector<std::vector<NodeID>> members(n);
  for (NodeID v = 0; v < n; ++v) members[v] = {v};
  std::vector<NodeID> active(n);
  for (NodeID v = 0; v < n; ++v) active[v] = v;

  OracleCut best;
  best.value = kMaxWeight;
  while (active.size() > 1) {
    const std::size_t k = active.size();
    std::vector<EdgeWeight> attach(k, 0);
    std::vector<bool> added(k, false);
    std::size_t prev = 0;
    std::size_t last = 0;
    for (std::size_t step = 0; step < k; ++step) {
      std::size_t pick = k;
      for (std::size_t i = 0; i < k; ++i) {
        if (!added[i] && (pick == k || attach[i] > attach[pick])) pick = i;
      }
      added[pick] = true;
      prev = last;
      last = pick;
      if (step + 1 == k) break;
      for (std::size_t i = 0; i < k; ++i) {
        if (!added[i]) attach[i] += w[active[pick]][active[i]];
      }
    }
    // Cut of the phase: the last added super-vertex against everything else.
    if (attach[last] < best.value) {
      best.value = attach[last];
      best.side = members[active[last]];
    }
    const NodeID s = active[prev];
    const NodeID t = active[last];
    for (NodeID v : active) {
      w[s][v] += w[t][v];
      w[v][s] = w[s][v];
    }
    w[s][s] = 0;
    members[s].insert(members[s].end(), members[t].begin(), members[t].end());
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(last));
  }
  std::sort(best.side.begin(), best.side.end());
  return best;
}

EdgeWeight oracle_connectivity(const Graph& graph, NodeID s, NodeID t) {
  const NodeID n = graph.num_nodes();
  if (s >= n || t >= n) throw InputError("connectivity query outside the graph");
  if (s == t) throw InputError("connectivity needs two distinct vertices");

  // Residual capacity per CSR arc; reverse[i] is the arc in the opposite direction.
  std::vector<EdgeWeight> residual(graph.num_arcs());
  std::vector<EdgeID> reverse(graph.num_arcs());
  for (NodeID u = 0; u < n; ++u) {
    auto adj = graph.neighbors(u);
    for (std::size_t j = 0; j < adj.size(); ++j) {
      const EdgeID i = graph.first_arc(u) + j;
      residual[i] = adj[j].weight;
      auto back = graph.neighbors(adj[j].target);
      auto it = std::lower_bound(back.begin(), back.end(), u,
                                 [](const Graph::Arc& a, NodeID x) { return a.target < x; });
      reverse[i] = graph.first_arc(adj[j].target) + static_cast<EdgeID>(it - back.begin());
    }
  }

  EdgeWeight flow = 0;
  std::vector<EdgeID> via(n);
  std::vector<NodeID> parent(n);
  while (true) {
    std::fill(parent.begin(), parent.end(), kInvalidNode);
    parent[s] = s;
    std::queue<NodeID> queue;
    queue.push(s);
    while (!queue.empty() && parent[t] == kInvalidNode) {
      const NodeID u = queue.front();
      queue.pop();
      auto adj = graph.neighbors(u);
      for (std::size_t j = 0; j < adj.size(); ++j) {
        const EdgeID i = graph.first_arc(u) + j;
        const NodeID v = adj[j].target;
        if (parent[v] != kInvalidNode || residual[i] == 0) continue;
        parent[v] = u;
        via[v] = i;
        queue.push(v);
      }
    }
    if (parent[t] == kInvalidNode) return flow;
    EdgeWeight bottleneck = kMaxWeight;
    for (NodeID v = t; v != s; v = parent[v]) bottleneck = std::min(bottleneck, residual[via[v]]);
    for (NodeID v = t; v != s; v = parent[v]) {
      residual[via[v]] -= bottleneck;
      residual[reverse[via[v]]] += bottleneck;
    }
    flow = checked_add(flow, bottleneck);
  }
}

namespace {

void check_enumerable(const Graph& graph) {
  if (graph.num_nodes() < 2 || graph.num_nodes() > 24) {
    throw InputError("cut enumeration supports 2 to 24 vertices");
  }
}

EdgeWeight mask_cut(const std::vector<WeightedEdge>& edges, std::uint32_t mask) {
  EdgeWeight sum = 0;
  for (const auto& e : edges) {
    if (((mask >> e.u) & 1U) != ((mask >> e.v) & 1U)) sum += e.weight;
  }
  return sum;
}

}  // namespace

OracleCut enumerate_mincut(const Graph& graph) {
  check_enumerable(graph);
  const auto edges = graph.edge_list();
  const std::uint32_t limit = std::uint32_t{1} << (graph.num_nodes() - 1);
  OracleCut best;
  best.value = kMaxWeight;
  std::uint32_t best_mask = 0;
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    const EdgeWeight w = mask_cut(edges, mask);
    if (w < best.value) {
      best.value = w;
      best_mask = mask;
    }
  }
  for (NodeID v = 0; v < graph.num_nodes(); ++v) {
    if ((best_mask >> v) & 1U) best.side.push_back(v);
  }
  return best;
}

std::vector<EnumeratedCut> enumerate_cuts_below(const Graph& graph, EdgeWeight bound) {
  check_enumerable(graph);
  const auto edges = graph.edge_list();
  const std::uint32_t limit = std::uint32_t{1} << (graph.num_nodes() - 1);
  std::vector<EnumeratedCut> cuts;
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    const EdgeWeight w = mask_cut(edges, mask);
    if (w < bound) cuts.push_back({mask, w});
  }
  return cuts;
}

}  // namespace parcut
