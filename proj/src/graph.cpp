#include "parcut/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>

namespace parcut {

Graph Graph::from_edges(NodeID n, std::span<const WeightedEdge> edges) {
  struct Entry {
    NodeID lo;
    NodeID hi;
    bool reversed;
    EdgeWeight weight;
  };
  std::vector<Entry> entries;
  entries.reserve(edges.size());
  for (const auto& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw InputError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       ") references a vertex outside [0," + std::to_string(n) + ")");
    }
    if (e.u == e.v || e.weight == 0) continue;
    entries.push_back({std::min(e.u, e.v), std::max(e.u, e.v), e.u > e.v, e.weight});
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return std::tie(a.lo, a.hi) < std::tie(b.lo, b.hi);
  });

  // An undirected edge may be listed once per direction (symmetric input such as
  // METIS) or repeatedly in one direction (parallel edges). Both directions
  // listed means a symmetric listing and their sums must agree.
  std::vector<WeightedEdge> merged;
  for (std::size_t i = 0; i < entries.size();) {
    std::size_t j = i;
    EdgeWeight forward = 0;
    EdgeWeight backward = 0;
    for (; j < entries.size() && entries[j].lo == entries[i].lo && entries[j].hi == entries[i].hi; ++j) {
      EdgeWeight& sum = entries[j].reversed ? backward : forward;
      sum = checked_add(sum, entries[j].weight);
    }
    if (forward != 0 && backward != 0 && forward != backward) {
      throw InputError("edge {" + std::to_string(entries[i].lo) + "," + std::to_string(entries[i].hi) +
                       "} listed in both directions with different weights");
    }
    merged.push_back({entries[i].lo, entries[i].hi, forward != 0 ? forward : backward});
    i = j;
  }

  Graph g;
  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& e : merged) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
  g.arcs_.resize(merged.size() * 2);
  g.weighted_degree_.assign(n, 0);
  std::vector<EdgeID> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  // merged is sorted by (lo, hi): every adjacency list comes out sorted by target.
  for (const auto& e : merged) {
    g.arcs_[fill[e.u]++] = {e.v, e.weight};
    g.weighted_degree_[e.u] = checked_add(g.weighted_degree_[e.u], e.weight);
  }
  for (const auto& e : merged) {
    g.arcs_[fill[e.v]++] = {e.u, e.weight};
    g.weighted_degree_[e.v] = checked_add(g.weighted_degree_[e.v], e.weight);
  }
  for (NodeID v = 0; v < n; ++v) {
    auto first = g.arcs_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    auto last = g.arcs_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    std::sort(first, last, [](const Arc& a, const Arc& b) { return a.target < b.target; });
  }
  return g;
}

EdgeWeight Graph::max_weighted_degree() const {
  EdgeWeight best = 0;
  for (EdgeWeight d : weighted_degree_) best = std::max(best, d);
  return best;
}

EdgeWeight Graph::total_weight() const {
  EdgeWeight sum = 0;
  for (EdgeWeight d : weighted_degree_) sum = checked_add(sum, d);
  return sum / 2;
}

EdgeWeight Graph::edge_weight(NodeID u, NodeID v) const {
  auto adj = neighbors(u);
  auto it = std::lower_bound(adj.begin(), adj.end(), v,
                             [](const Arc& a, NodeID t) { return a.target < t; });
  return it != adj.end() && it->target == v ? it->weight : 0;
}

std::vector<WeightedEdge> Graph::edge_list() const {
  std::vector<WeightedEdge> edges;
  edges.reserve(num_edges());
  for (NodeID u = 0; u < num_nodes(); ++u) {
    for (const auto& arc : neighbors(u)) {
      if (u < arc.target) edges.push_back({u, arc.target, arc.weight});
    }
  }
  return edges;
}

VertexMap VertexMap::identity(NodeID n) {
  std::vector<NodeID> forward(n);
  std::iota(forward.begin(), forward.end(), NodeID{0});
  return from_forward(std::move(forward), n);
}

VertexMap VertexMap::from_forward(std::vector<NodeID> forward, NodeID new_count) {
  VertexMap map;
  map.inverse.resize(new_count);
  for (NodeID v = 0; v < forward.size(); ++v) {
    if (forward[v] == kInvalidNode) continue;
    if (forward[v] >= new_count) throw ContractViolation("vertex map target out of range");
    map.inverse[forward[v]].push_back(v);
  }
  map.forward = std::move(forward);
  return map;
}

std::vector<NodeID> VertexMap::to_original(std::span<const NodeID> new_ids) const {
  std::vector<NodeID> out;
  for (NodeID id : new_ids) {
    if (id >= inverse.size()) throw ContractViolation("vertex id outside the mapped range");
    out.insert(out.end(), inverse[id].begin(), inverse[id].end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

VertexMap VertexMap::then(const VertexMap& next) const {
  std::vector<NodeID> composed(forward.size(), kInvalidNode);
  for (std::size_t v = 0; v < forward.size(); ++v) {
    if (forward[v] != kInvalidNode) composed[v] = next.forward.at(forward[v]);
  }
  return from_forward(std::move(composed), static_cast<NodeID>(next.inverse.size()));
}

std::pair<NodeID, EdgeWeight> min_degree_vertex(const Graph& graph) {
  if (graph.num_nodes() == 0) throw InputError("minimum degree of an empty graph");
  NodeID best = 0;
  for (NodeID v = 1; v < graph.num_nodes(); ++v) {
    if (graph.weighted_degree(v) < graph.weighted_degree(best)) best = v;
  }
  return {best, graph.weighted_degree(best)};
}

std::pair<Graph, VertexMap> induced_subgraph(const Graph& graph, const std::vector<bool>& keep) {
  std::vector<NodeID> forward(graph.num_nodes(), kInvalidNode);
  NodeID count = 0;
  for (NodeID v = 0; v < graph.num_nodes(); ++v) {
    if (keep[v]) forward[v] = count++;
  }
  std::vector<WeightedEdge> edges;
  for (const auto& e : graph.edge_list()) {
    if (keep[e.u] && keep[e.v]) edges.push_back({forward[e.u], forward[e.v], e.weight});
  }
  return {Graph::from_edges(count, edges), VertexMap::from_forward(std::move(forward), count)};
}

std::pair<Graph, VertexMap> k_core(const Graph& graph, EdgeWeight k, DegreeMode mode) {
  if (k == 0) throw InputError("k-core requires k >= 1");
  const NodeID n = graph.num_nodes();
  std::vector<EdgeWeight> degree(n);
  for (NodeID v = 0; v < n; ++v) {
    degree[v] = mode == DegreeMode::kWeighted ? graph.weighted_degree(v) : graph.degree(v);
  }
  std::vector<bool> alive(n, true);
  std::vector<NodeID> stack;
  for (NodeID v = 0; v < n; ++v) {
    if (degree[v] < k) {
      alive[v] = false;
      stack.push_back(v);
    }
  }
  while (!stack.empty()) {
    NodeID v = stack.back();
    stack.pop_back();
    for (const auto& arc : graph.neighbors(v)) {
      if (!alive[arc.target]) continue;
      degree[arc.target] -= mode == DegreeMode::kWeighted ? arc.weight : 1;
      if (degree[arc.target] < k) {
        alive[arc.target] = false;
        stack.push_back(arc.target);
      }
    }
  }
  return induced_subgraph(graph, alive);
}

std::vector<NodeID> connected_components(const Graph& graph, NodeID* count) {
  const NodeID n = graph.num_nodes();
  std::vector<NodeID> label(n, kInvalidNode);
  NodeID components = 0;
  std::vector<NodeID> queue;
  for (NodeID s = 0; s < n; ++s) {
    if (label[s] != kInvalidNode) continue;
    label[s] = components;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (const auto& arc : graph.neighbors(queue[head])) {
        if (label[arc.target] == kInvalidNode) {
          label[arc.target] = components;
          queue.push_back(arc.target);
        }
      }
    }
    ++components;
  }
  if (count != nullptr) *count = components;
  return label;
}

bool is_connected(const Graph& graph) {
  NodeID count = 0;
  connected_components(graph, &count);
  return count <= 1;
}

std::pair<Graph, VertexMap> largest_connected_component(const Graph& graph) {
  NodeID count = 0;
  auto label = connected_components(graph, &count);
  if (count == 0) return {Graph{}, VertexMap{}};
  std::vector<NodeID> size(count, 0);
  for (NodeID l : label) ++size[l];
  // Labels are assigned in order of smallest member, so the first maximum wins ties.
  NodeID best = static_cast<NodeID>(std::max_element(size.begin(), size.end()) - size.begin());
  std::vector<bool> keep(graph.num_nodes());
  for (NodeID v = 0; v < graph.num_nodes(); ++v) keep[v] = label[v] == best;
  return induced_subgraph(graph, keep);
}

EdgeWeight cut_weight(const Graph& graph, const std::vector<bool>& in_side) {
  EdgeWeight sum = 0;
  for (NodeID u = 0; u < graph.num_nodes(); ++u) {
    if (!in_side[u]) continue;
    for (const auto& arc : graph.neighbors(u)) {
      if (!in_side[arc.target]) sum = checked_add(sum, arc.weight);
    }
  }
  return sum;
}

EdgeWeight cut_weight(const Graph& graph, std::span<const NodeID> side) {
  std::vector<bool> in_side(graph.num_nodes(), false);
  for (NodeID v : side) {
    if (v >= graph.num_nodes()) throw ContractViolation("cut side contains an unknown vertex");
    in_side[v] = true;
  }
  return cut_weight(graph, in_side);
}

}  // namespace parcut
