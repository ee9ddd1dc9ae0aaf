#pragma once

#include <iosfwd>
#include <string>

#include "parcut/graph.hpp"

namespace parcut {

enum class GraphFormat { kMetis, kEdgeList };

// Picks a format from the file extension: .metis/.graph are METIS,
// .txt/.edges/.el/.edgelist are edge lists. Throws InputError otherwise.
GraphFormat format_from_path(const std::string& path);

// METIS: header "n m [fmt [ncon]]", then one line per vertex listing its
// 1-indexed neighbors (alternating with weights when fmt's last digit is 1).
Graph read_metis(std::istream& in);

// One "u v [w]" per line, 0-indexed, default weight 1. n is max id + 1.
Graph read_edge_list(std::istream& in);

Graph read_graph(const std::string& path, GraphFormat format);
Graph read_graph(const std::string& path);

void write_metis(std::ostream& out, const Graph& graph);

}  // namespace parcut
