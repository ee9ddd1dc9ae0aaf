#include "parcut/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <algorithm>
#include <string_view>

namespace parcut {

namespace {

bool is_comment_or_blank(std::string_view line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string_view::npos || line[pos] == '%' || line[pos] == '#';
}

// Splits a line into unsigned integers; throws on any non-numeric token.
std::vector<std::uint64_t> parse_numbers(std::string_view line, std::size_t line_no) {
  std::vector<std::uint64_t> values;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i == line.size()) break;
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
    std::size_t consumed = static_cast<std::size_t>(ptr - (line.data() + i));
    if (ec != std::errc{} || consumed == 0 ||
        (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t' && *ptr != '\r')) {
      throw InputError("line " + std::to_string(line_no) + ": expected a non-negative integer");
    }
    values.push_back(value);
    i += consumed;
  }
  return values;
}

std::string extension_of(const std::string& path) {
  auto slash = path.find_last_of('/');
  auto dot = path.find_last_of('.');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return "";
  return path.substr(dot + 1);
}

}  // namespace

GraphFormat format_from_path(const std::string& path) {
  const std::string ext = extension_of(path);
  if (ext == "metis" || ext == "graph") return GraphFormat::kMetis;
  if (ext == "txt" || ext == "edges" || ext == "el" || ext == "edgelist") return GraphFormat::kEdgeList;
  throw InputError("cannot infer graph format from '" + path + "' (use .metis/.graph or .txt/.edges/.el)");
}

Graph read_metis(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::uint64_t> header;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_comment_or_blank(line)) continue;
    header = parse_numbers(line, line_no);
    break;
  }
  if (header.size() < 2 || header.size() > 4) throw InputError("METIS: missing or malformed header line");
  if (header[0] >= kInvalidNode) throw InputError("METIS: too many vertices");
  const auto n = static_cast<NodeID>(header[0]);
  const std::uint64_t m = header[1];
  // fmt is read as decimal digits "abc": c = edge weights, b = vertex weights.
  const std::uint64_t fmt = header.size() >= 3 ? header[2] : 0;
  const bool edge_weights = fmt % 10 == 1;
  const bool vertex_weights = (fmt / 10) % 10 == 1;
  if (fmt % 10 > 1 || (fmt / 10) % 10 > 1 || fmt / 100 > 1) throw InputError("METIS: unsupported fmt field");
  const std::uint64_t ncon = header.size() == 4 ? header[3] : (vertex_weights ? 1 : 0);

  std::vector<WeightedEdge> arcs;
  arcs.reserve(2 * m);
  NodeID v = 0;
  while (v < n && std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.find_first_not_of(" \t\r") != std::string::npos &&
        line[line.find_first_not_of(" \t\r")] == '%') {
      continue;
    }
    auto values = parse_numbers(line, line_no);
    std::size_t i = vertex_weights ? ncon : 0;
    if (values.size() < i) throw InputError("METIS line " + std::to_string(line_no) + ": missing vertex weights");
    const std::size_t stride = edge_weights ? 2 : 1;
    if ((values.size() - i) % stride != 0) {
      throw InputError("METIS line " + std::to_string(line_no) + ": neighbor without weight");
    }
    for (; i < values.size(); i += stride) {
      if (values[i] == 0 || values[i] > n) {
        throw InputError("METIS line " + std::to_string(line_no) + ": neighbor id out of range");
      }
      arcs.push_back({v, static_cast<NodeID>(values[i] - 1), edge_weights ? values[i + 1] : 1});
    }
    ++v;
  }
  if (v < n) throw InputError("METIS: expected " + std::to_string(n) + " adjacency lines, found " + std::to_string(v));
  if (arcs.size() != 2 * m) {
    throw InputError("METIS: header announces " + std::to_string(m) + " edges but adjacency lists hold " +
                     std::to_string(arcs.size()) + " arcs");
  }
  return Graph::from_edges(n, arcs);
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<WeightedEdge> edges;
  std::uint64_t max_id = 0;
  bool any = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_comment_or_blank(line)) continue;
    auto values = parse_numbers(line, line_no);
    if (values.size() < 2 || values.size() > 3) {
      throw InputError("edge list line " + std::to_string(line_no) + ": expected 'u v [w]'");
    }
    if (values[0] >= kInvalidNode - 1 || values[1] >= kInvalidNode - 1) {
      throw InputError("edge list line " + std::to_string(line_no) + ": vertex id too large");
    }
    max_id = std::max({max_id, values[0], values[1]});
    any = true;
    edges.push_back({static_cast<NodeID>(values[0]), static_cast<NodeID>(values[1]),
                     values.size() == 3 ? values[2] : 1});
  }
  return Graph::from_edges(any ? static_cast<NodeID>(max_id + 1) : 0, edges);
}

Graph read_graph(const std::string& path, GraphFormat format) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return format == GraphFormat::kMetis ? read_metis(in) : read_edge_list(in);
}

Graph read_graph(const std::string& path) { return read_graph(path, format_from_path(path)); }

void write_metis(std::ostream& out, const Graph& graph) {
  bool weighted = false;
  for (const auto& e : graph.edge_list()) weighted = weighted || e.weight != 1;
  out << graph.num_nodes() << ' ' << graph.num_edges();
  if (weighted) out << " 1";
  out << '\n';
  for (NodeID v = 0; v < graph.num_nodes(); ++v) {
    bool first = true;
    for (const auto& arc : graph.neighbors(v)) {
      if (!first) out << ' ';
      first = false;
      out << arc.target + 1;
      if (weighted) out << ' ' << arc.weight;
    }
    out << '\n';
  }
}

}  // namespace parcut
