// mincut: exact global minimum cut of a graph file.
//
//   mincut solve graph.metis --threads 4 --queue bqueue --json

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "parcut/graph_io.hpp"
#include "parcut/mincut.hpp"
#include "parcut/oracle.hpp"

namespace {

using namespace parcut;
using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

constexpr NodeID kCheckLimit = 256;

enum ExitCode { kOk = 0, kInputFailure = 1, kInternalFailure = 2, kCheckFailure = 3 };

struct SolveOptions {
  std::string input;
  std::string format = "auto";
  std::string queue = "bqueue";
  std::optional<std::size_t> threads;
  std::uint64_t seed = 0;
  std::string bound = "lp";
  bool uncapped = false;
  std::optional<EdgeWeight> kcore;
  bool kcore_unweighted = false;
  bool lcc = false;
  std::string partition_file;
  bool json_output = false;
  bool check = false;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::size_t thread_count(const SolveOptions& options) {
  if (options.threads) {
    if (*options.threads == 0) throw InputError("--threads must be at least 1");
    return *options.threads;
  }
  if (const char* env = std::getenv("MINCUT_THREADS")) {
    try {
      std::size_t pos = 0;
      const unsigned long value = std::stoul(env, &pos);
      if (pos == std::string(env).size() && value > 0) return value;
    } catch (const std::exception&) {
    }
    throw InputError(std::string("MINCUT_THREADS is not a positive integer: '") + env + "'");
  }
  return 1;
}

json size_entry(const std::string& step, const Graph& graph) {
  return {{"step", step}, {"n", graph.num_nodes()}, {"m", graph.num_edges()}};
}

int solve(const SolveOptions& options) {
  const auto total_start = Clock::now();
  json report;
  report["schema"] = 1;
  report["input"] = options.input;

  DriverConfig config;
  config.queue = parse_queue_kind(options.queue);
  config.workers = thread_count(options);
  config.seed = options.seed;
  config.bound = parse_bound_method(options.bound);
  config.cap_mode = options.uncapped ? CapMode::kUncapped : CapMode::kCapped;
  config.emit_partition = !options.partition_file.empty();
  if (options.kcore && *options.kcore == 0) throw InputError("--kcore must be at least 1");

  GraphFormat format;
  if (options.format == "auto") {
    format = format_from_path(options.input);
  } else if (options.format == "metis") {
    format = GraphFormat::kMetis;
  } else if (options.format == "edgelist") {
    format = GraphFormat::kEdgeList;
  } else {
    throw InputError("unknown format '" + options.format + "' (expected auto, metis or edgelist)");
  }
  report["format"] = format == GraphFormat::kMetis ? "metis" : "edgelist";

  auto phase_start = Clock::now();
  Graph graph = read_graph(options.input, format);
  const double read_seconds = seconds_since(phase_start);

  json sizes = json::array();
  sizes.push_back(size_entry("input", graph));
  VertexMap map = VertexMap::identity(graph.num_nodes());
  phase_start = Clock::now();
  if (options.kcore) {
    auto [core, core_map] =
        k_core(graph, *options.kcore, options.kcore_unweighted ? DegreeMode::kUnweighted : DegreeMode::kWeighted);
    graph = std::move(core);
    map = map.then(core_map);
    sizes.push_back(size_entry("kcore", graph));
  }
  if (options.lcc) {
    auto [component, component_map] = largest_connected_component(graph);
    graph = std::move(component);
    map = map.then(component_map);
    sizes.push_back(size_entry("lcc", graph));
  }
  const double preprocess_seconds = seconds_since(phase_start);
  report["sizes"] = sizes;
  if (graph.num_nodes() < 2) throw InputError("fewer than two vertices left after preprocessing");

  report["config"] = {{"queue", std::string(to_string(config.queue))},
                      {"threads", config.workers},
                      {"seed", config.seed},
                      {"bound", std::string(to_string(config.bound))},
                      {"capped", !options.uncapped}};

  phase_start = Clock::now();
  CutResult result = exact_mincut(graph, config);
  const double solve_seconds = seconds_since(phase_start);

  report["value"] = result.value;
  report["initial_bound"] = result.initial_bound;
  report["rounds"] = result.rounds;
  report["fallbacks"] = result.fallbacks;
  json rounds = json::array();
  json round_timing = json::array();
  for (const auto& round : result.round_stats) {
    rounds.push_back({{"n", round.nodes},
                      {"m", round.edges},
                      {"unions", round.unions},
                      {"fallback", round.fallback},
                      {"lambda_hat", round.lambda_hat}});
    round_timing.push_back({{"scan", round.scan_seconds}, {"contract", round.contract_seconds}});
  }
  report["round_stats"] = rounds;

  // Partition ids are written in the numbering of the input file.
  if (config.emit_partition) {
    std::vector<NodeID> side = map.to_original(result.partition);
    std::ofstream out(options.partition_file);
    if (!out) throw InputError("cannot write partition file '" + options.partition_file + "'");
    const NodeID offset = format == GraphFormat::kMetis ? 1 : 0;
    for (NodeID v : side) out << v + offset << '\n';
    report["partition"] = {{"file", options.partition_file}, {"size", side.size()}};
  }

  int code = kOk;
  if (options.check) {
    if (graph.num_nodes() > kCheckLimit) {
      report["check"] = {{"skipped", true}};
    } else {
      const EdgeWeight expected = oracle_global_mincut(graph).value;
      const bool ok = expected == result.value;
      report["check"] = {{"oracle", expected}, {"ok", ok}};
      if (!ok) code = kCheckFailure;
    }
  }

  report["timing"] = {{"read", read_seconds},
                      {"preprocess", preprocess_seconds},
                      {"bound", result.bound_seconds},
                      {"solve", solve_seconds},
                      {"rounds", round_timing},
                      {"total", seconds_since(total_start)}};

  if (options.json_output) {
    std::cout << report.dump(2) << '\n';
  } else {
    std::cout << "input      " << options.input << '\n';
    for (const auto& entry : report["sizes"]) {
      std::cout << "  " << entry["step"].get<std::string>() << ": n=" << entry["n"] << " m=" << entry["m"] << '\n';
    }
    std::cout << "config     queue=" << to_string(config.queue) << " threads=" << config.workers
              << " seed=" << config.seed << " bound=" << to_string(config.bound)
              << (options.uncapped ? " uncapped" : " capped") << '\n';
    std::cout << "mincut     " << result.value << '\n';
    std::cout << "bound      " << result.initial_bound << " (" << result.bound_seconds << " s)\n";
    std::cout << "rounds     " << result.rounds << " (fallbacks " << result.fallbacks << ")\n";
    if (config.emit_partition) {
      std::cout << "partition  " << report["partition"]["size"] << " vertices -> " << options.partition_file << '\n';
    }
    if (report.contains("check")) {
      if (report["check"].contains("skipped")) {
        std::cout << "check      skipped (n > " << kCheckLimit << ")\n";
      } else {
        std::cout << "check      oracle=" << report["check"]["oracle"] << (code == kOk ? " ok" : " MISMATCH") << '\n';
      }
    }
    std::cout << "time       " << report["timing"]["total"].get<double>() << " s\n";
  }
  if (code == kCheckFailure) std::cerr << "mincut: result disagrees with the oracle\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact global minimum cut"};
  app.require_subcommand(1);

  SolveOptions options;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Compute the minimum cut of a graph file");
  solve_cmd->add_option("input", options.input, "Graph file (METIS or edge list)")->required();
  solve_cmd->add_option("--format", options.format, "auto, metis or edgelist")->capture_default_str();
  solve_cmd->add_option("--queue", options.queue, "heap, bstack or bqueue")->capture_default_str();
  solve_cmd->add_option("--threads", options.threads, "Worker threads (default: MINCUT_THREADS or 1)");
  solve_cmd->add_option("--seed", options.seed, "Random seed")->capture_default_str();
  solve_cmd->add_option("--bound", options.bound, "Initial bound: mindeg or lp")->capture_default_str();
  solve_cmd->add_flag("--uncapped", options.uncapped, "Do not cap priorities at the current bound");
  solve_cmd->add_option("--kcore", options.kcore, "Reduce to the k-core first");
  solve_cmd->add_flag("--kcore-unweighted", options.kcore_unweighted, "Use edge counts for --kcore");
  solve_cmd->add_flag("--lcc", options.lcc, "Keep only the largest connected component");
  solve_cmd->add_option("--partition", options.partition_file, "Write one side of the cut to FILE");
  solve_cmd->add_flag("--json", options.json_output, "Print the report as JSON");
  solve_cmd->add_flag("--check", options.check, "Verify against an independent solver (n <= 256)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    return solve(options);
  } catch (const InputError& e) {
    std::cerr << "mincut: " << e.what() << '\n';
    return kInputFailure;
  } catch (const WeightOverflow& e) {
    std::cerr << "mincut: " << e.what() << '\n';
    return kInputFailure;
  } catch (const std::exception& e) {
    std::cerr << "mincut: internal error: " << e.what() << '\n';
    return kInternalFailure;
  }
}
