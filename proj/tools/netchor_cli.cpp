// Command-line front end. Everything goes through the C API in netchor.h.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "netchor/netchor.h"

namespace {

struct GraphDeleter {
  void operator()(nc_graph* g) const { nc_graph_free(g); }
};
using GraphPtr = std::unique_ptr<nc_graph, GraphDeleter>;

struct StringDeleter {
  void operator()(char* s) const { nc_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct GlobalOptions {
  std::uint64_t seed = 1;
  std::string out = "-";
  std::string format = "json";
  bool deterministic = false;
  int threads = 1;
};

int report_failure(nc_status status) {
  std::cerr << "netchor: " << nc_last_error() << '\n';
  return static_cast<int>(status);
}

// Writes to --out, or stdout for "-".
int emit(const std::string& path, const char* text) {
  if (path == "-") {
    std::cout << text;
    return 0;
  }
  std::ofstream out(path);
  if (!out || !(out << text)) {
    std::cerr << "netchor: cannot write '" << path << "'\n";
    return NC_ERR_INPUT;
  }
  return 0;
}

int load(const std::string& path, GraphPtr& graph) {
  nc_graph* raw = nullptr;
  size_t duplicates = 0;
  if (auto s = nc_graph_load_edge_list(path.c_str(), &raw, &duplicates); s != NC_OK) {
    return report_failure(s);
  }
  graph.reset(raw);
  if (duplicates > 0) std::cerr << "netchor: collapsed " << duplicates << " duplicate pair(s)\n";
  if (nc_graph_node_count(raw) == 0) std::cerr << "netchor: warning: empty graph\n";
  return 0;
}

// Calls `produce` and emits its string on success.
template <typename Produce>
int produce_and_emit(const std::string& out, Produce&& produce) {
  char* raw = nullptr;
  const nc_status s = produce(&raw);
  OwnedString text(raw);
  if (s != NC_OK) {
    // Validation failures still carry a report worth printing.
    if (text) emit(out, text.get());
    return report_failure(s);
  }
  return emit(out, text.get());
}

bool parse_dynamics(const std::string& spec, nc_sync_options& opts) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  if (name == "zero" && colon == std::string::npos) {
    opts.dynamics = NC_DYNAMICS_ZERO;
    return true;
  }
  if (colon == std::string::npos) return false;
  if (name == "linear") {
    opts.dynamics = NC_DYNAMICS_LINEAR;
  } else if (name == "logistic") {
    opts.dynamics = NC_DYNAMICS_LOGISTIC;
  } else {
    return false;
  }
  std::istringstream in(spec.substr(colon + 1));
  return static_cast<bool>(in >> opts.dynamics_parameter) && in.eof();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"netchor: scale-free network analysis and synchronization toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", nc_version());

  GlobalOptions global;
  app.add_option("--seed", global.seed, "RNG seed");
  app.add_option("--out", global.out, "output file ('-' for stdout)");
  app.add_option("--format", global.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--deterministic", global.deterministic, "omit timestamps from reports");
  app.add_option("--threads", global.threads, "worker threads")->check(CLI::PositiveNumber);

  int exit_code = 0;

  // generate --------------------------------------------------------------
  auto* generate = app.add_subcommand("generate", "synthesize a graph as an edge list");
  generate->require_subcommand(1);
  std::uint64_t gen_n = 0, gen_m = 0, gen_m0 = 0, gen_edges = 0;
  auto* gen_ba = generate->add_subcommand("ba", "preferential-attachment graph");
  gen_ba->add_option("--n", gen_n, "node count")->required();
  gen_ba->add_option("--m", gen_m, "edges per new node")->required();
  gen_ba->add_option("--m0", gen_m0, "seed core size (default m+1)");
  auto run_gen_ba = [&] {
    nc_graph* raw = nullptr;
    if (auto s = nc_graph_generate_ba(gen_n, gen_m, gen_m0, global.seed, &raw); s != NC_OK) {
      exit_code = report_failure(s);
      return;
    }
    GraphPtr g(raw);
    exit_code = produce_and_emit(global.out, [&](char** o) { return nc_graph_to_edge_list(g.get(), o); });
  };
  auto* gen_er = generate->add_subcommand("er", "uniform random graph with an exact edge count");
  gen_er->add_option("--n", gen_n, "node count")->required();
  gen_er->add_option("--edges", gen_edges, "edge count")->required();
  auto run_gen_er = [&] {
    nc_graph* raw = nullptr;
    if (auto s = nc_graph_generate_er(gen_n, gen_edges, global.seed, &raw); s != NC_OK) {
      exit_code = report_failure(s);
      return;
    }
    GraphPtr g(raw);
    exit_code = produce_and_emit(global.out, [&](char** o) { return nc_graph_to_edge_list(g.get(), o); });
  };

  // analyze ---------------------------------------------------------------
  std::string edge_list;
  auto* analyze = app.add_subcommand("analyze", "summary statistics and node centralities");
  analyze->add_option("--edge-list", edge_list, "input edge list")->required();
  auto run_analyze = [&] {
    GraphPtr g;
    if ((exit_code = load(edge_list, g)) != 0) return;
    const nc_format fmt = global.format == "csv" ? NC_FORMAT_CSV : NC_FORMAT_JSON;
    exit_code = produce_and_emit(global.out, [&](char** o) { return nc_analyze(g.get(), fmt, o); });
  };

  // fit -------------------------------------------------------------------
  std::string compare_out;
  auto* fit = app.add_subcommand("fit", "power-law fit of the degree distribution");
  fit->add_option("--edge-list", edge_list, "input edge list")->required();
  fit->add_option("--compare-out", compare_out,
                  "also write degree distribution vs a same-size random graph (CSV)");
  auto run_fit = [&] {
    GraphPtr g;
    if ((exit_code = load(edge_list, g)) != 0) return;
    if (global.format == "csv") {
      exit_code = produce_and_emit(
          global.out, [&](char** o) { return nc_fit_comparison(g.get(), global.seed, o); });
      return;
    }
    exit_code = produce_and_emit(global.out, [&](char** o) { return nc_fit(g.get(), o); });
    if (exit_code == 0 && !compare_out.empty()) {
      exit_code = produce_and_emit(
          compare_out, [&](char** o) { return nc_fit_comparison(g.get(), global.seed, o); });
    }
  };

  // resilience ------------------------------------------------------------
  nc_resilience_options res_opts;
  nc_resilience_options_init(&res_opts);
  std::string strategy = "error";
  auto* resilience = app.add_subcommand("resilience", "diameter and fragmentation under node removal");
  resilience->add_option("--edge-list", edge_list, "input edge list")->required();
  resilience->add_option("--strategy", strategy, "error or attack")
      ->check(CLI::IsMember({"error", "attack"}));
  resilience->add_option("--seeds", res_opts.seeds, "random-error runs (ensemble when > 1)");
  resilience->add_option("--record-every", res_opts.record_every, "removed-fraction spacing");
  auto run_resilience = [&] {
    GraphPtr g;
    if ((exit_code = load(edge_list, g)) != 0) return;
    res_opts.strategy = strategy == "attack" ? NC_STRATEGY_ATTACK : NC_STRATEGY_ERROR;
    res_opts.base_seed = global.seed;
    exit_code = produce_and_emit(global.out,
                                 [&](char** o) { return nc_resilience(g.get(), &res_opts, o); });
  };

  // sync ------------------------------------------------------------------
  nc_sync_options sync_opts;
  nc_sync_options_init(&sync_opts);
  std::string dynamics = "zero";
  bool full = false;
  bool spectral_only = false;
  double threshold = -1.0;
  auto* sync = app.add_subcommand("sync", "coupled-dynamics simulation and spectral stability");
  sync->add_option("--edge-list", edge_list, "input edge list")->required();
  sync->add_option("--dynamics", dynamics, "zero | linear:<alpha> | logistic:<r>");
  sync->add_option("--c", sync_opts.coupling, "coupling strength");
  sync->add_option("--dt", sync_opts.dt, "RK4 step");
  sync->add_option("--tmax", sync_opts.t_max, "integration horizon");
  sync->add_option("--tol", sync_opts.tolerance, "synchronization threshold");
  sync->add_option("--state-dim", sync_opts.state_dim, "state components per node");
  sync->add_option("--intra-dim", sync_opts.intra_dim, "intra-node components (metadata)");
  sync->add_option("--stride", sync_opts.record_stride, "record every k-th step");
  sync->add_flag("--full", full, "include per-node state columns");
  sync->add_flag("--spectral-only", spectral_only, "emit the spectral stability report as JSON");
  sync->add_option("--threshold", threshold, "lambda1-lambda2 closeness threshold (default 0.1*max(1,mean degree))");
  auto run_sync = [&] {
    GraphPtr g;
    if ((exit_code = load(edge_list, g)) != 0) return;
    if (spectral_only) {
      exit_code = produce_and_emit(
          global.out, [&](char** o) { return nc_sync_spectral(g.get(), threshold, o); });
      return;
    }
    if (!parse_dynamics(dynamics, sync_opts)) {
      std::cerr << "netchor: bad --dynamics '" << dynamics << "'\n";
      exit_code = NC_ERR_INPUT;
      return;
    }
    sync_opts.full = full ? 1 : 0;
    sync_opts.seed = global.seed;
    exit_code = produce_and_emit(global.out,
                                 [&](char** o) { return nc_sync_simulate(g.get(), &sync_opts, o); });
  };

  // validate --------------------------------------------------------------
  std::string fixture = NETCHOR_DEFAULT_FIXTURE;
  auto* validate = app.add_subcommand("validate", "consistency checks on the EEN node table");
  validate->add_option("--fixture", fixture, "fixture CSV");
  auto run_validate = [&] {
    exit_code = produce_and_emit(global.out, [&](char** o) {
      return nc_validate_fixture(fixture.c_str(), o, nullptr);
    });
  };

  // pipeline --------------------------------------------------------------
  std::string config_path;
  auto* pipeline = app.add_subcommand("pipeline", "run the full analysis from a JSON config");
  pipeline->add_option("--config", config_path, "pipeline config JSON")->required();
  auto run_pipeline = [&] {
    std::ifstream in(config_path);
    if (!in) {
      std::cerr << "netchor: cannot open config '" << config_path << "'\n";
      exit_code = NC_ERR_INPUT;
      return;
    }
    std::stringstream text;
    text << in.rdbuf();
    const std::string config = text.str();
    exit_code = produce_and_emit(global.out, [&](char** o) {
      return nc_pipeline_run(config.c_str(), global.deterministic ? 1 : 0, o);
    });
  };

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return NC_ERR_INPUT;
  }
  nc_set_thread_count(global.threads);
  if (gen_ba->parsed()) {
    run_gen_ba();
  } else if (gen_er->parsed()) {
    run_gen_er();
  } else if (analyze->parsed()) {
    run_analyze();
  } else if (fit->parsed()) {
    run_fit();
  } else if (resilience->parsed()) {
    run_resilience();
  } else if (sync->parsed()) {
    run_sync();
  } else if (validate->parsed()) {
    run_validate();
  } else if (pipeline->parsed()) {
    run_pipeline();
  }
  return exit_code;
}
