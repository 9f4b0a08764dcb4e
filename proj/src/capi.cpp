#include <cstdlib>
#include <cstring>
#include <exception>
#include <fstream>
#include <new>
#include <sstream>
#include <string>

#include "netchor/error.hpp"
#include "netchor/generators.hpp"
#include "netchor/graph.hpp"
#include "netchor/netchor.h"
#include "netchor/parallel.hpp"
#include "netchor/report.hpp"
#include "netchor/rng.hpp"

struct nc_graph {
  netchor::Graph graph;
  std::string source = "in-memory graph";
  std::vector<std::uint64_t> seeds;
  std::vector<std::string> warnings;
  std::size_t duplicates_collapsed = 0;
};

namespace {

thread_local std::string g_last_error;

nc_status fail(nc_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

// Runs `body`, mapping toolkit exceptions to status codes.
template <typename Body>
nc_status guarded(Body&& body) {
  try {
    g_last_error.clear();
    return body();
  } catch (const netchor::Error& e) {
    return fail(static_cast<nc_status>(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(NC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(NC_ERR_INTERNAL, e.what());
  }
}

char* duplicate(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

nc_status need(const void* p, const char* what) {
  if (p) return NC_OK;
  return fail(NC_ERR_INPUT, std::string(what) + " must not be NULL");
}

nc_graph* wrap(netchor::Graph g, std::string source) {
  auto* h = new nc_graph;
  h->graph = std::move(g);
  h->source = std::move(source);
  return h;
}

nc_graph* wrap(netchor::EdgeListIngestion ingestion, std::string source) {
  auto* h = wrap(std::move(ingestion.graph), std::move(source));
  h->warnings = std::move(ingestion.warnings);
  h->duplicates_collapsed = ingestion.duplicates_collapsed;
  return h;
}

}  // namespace

extern "C" {

const char* nc_version(void) { return netchor::kToolkitVersion; }

const char* nc_last_error(void) { return g_last_error.c_str(); }

void nc_string_free(char* s) { std::free(s); }

void nc_set_thread_count(int threads) { netchor::set_thread_count(threads); }

nc_status nc_graph_load_edge_list(const char* path, nc_graph** out, size_t* duplicates) {
  if (auto s = need(path, "path"); s != NC_OK) return s;
  if (auto s = need(out, "out"); s != NC_OK) return s;
  return guarded([&] {
    auto ingestion = netchor::read_edge_list_file(path);
    if (duplicates) *duplicates = ingestion.duplicates_collapsed;
    *out = wrap(std::move(ingestion), std::string("edge_list:") + path);
    return NC_OK;
  });
}

nc_status nc_graph_parse_edge_list(const char* text, nc_graph** out, size_t* duplicates) {
  if (auto s = need(text, "text"); s != NC_OK) return s;
  if (auto s = need(out, "out"); s != NC_OK) return s;
  return guarded([&] {
    std::istringstream in(text);
    auto ingestion = netchor::parse_edge_list(in);
    if (duplicates) *duplicates = ingestion.duplicates_collapsed;
    *out = wrap(std::move(ingestion), "edge_list:<text>");
    return NC_OK;
  });
}

nc_status nc_graph_generate_ba(uint64_t n, uint64_t m, uint64_t m0, uint64_t seed,
                               nc_graph** out) {
  if (auto s = need(out, "out"); s != NC_OK) return s;
  return guarded([&] {
    *out = wrap(netchor::generate_ba({n, m, m0, seed}),
                "generate:ba(n=" + std::to_string(n) + ",m=" + std::to_string(m) +
                    ",m0=" + std::to_string(m0 == 0 ? m + 1 : m0) +
                    ",seed=" + std::to_string(seed) + ")");
    (*out)->seeds.push_back(seed);
    return NC_OK;
  });
}

nc_status nc_graph_generate_er(uint64_t n, uint64_t edges, uint64_t seed, nc_graph** out) {
  if (auto s = need(out, "out"); s != NC_OK) return s;
  return guarded([&] {
    *out = wrap(netchor::generate_er({n, edges, seed}),
                "generate:er(n=" + std::to_string(n) + ",edges=" + std::to_string(edges) +
                    ",seed=" + std::to_string(seed) + ")");
    (*out)->seeds.push_back(seed);
    return NC_OK;
  });
}

void nc_graph_free(nc_graph* g) { delete g; }

size_t nc_graph_node_count(const nc_graph* g) { return g ? g->graph.node_count() : 0; }

size_t nc_graph_edge_count(const nc_graph* g) { return g ? g->graph.edge_count() : 0; }

nc_status nc_graph_degree(const nc_graph* g, size_t node, size_t* out) {
  if (auto s = need(g, "graph"); s != NC_OK) return s;
  if (auto s = need(out, "out"); s != NC_OK) return s;
  return guarded([&] {
    if (node >= g->graph.node_count()) {
      throw netchor::InputError("node id " + std::to_string(node) + " out of range");
    }
    *out = g->graph.degree(static_cast<netchor::NodeId>(node));
    return NC_OK;
  });
}

nc_status nc_graph_write_edge_list(const nc_graph* g, const char* path) {
  if (auto s = need(g, "graph"); s != NC_OK) return s;
  if (auto s = need(path, "path"); s != NC_OK) return s;
  return guarded([&] {
    netchor::write_edge_list_file(g->graph, path);
    return NC_OK;
  });
}

nc_status nc_graph_to_edge_list(const nc_graph* g, char** out) {
  if (auto s = need(g, "graph"); s != NC_OK) return s;
  if (auto s = need(out, "out"); s != NC_OK) return s;
  return guarded([&] {
    std::ostringstream text;
    netchor::write_edge_list(g->graph, text);
    *out = duplicate(text.str());
    return NC_OK;
  });
}

nc_status nc_analyze(const nc_graph* g, nc_format format, char** out) {
  if (auto s = need(g, "graph"); s != NC_OK) return s;
  if (auto s = need(out, "out"); s != NC_OK) return s;
  return guarded([&] {
    if (format == NC_FORMAT_CSV) {
      std::ostringstream csv;
      netchor::write_node_stats_csv(csv, netchor::node_statistics(g->graph));
      *out = duplicate(csv.str());
      return NC_OK;
    }
    netchor::PipelineConfig cfg;
    cfg.stages = {netchor::Stage::kSummary, netchor::Stage::kCentralities};
    cfg.deterministic = true;
    auto report = netchor::run_pipeline(g->graph, cfg);
    report.provenance.input = g->source;
    report.provenance.seeds = g->seeds;
    report.provenance.warnings = g->warnings;
    report.provenance.duplicates_collapsed = g->duplicates_collapsed;
    *out = duplicate(netchor::report_to_json(report));
    if (!report.stage_errors.empty()) {
      return fail(NC_ERR_INPUT, report.stage_errors.begin()->first + ": " +
                                    report.stage_errors.begin()->second);
    }
    return NC_OK;
  });
}

nc_status nc_fit(const nc_graph* g, char** out) {
  if (auto s = need(g, "graph"); s != NC_OK) return s;
  if (auto s = need(out, "out"); s != NC_OK) return s;
  return guarded([&] {
    const auto fit = netchor::fit_power_law(netchor::degree_sequence(g->graph));
    *out = duplicate(netchor::fit_to_json(fit));
    return NC_OK;
  });
}

nc_status nc_fit_comparison(const nc_graph* g, uint64_t seed, char** out) {
  if (auto s = need(g, "graph"); s != NC_OK) return s;
  if (auto s = need(out, "out"); s != NC_OK) return s;
  return guarded([&] {
    const auto reference =
        netchor::generate_er({g->graph.node_count(), g->graph.edge_count(), seed});
    std::ostringstream csv;
    netchor::write_comparison_csv(csv, netchor::distribution_comparison(g->graph, reference));
    *out = duplicate(csv.str());
    return NC_OK;
  });
}

void nc_resilience_options_init(nc_resilience_options* options) {
  if (!options) return;
  options->strategy = NC_STRATEGY_ERROR;
  options->seeds = 10;
  options->base_seed = 1;
  options->record_every = 0.01;
}

nc_status nc_resilience(const nc_graph* g, const nc_resilience_options* options, char** out) {
  if (auto s = need(g, "graph"); s != NC_OK) return s;
  if (auto s = need(options, "options"); s != NC_OK) return s;
  if (auto s = need(out, "out"); s != NC_OK) return s;
  return guarded([&] {
    std::ostringstream csv;
    if (options->strategy == NC_STRATEGY_ATTACK) {
      netchor::write_trace_csv(
          csv, netchor::run_resilience(g->graph, netchor::RemovalStrategy::targeted_attack(),
                                       options->record_every));
    } else if (options->strategy == NC_STRATEGY_ERROR) {
      if (options->seeds == 0) throw netchor::InputError("seeds must be >= 1");
      if (options->seeds == 1) {
        netchor::write_trace_csv(
            csv, netchor::run_resilience(g->graph,
                                         netchor::RemovalStrategy::random_error(options->base_seed),
                                         options->record_every));
      } else {
        std::vector<std::uint64_t> seeds;
        for (size_t i = 0; i < options->seeds; ++i) seeds.push_back(options->base_seed + i);
        netchor::write_ensemble_csv(
            csv, netchor::run_error_ensemble(g->graph, seeds, options->record_every));
      }
    } else {
      throw netchor::InputError("unknown removal strategy");
    }
    *out = duplicate(csv.str());
    return NC_OK;
  });
}

void nc_sync_options_init(nc_sync_options* options) {
  if (!options) return;
  options->coupling = 1.0;
  options->dynamics = NC_DYNAMICS_ZERO;
  options->dynamics_parameter = 0.0;
  options->state_dim = 1;
  options->intra_dim = 0;
  options->dt = 0.01;
  options->t_max = 50.0;
  options->tolerance = 1e-6;
  options->record_stride = 1;
  options->seed = 1;
  options->full = 0;
}

nc_status nc_sync_simulate(const nc_graph* g, const nc_sync_options* options, char** out) {
  if (auto s = need(g, "graph"); s != NC_OK) return s;
  if (auto s = need(options, "options"); s != NC_OK) return s;
  if (auto s = need(out, "out"); s != NC_OK) return s;
  return guarded([&] {
    netchor::SyncConfig cfg;
    cfg.coupling = options->coupling;
    switch (options->dynamics) {
      case NC_DYNAMICS_ZERO:
        cfg.dynamics = netchor::NodeDynamics::zero();
        break;
      case NC_DYNAMICS_LINEAR:
        cfg.dynamics = netchor::NodeDynamics::linear(options->dynamics_parameter);
        break;
      case NC_DYNAMICS_LOGISTIC:
        cfg.dynamics = netchor::NodeDynamics::logistic(options->dynamics_parameter);
        break;
      default:
        throw netchor::InputError("unknown dynamics");
    }
    cfg.state_dim = options->state_dim;
    cfg.intra_dim = options->intra_dim;
    cfg.dt = options->dt;
    cfg.t_max = options->t_max;
    cfg.tolerance = options->tolerance;
    cfg.record_stride = options->record_stride;
    cfg.keep_states = options->full != 0;
    if (cfg.state_dim < 1) throw netchor::InputError("state_dim must be >= 1");

    const auto n = static_cast<Eigen::Index>(g->graph.node_count());
    const auto dim = static_cast<Eigen::Index>(cfg.state_dim);
    Eigen::MatrixXd x0(n, dim);
    netchor::Rng rng(options->seed);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index d = 0; d < dim; ++d) x0(i, d) = rng.uniform_unit();
    }
    const auto traj = netchor::simulate(g->graph, cfg, x0);
    std::ostringstream csv;
    netchor::write_trajectory_csv(csv, traj, options->full != 0);
    *out = duplicate(csv.str());
    return NC_OK;
  });
}

nc_status nc_sync_spectral(const nc_graph* g, double closeness_threshold, char** out) {
  if (auto s = need(g, "graph"); s != NC_OK) return s;
  if (auto s = need(out, "out"); s != NC_OK) return s;
  return guarded([&] {
    std::optional<double> threshold;
    if (closeness_threshold >= 0.0) threshold = closeness_threshold;
    *out = duplicate(netchor::spectral_to_json(netchor::spectral_stability(g->graph, threshold)));
    return NC_OK;
  });
}

nc_status nc_validate_fixture(const char* path, char** out, int* all_passed) {
  if (auto s = need(path, "path"); s != NC_OK) return s;
  if (auto s = need(out, "out"); s != NC_OK) return s;
  return guarded([&] {
    const auto report = netchor::validate_fixture(netchor::load_fixture(path));
    *out = duplicate(netchor::validation_to_json(report));
    if (all_passed) *all_passed = report.passed() ? 1 : 0;
    if (!report.passed()) return fail(NC_ERR_VALIDATION, "fixture validation failed");
    return NC_OK;
  });
}

nc_status nc_pipeline_run(const char* config_json, int deterministic, char** out) {
  if (auto s = need(config_json, "config"); s != NC_OK) return s;
  if (auto s = need(out, "out"); s != NC_OK) return s;
  return guarded([&] {
    auto cfg = netchor::parse_pipeline_config(config_json);
    if (deterministic) cfg.deterministic = true;
    *out = duplicate(netchor::report_to_json(netchor::run_pipeline(cfg)));
    return NC_OK;
  });
}

}  // extern "C"
