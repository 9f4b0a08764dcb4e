#include "netchor/report.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <json.hpp>
#include <ostream>
#include <set>

#include "netchor/error.hpp"

namespace netchor {

using json = nlohmann::ordered_json;

namespace {

template <typename T>
json optional_json(const std::optional<T>& value) {
  return value ? json(*value) : json(nullptr);
}

template <typename T>
std::optional<T> optional_from(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

// JSON mapping ------------------------------------------------------------

void to_json(json& j, const GraphSummary& s) {
  json dist = json::array();
  for (const auto& [k, p] : s.degree_distribution) dist.push_back({k, p});
  j = json{{"nodes", s.nodes},
           {"edges", s.edges},
           {"average_path_length", optional_json(s.average_path_length)},
           {"unreachable_pair_fraction", s.unreachable_pair_fraction},
           {"diameter", optional_json(s.diameter)},
           {"clustering", s.clustering},
           {"components", s.components},
           {"largest_component", s.largest_component},
           {"degree_distribution", dist}};
}

void from_json(const json& j, GraphSummary& s) {
  s.nodes = j.at("nodes").get<std::size_t>();
  s.edges = j.at("edges").get<std::size_t>();
  s.average_path_length = optional_from<double>(j, "average_path_length");
  s.unreachable_pair_fraction = j.at("unreachable_pair_fraction").get<double>();
  s.diameter = optional_from<std::size_t>(j, "diameter");
  s.clustering = j.at("clustering").get<double>();
  s.components = j.at("components").get<std::size_t>();
  s.largest_component = j.at("largest_component").get<std::size_t>();
  s.degree_distribution.clear();
  for (const auto& point : j.at("degree_distribution")) {
    s.degree_distribution[point.at(0).get<std::size_t>()] = point.at(1).get<double>();
  }
}

void to_json(json& j, const NodeStats& n) {
  j = json{{"node", n.node},
           {"label", n.label},
           {"degree", n.degree},
           {"clustering", n.clustering},
           {"closeness", optional_json(n.closeness)},
           {"betweenness", n.betweenness},
           {"eigenvector", n.eigenvector}};
}

void from_json(const json& j, NodeStats& n) {
  n.node = j.at("node").get<NodeId>();
  n.label = j.at("label").get<std::string>();
  n.degree = j.at("degree").get<std::size_t>();
  n.clustering = j.at("clustering").get<double>();
  n.closeness = optional_from<double>(j, "closeness");
  n.betweenness = j.at("betweenness").get<double>();
  n.eigenvector = j.at("eigenvector").get<double>();
}

void to_json(json& j, const PowerLawFit& f) {
  j = json{{"gamma", f.gamma},
           {"k_min", f.k_min},
           {"ks_stat", f.ks_stat},
           {"n_tail", f.n_tail},
           {"zeros_dropped", f.zeros_dropped}};
}

void from_json(const json& j, PowerLawFit& f) {
  f.gamma = j.at("gamma").get<double>();
  f.k_min = j.at("k_min").get<std::size_t>();
  f.ks_stat = j.at("ks_stat").get<double>();
  f.n_tail = j.at("n_tail").get<std::size_t>();
  f.zeros_dropped = j.at("zeros_dropped").get<std::size_t>();
}

void to_json(json& j, const SpectralReport& s) {
  j = json{{"lambda1", s.lambda1},
           {"lambda2", s.lambda2},
           {"gap", s.gap},
           {"stable", s.stable},
           {"zero_multiplicity", s.zero_multiplicity},
           {"zero_tolerance", s.zero_tolerance},
           {"closeness_threshold", s.closeness_threshold},
           {"eigenvalues", s.eigenvalues}};
}

void from_json(const json& j, SpectralReport& s) {
  s.lambda1 = j.at("lambda1").get<double>();
  s.lambda2 = j.at("lambda2").get<double>();
  s.gap = j.at("gap").get<double>();
  s.stable = j.at("stable").get<bool>();
  s.zero_multiplicity = j.at("zero_multiplicity").get<std::size_t>();
  s.zero_tolerance = j.at("zero_tolerance").get<double>();
  s.closeness_threshold = j.at("closeness_threshold").get<double>();
  s.eigenvalues = j.at("eigenvalues").get<std::vector<double>>();
}

void to_json(json& j, const TraceRow& r) {
  j = json{{"removed", r.removed},
           {"removed_fraction", r.removed_fraction},
           {"diameter", r.diameter},
           {"lcc_size", r.lcc_size},
           {"components", r.components}};
}

void from_json(const json& j, TraceRow& r) {
  r.removed = j.at("removed").get<std::size_t>();
  r.removed_fraction = j.at("removed_fraction").get<double>();
  r.diameter = j.at("diameter").get<std::size_t>();
  r.lcc_size = j.at("lcc_size").get<std::size_t>();
  r.components = j.at("components").get<std::size_t>();
}

void to_json(json& j, const ResilienceTrace& t) {
  j = json{{"initial_nodes", t.initial_nodes},
           {"rows", t.rows},
           {"lcc_by_step", t.lcc_by_step},
           {"removal_order", t.removal_order}};
}

void from_json(const json& j, ResilienceTrace& t) {
  t.initial_nodes = j.at("initial_nodes").get<std::size_t>();
  t.rows = j.at("rows").get<std::vector<TraceRow>>();
  t.lcc_by_step = j.at("lcc_by_step").get<std::vector<std::size_t>>();
  t.removal_order = j.at("removal_order").get<std::vector<NodeId>>();
}

void to_json(json& j, const EnsembleRow& r) {
  j = json{{"removed_fraction", r.removed_fraction},
           {"diameter_median", r.diameter_median},
           {"diameter_min", r.diameter_min},
           {"diameter_max", r.diameter_max},
           {"lcc_median", r.lcc_median},
           {"lcc_min", r.lcc_min},
           {"lcc_max", r.lcc_max},
           {"components_median", r.components_median},
           {"components_min", r.components_min},
           {"components_max", r.components_max}};
}

void from_json(const json& j, EnsembleRow& r) {
  r.removed_fraction = j.at("removed_fraction").get<double>();
  r.diameter_median = j.at("diameter_median").get<double>();
  r.diameter_min = j.at("diameter_min").get<std::size_t>();
  r.diameter_max = j.at("diameter_max").get<std::size_t>();
  r.lcc_median = j.at("lcc_median").get<double>();
  r.lcc_min = j.at("lcc_min").get<std::size_t>();
  r.lcc_max = j.at("lcc_max").get<std::size_t>();
  r.components_median = j.at("components_median").get<double>();
  r.components_min = j.at("components_min").get<std::size_t>();
  r.components_max = j.at("components_max").get<std::size_t>();
}

void to_json(json& j, const ResilienceSection& r) {
  json error = nullptr;
  if (r.error) error = json{{"seeds", r.error->seeds}, {"rows", r.error->rows}};
  j = json{{"record_every", r.record_every},
           {"attack", optional_json(r.attack)},
           {"error", error},
           {"attack_half_fraction", optional_json(r.attack_half_fraction)},
           {"error_half_fraction_median", optional_json(r.error_half_fraction_median)}};
}

void from_json(const json& j, ResilienceSection& r) {
  r.record_every = j.at("record_every").get<double>();
  r.attack = optional_from<ResilienceTrace>(j, "attack");
  r.error.reset();
  if (j.contains("error") && !j.at("error").is_null()) {
    ResilienceEnsemble e;
    e.seeds = j.at("error").at("seeds").get<std::vector<std::uint64_t>>();
    e.rows = j.at("error").at("rows").get<std::vector<EnsembleRow>>();
    r.error = std::move(e);
  }
  r.attack_half_fraction = optional_from<double>(j, "attack_half_fraction");
  r.error_half_fraction_median = optional_from<double>(j, "error_half_fraction_median");
}

void to_json(json& j, const Provenance& p) {
  j = json{{"input", p.input},
           {"seeds", p.seeds},
           {"toolkit_version", p.toolkit_version},
           {"generated_at", optional_json(p.generated_at)},
           {"stages", p.stages},
           {"warnings", p.warnings},
           {"duplicates_collapsed", p.duplicates_collapsed}};
}

void from_json(const json& j, Provenance& p) {
  p.input = j.at("input").get<std::string>();
  p.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
  p.toolkit_version = j.at("toolkit_version").get<std::string>();
  p.generated_at = optional_from<std::string>(j, "generated_at");
  p.stages = j.at("stages").get<std::vector<std::string>>();
  p.warnings = j.at("warnings").get<std::vector<std::string>>();
  p.duplicates_collapsed = j.at("duplicates_collapsed").get<std::size_t>();
}

std::string report_to_json(const AnalysisReport& r) {
  json j = {{"schema_version", r.schema_version},
            {"provenance", r.provenance},
            {"summary", optional_json(r.summary)},
            {"nodes", optional_json(r.nodes)},
            {"powerlaw", optional_json(r.powerlaw)},
            {"spectral", optional_json(r.spectral)},
            {"resilience", optional_json(r.resilience)},
            {"stage_errors", r.stage_errors}};
  return j.dump(2) + "\n";
}

AnalysisReport report_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    AnalysisReport r;
    r.schema_version = j.at("schema_version").get<int>();
    if (r.schema_version != kReportSchemaVersion) {
      throw InputError("unsupported report schema_version " + std::to_string(r.schema_version));
    }
    r.provenance = j.at("provenance").get<Provenance>();
    r.summary = optional_from<GraphSummary>(j, "summary");
    r.nodes = optional_from<std::vector<NodeStats>>(j, "nodes");
    r.powerlaw = optional_from<PowerLawFit>(j, "powerlaw");
    r.spectral = optional_from<SpectralReport>(j, "spectral");
    r.resilience = optional_from<ResilienceSection>(j, "resilience");
    r.stage_errors = j.at("stage_errors").get<std::map<std::string, std::string>>();
    return r;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
}

bool report_is_consistent(const AnalysisReport& r) {
  if (r.summary && r.nodes && r.summary->nodes != r.nodes->size()) return false;
  if (r.summary && r.spectral && r.summary->nodes != r.spectral->eigenvalues.size()) return false;
  if (r.summary && r.resilience && r.resilience->attack &&
      r.summary->nodes != r.resilience->attack->initial_nodes) {
    return false;
  }
  if (r.summary && r.nodes) {
    std::size_t degree_sum = 0;
    for (const auto& n : *r.nodes) degree_sum += n.degree;
    if (degree_sum != 2 * r.summary->edges) return false;
  }
  return true;
}

std::string fit_to_json(const PowerLawFit& fit) { return json(fit).dump(2) + "\n"; }
std::string spectral_to_json(const SpectralReport& report) { return json(report).dump(2) + "\n"; }

std::string validation_to_json(const ValidationReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  return json{{"passed", report.passed()}, {"checks", checks}}.dump(2) + "\n";
}

// Pipeline ----------------------------------------------------------------

std::string stage_name(Stage s) {
  switch (s) {
    case Stage::kSummary:
      return "summary";
    case Stage::kCentralities:
      return "centralities";
    case Stage::kFit:
      return "fit";
    case Stage::kSpectral:
      return "spectral";
    case Stage::kResilience:
      return "resilience";
  }
  return "unknown";
}

namespace {

const std::vector<Stage> kAllStages = {Stage::kSummary, Stage::kCentralities, Stage::kFit,
                                       Stage::kSpectral, Stage::kResilience};

void reject_unknown_keys(const json& obj, const std::string& path,
                         const std::set<std::string>& allowed) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) throw ConfigError(path.empty() ? key : path + "." + key, "unknown key");
  }
}

const json& require_object(const json& parent, const std::string& key, const std::string& path) {
  if (!parent.contains(key)) throw ConfigError(path, "missing");
  const json& v = parent.at(key);
  if (!v.is_object()) throw ConfigError(path, "expected an object");
  return v;
}

std::uint64_t get_unsigned(const json& obj, const std::string& key, const std::string& path,
                           std::optional<std::uint64_t> fallback = {}) {
  if (!obj.contains(key)) {
    if (fallback) return *fallback;
    throw ConfigError(path, "missing");
  }
  const json& v = obj.at(key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    throw ConfigError(path, "expected a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

double get_number(const json& obj, const std::string& key, const std::string& path,
                  double fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number()) throw ConfigError(path, "expected a number");
  return v.get<double>();
}

Stage parse_stage(const json& v, const std::string& path) {
  if (!v.is_string()) throw ConfigError(path, "expected a stage name");
  const auto name = v.get<std::string>();
  for (Stage s : kAllStages) {
    if (stage_name(s) == name) return s;
  }
  throw ConfigError(path, "unknown stage '" + name + "'");
}

}  // namespace

PipelineConfig parse_pipeline_config(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError("<root>", std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ConfigError("<root>", "expected an object");
  reject_unknown_keys(root, "", {"input", "stages", "spectral", "resilience", "deterministic"});

  PipelineConfig cfg;
  const json& input = require_object(root, "input", "input");
  reject_unknown_keys(input, "input", {"edge_list", "generate"});
  if (input.contains("edge_list") == input.contains("generate")) {
    throw ConfigError("input", "exactly one of 'edge_list' or 'generate' is required");
  }
  if (input.contains("edge_list")) {
    if (!input.at("edge_list").is_string()) throw ConfigError("input.edge_list", "expected a path");
    cfg.edge_list = input.at("edge_list").get<std::string>();
  } else {
    const json& gen = require_object(input, "generate", "input.generate");
    if (!gen.contains("model") || !gen.at("model").is_string()) {
      throw ConfigError("input.generate.model", "expected \"ba\" or \"er\"");
    }
    cfg.model = gen.at("model").get<std::string>();
    if (cfg.model == "ba") {
      reject_unknown_keys(gen, "input.generate", {"model", "n", "m", "m0", "seed"});
      cfg.ba.n = get_unsigned(gen, "n", "input.generate.n");
      cfg.ba.m = get_unsigned(gen, "m", "input.generate.m");
      cfg.ba.m0 = get_unsigned(gen, "m0", "input.generate.m0", 0);
      cfg.ba.seed = get_unsigned(gen, "seed", "input.generate.seed", 0);
    } else if (cfg.model == "er") {
      reject_unknown_keys(gen, "input.generate", {"model", "n", "edges", "seed"});
      cfg.er.n = get_unsigned(gen, "n", "input.generate.n");
      cfg.er.m = get_unsigned(gen, "edges", "input.generate.edges");
      cfg.er.seed = get_unsigned(gen, "seed", "input.generate.seed", 0);
    } else {
      throw ConfigError("input.generate.model", "expected \"ba\" or \"er\"");
    }
  }

  if (!root.contains("stages")) {
    cfg.stages = kAllStages;
  } else if (root.at("stages").is_string()) {
    if (root.at("stages").get<std::string>() != "all") {
      throw ConfigError("stages", "expected \"all\" or a list of stage names");
    }
    cfg.stages = kAllStages;
  } else if (root.at("stages").is_array()) {
    std::set<Stage> wanted;
    const auto& list = root.at("stages");
    for (std::size_t i = 0; i < list.size(); ++i) {
      wanted.insert(parse_stage(list[i], "stages[" + std::to_string(i) + "]"));
    }
    for (Stage s : kAllStages) {
      if (wanted.count(s)) cfg.stages.push_back(s);
    }
  } else {
    throw ConfigError("stages", "expected \"all\" or a list of stage names");
  }

  if (root.contains("spectral")) {
    const json& sp = require_object(root, "spectral", "spectral");
    reject_unknown_keys(sp, "spectral", {"closeness_threshold"});
    if (sp.contains("closeness_threshold")) {
      cfg.closeness_threshold =
          get_number(sp, "closeness_threshold", "spectral.closeness_threshold", 0.0);
    }
  }

  if (root.contains("resilience")) {
    const json& rs = require_object(root, "resilience", "resilience");
    reject_unknown_keys(rs, "resilience", {"strategies", "seeds", "base_seed", "record_every"});
    if (rs.contains("strategies")) {
      const auto& list = rs.at("strategies");
      if (!list.is_array() || list.empty()) {
        throw ConfigError("resilience.strategies", "expected a non-empty list");
      }
      cfg.attack = cfg.error = false;
      for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string path = "resilience.strategies[" + std::to_string(i) + "]";
        if (!list[i].is_string()) throw ConfigError(path, "expected \"attack\" or \"error\"");
        const auto name = list[i].get<std::string>();
        if (name == "attack") {
          cfg.attack = true;
        } else if (name == "error") {
          cfg.error = true;
        } else {
          throw ConfigError(path, "expected \"attack\" or \"error\"");
        }
      }
    }
    cfg.error_seeds = get_unsigned(rs, "seeds", "resilience.seeds", cfg.error_seeds);
    if (cfg.error_seeds == 0) throw ConfigError("resilience.seeds", "must be >= 1");
    cfg.resilience_seed = get_unsigned(rs, "base_seed", "resilience.base_seed", cfg.resilience_seed);
    cfg.record_every = get_number(rs, "record_every", "resilience.record_every", cfg.record_every);
    if (!(cfg.record_every > 0.0 && cfg.record_every <= 1.0)) {
      throw ConfigError("resilience.record_every", "must lie in (0, 1]");
    }
  }

  if (root.contains("deterministic")) {
    if (!root.at("deterministic").is_boolean()) throw ConfigError("deterministic", "expected a boolean");
    cfg.deterministic = root.at("deterministic").get<bool>();
  }
  return cfg;
}

namespace {

void run_stages(const Graph& g, const PipelineConfig& cfg, AnalysisReport& report) {
  for (Stage stage : kAllStages) {
    if (std::find(cfg.stages.begin(), cfg.stages.end(), stage) == cfg.stages.end()) continue;
    report.provenance.stages.push_back(stage_name(stage));
    try {
      switch (stage) {
        case Stage::kSummary:
          report.summary = summarize(g);
          break;
        case Stage::kCentralities:
          report.nodes = node_statistics(g);
          break;
        case Stage::kFit:
          report.powerlaw = fit_power_law(degree_sequence(g));
          break;
        case Stage::kSpectral:
          report.spectral = spectral_stability(g, cfg.closeness_threshold);
          break;
        case Stage::kResilience: {
          ResilienceSection section;
          section.record_every = cfg.record_every;
          const double half = static_cast<double>(g.node_count()) / 2.0;
          if (cfg.attack) {
            section.attack =
                run_resilience(g, RemovalStrategy::targeted_attack(), cfg.record_every);
            section.attack_half_fraction = section.attack->first_fraction_below(half);
          }
          if (cfg.error) {
            std::vector<std::uint64_t> seeds;
            for (std::size_t i = 0; i < cfg.error_seeds; ++i) {
              seeds.push_back(cfg.resilience_seed + i);
            }
            report.provenance.seeds.insert(report.provenance.seeds.end(), seeds.begin(),
                                           seeds.end());
            section.error = run_error_ensemble(g, seeds, cfg.record_every);
            std::vector<double> fractions;
            for (const auto& m : section.error->members) {
              // A trace that never drops below half counts as the full range.
              fractions.push_back(m.first_fraction_below(half).value_or(1.0));
            }
            section.error_half_fraction_median = median(fractions);
          }
          report.resilience = std::move(section);
          break;
        }
      }
    } catch (const Error& e) {
      report.stage_errors[stage_name(stage)] = e.what();
    }
  }
}

}  // namespace

AnalysisReport run_pipeline(const Graph& g, const PipelineConfig& cfg) {
  AnalysisReport report;
  report.provenance.input = "in-memory graph";
  if (!cfg.deterministic) report.provenance.generated_at = utc_timestamp();
  run_stages(g, cfg, report);
  return report;
}

AnalysisReport run_pipeline(const PipelineConfig& cfg) {
  AnalysisReport report;
  if (!cfg.deterministic) report.provenance.generated_at = utc_timestamp();
  Graph g;
  if (cfg.edge_list) {
    auto ingestion = read_edge_list_file(*cfg.edge_list);
    report.provenance.input = "edge_list:" + *cfg.edge_list;
    report.provenance.warnings = ingestion.warnings;
    report.provenance.duplicates_collapsed = ingestion.duplicates_collapsed;
    g = std::move(ingestion.graph);
  } else if (cfg.model == "ba") {
    g = generate_ba(cfg.ba);
    report.provenance.input = "generate:ba(n=" + std::to_string(cfg.ba.n) +
                              ",m=" + std::to_string(cfg.ba.m) +
                              ",m0=" + std::to_string(cfg.ba.m0 == 0 ? cfg.ba.m + 1 : cfg.ba.m0) +
                              ",seed=" + std::to_string(cfg.ba.seed) + ")";
    report.provenance.seeds.push_back(cfg.ba.seed);
  } else if (cfg.model == "er") {
    g = generate_er(cfg.er);
    report.provenance.input = "generate:er(n=" + std::to_string(cfg.er.n) +
                              ",edges=" + std::to_string(cfg.er.m) +
                              ",seed=" + std::to_string(cfg.er.seed) + ")";
    report.provenance.seeds.push_back(cfg.er.seed);
  } else {
    throw ConfigError("input", "no edge list or generator given");
  }
  run_stages(g, cfg, report);
  return report;
}

// CSV ---------------------------------------------------------------------

void write_node_stats_csv(std::ostream& out, const std::vector<NodeStats>& rows) {
  out << "label,degree,clustering,closeness,betweenness,eigenvector\n";
  for (const auto& r : rows) {
    out << r.label << ',' << r.degree << ',' << format_number(r.clustering) << ','
        << (r.closeness ? format_number(*r.closeness) : "") << ','
        << format_number(r.betweenness) << ',' << format_number(r.eigenvector) << '\n';
  }
}

void write_trace_csv(std::ostream& out, const ResilienceTrace& trace) {
  out << "fraction_removed,diameter,lcc_size,components\n";
  for (const auto& r : trace.rows) {
    out << format_number(r.removed_fraction) << ',' << r.diameter << ',' << r.lcc_size << ','
        << r.components << '\n';
  }
}

void write_ensemble_csv(std::ostream& out, const ResilienceEnsemble& ensemble) {
  out << "fraction_removed,diameter,lcc_size,components,diameter_min,diameter_max,"
         "lcc_size_min,lcc_size_max,components_min,components_max\n";
  for (const auto& r : ensemble.rows) {
    out << format_number(r.removed_fraction) << ',' << format_number(r.diameter_median) << ','
        << format_number(r.lcc_median) << ',' << format_number(r.components_median) << ','
        << r.diameter_min << ',' << r.diameter_max << ',' << r.lcc_min << ',' << r.lcc_max << ','
        << r.components_min << ',' << r.components_max << '\n';
  }
}

void write_comparison_csv(std::ostream& out, const DistributionComparison& cmp) {
  std::map<std::size_t, std::pair<std::optional<double>, std::optional<double>>> merged;
  for (const auto& [k, p] : cmp.first) merged[k].first = p;
  for (const auto& [k, p] : cmp.second) merged[k].second = p;
  out << "k,p_observed,p_reference\n";
  for (const auto& [k, ps] : merged) {
    out << k << ',' << (ps.first ? format_number(*ps.first) : "") << ','
        << (ps.second ? format_number(*ps.second) : "") << '\n';
  }
}

void write_trajectory_csv(std::ostream& out, const SyncTrajectory& traj, bool full) {
  const bool with_states = full && !traj.states.empty();
  out << "t,sync_error";
  if (with_states) {
    const auto& first = traj.states.front();
    for (Eigen::Index i = 0; i < first.rows(); ++i) {
      for (Eigen::Index d = 0; d < first.cols(); ++d) out << ",x" << i << '_' << d;
    }
  }
  out << '\n';
  for (std::size_t s = 0; s < traj.times.size(); ++s) {
    out << format_number(traj.times[s]) << ',' << format_number(traj.sync_error[s]);
    if (with_states) {
      const auto& x = traj.states[s];
      for (Eigen::Index i = 0; i < x.rows(); ++i) {
        for (Eigen::Index d = 0; d < x.cols(); ++d) out << ',' << format_number(x(i, d));
      }
    }
    out << '\n';
  }
}

}  // namespace netchor
