#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "netchor/fixture.hpp"
#include "netchor/generators.hpp"
#include "netchor/graph.hpp"
#include "netchor/metrics.hpp"
#include "netchor/powerlaw.hpp"
#include "netchor/resilience.hpp"
#include "netchor/synchronization.hpp"

namespace netchor {

inline constexpr const char* kToolkitVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;

struct Provenance {
  std::string input;
  std::vector<std::uint64_t> seeds;
  std::string toolkit_version = kToolkitVersion;
  /// UTC timestamp; omitted in deterministic mode.
  std::optional<std::string> generated_at;
  std::vector<std::string> stages;
  std::vector<std::string> warnings;
  std::size_t duplicates_collapsed = 0;
};

struct ResilienceSection {
  double record_every = 0.05;
  std::optional<ResilienceTrace> attack;
  /// Random-error ensemble; member traces are not serialized.
  std::optional<ResilienceEnsemble> error;
  /// Removed fraction at which the largest component first falls below N/2.
  std::optional<double> attack_half_fraction;
  std::optional<double> error_half_fraction_median;
};

struct AnalysisReport {
  int schema_version = kReportSchemaVersion;
  Provenance provenance;
  std::optional<GraphSummary> summary;
  std::optional<std::vector<NodeStats>> nodes;
  std::optional<PowerLawFit> powerlaw;
  std::optional<SpectralReport> spectral;
  std::optional<ResilienceSection> resilience;
  /// Stage name -> error message for stages that failed.
  std::map<std::string, std::string> stage_errors;
};

std::string report_to_json(const AnalysisReport& report);
/// Throws InputError on malformed JSON or a schema mismatch.
AnalysisReport report_from_json(const std::string& text);

/// Node counts agree between the summary and node list.
bool report_is_consistent(const AnalysisReport& report);

// Pipeline ---------------------------------------------------------------

enum class Stage { kSummary, kCentralities, kFit, kSpectral, kResilience };

struct PipelineConfig {
  std::optional<std::string> edge_list;
  /// "ba" or "er"; used when edge_list is absent.
  std::string model;
  BAParams ba;
  ERParams er;
  /// Always executed in the canonical order above.
  std::vector<Stage> stages;
  std::optional<double> closeness_threshold;
  bool attack = true;
  bool error = true;
  std::size_t error_seeds = 10;
  std::uint64_t resilience_seed = 1;
  double record_every = 0.05;
  bool deterministic = false;
};

/// Parses the JSON pipeline configuration. Throws ConfigError naming the
/// offending field.
PipelineConfig parse_pipeline_config(const std::string& json_text);

/// Runs the requested stages over the input graph. A failing stage is
/// recorded in stage_errors and later stages still run.
AnalysisReport run_pipeline(const PipelineConfig& config);
AnalysisReport run_pipeline(const Graph& g, const PipelineConfig& config);

std::string stage_name(Stage s);

// Plot-ready CSV ---------------------------------------------------------

/// label,degree,clustering,closeness,betweenness,eigenvector
void write_node_stats_csv(std::ostream& out, const std::vector<NodeStats>& rows);
/// fraction_removed,diameter,lcc_size,components
void write_trace_csv(std::ostream& out, const ResilienceTrace& trace);
/// Median columns under the single-trace names plus _min/_max envelopes.
void write_ensemble_csv(std::ostream& out, const ResilienceEnsemble& ensemble);
/// k,p_observed,p_reference; empty cell where a graph has no node of degree k.
void write_comparison_csv(std::ostream& out, const DistributionComparison& cmp);
/// t,sync_error and, with `full`, one x<node>_<component> column per state entry.
void write_trajectory_csv(std::ostream& out, const SyncTrajectory& traj, bool full);

std::string fit_to_json(const PowerLawFit& fit);
std::string spectral_to_json(const SpectralReport& report);
std::string validation_to_json(const ValidationReport& report);

}  // namespace netchor
