#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "netchor/graph.hpp"

namespace netchor {

/// Random failures (seeded) or adaptive targeted attack on the current
/// highest-degree node, ties broken by smallest original id.
struct RemovalStrategy {
  enum class Kind { kRandomError, kTargetedAttack };
  Kind kind = Kind::kRandomError;
  std::uint64_t seed = 0;

  static RemovalStrategy random_error(std::uint64_t seed) { return {Kind::kRandomError, seed}; }
  static RemovalStrategy targeted_attack() { return {Kind::kTargetedAttack, 0}; }
};

struct TraceRow {
  std::size_t removed = 0;
  double removed_fraction = 0.0;
  /// Diameter of the largest remaining component (0 for a single node).
  std::size_t diameter = 0;
  std::size_t lcc_size = 0;
  std::size_t components = 0;
};

struct ResilienceTrace {
  std::size_t initial_nodes = 0;
  /// Rows at the requested granularity, plus the first and last state.
  std::vector<TraceRow> rows;
  /// Largest-component size after each single removal; index r holds the
  /// size after r removals.
  std::vector<std::size_t> lcc_by_step;
  /// Node removed at each step, in original ids.
  std::vector<NodeId> removal_order;

  /// Smallest removed fraction at which the largest component is strictly
  /// below `threshold_nodes`, or nullopt if it never is.
  std::optional<double> first_fraction_below(double threshold_nodes) const;
};

/// Removes one node per step until at most one node remains. `record_every`
/// in (0, 1] is the removed-fraction spacing of recorded rows.
ResilienceTrace run_resilience(const Graph& g, const RemovalStrategy& strategy,
                               double record_every);

struct EnsembleRow {
  double removed_fraction = 0.0;
  double diameter_median = 0.0;
  std::size_t diameter_min = 0;
  std::size_t diameter_max = 0;
  double lcc_median = 0.0;
  std::size_t lcc_min = 0;
  std::size_t lcc_max = 0;
  double components_median = 0.0;
  std::size_t components_min = 0;
  std::size_t components_max = 0;
};

struct ResilienceEnsemble {
  std::vector<std::uint64_t> seeds;
  /// Members ordered as `seeds`.
  std::vector<ResilienceTrace> members;
  std::vector<EnsembleRow> rows;
};

/// Random-error traces for each seed, run concurrently and merged in seed
/// order into per-row medians and min/max envelopes.
ResilienceEnsemble run_error_ensemble(const Graph& g, const std::vector<std::uint64_t>& seeds,
                                      double record_every);

double median(std::vector<double> values);

}  // namespace netchor
