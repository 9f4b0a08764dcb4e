#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "netchor/graph.hpp"

namespace netchor {

/// Discrete power-law fit of a degree tail, P(k) ~ k^-gamma for k >= k_min.
struct PowerLawFit {
  double gamma = 0.0;
  std::size_t k_min = 0;
  /// Kolmogorov-Smirnov distance between the empirical and fitted tail CDFs.
  double ks_stat = 0.0;
  std::size_t n_tail = 0;
  /// Zero entries removed before fitting.
  std::size_t zeros_dropped = 0;
};

/// Hurwitz zeta sum_{j>=0} (j + q)^-s for s > 1, q > 0.
double hurwitz_zeta(double s, double q);

/// Approximate discrete MLE
///   gamma = 1 + n_tail / sum ln(k_i / (k_min - 1/2))
/// evaluated for every distinct candidate k_min; the candidate with the
/// smallest KS distance wins (ties to the smaller k_min). Candidates whose
/// tail has fewer than two points or a single repeated value are skipped.
/// Throws FitError when no candidate remains.
PowerLawFit fit_power_law(std::span<const std::size_t> degrees);

/// Fit with the cutoff pinned to `k_min`; no scan.
PowerLawFit fit_power_law_at(std::span<const std::size_t> degrees, std::size_t k_min);

/// Upper support bound used by sample_power_law: the smallest k_max whose
/// truncated tail mass, relative to the full distribution, is below 1e-9.
/// Throws InputError when that bound exceeds kMaxSupport.
std::size_t power_law_support_limit(double gamma, std::size_t k_min);
inline constexpr std::size_t kMaxSupport = 4'000'000;

/// i.i.d. draws from the discrete power law on [k_min, k_max] by inverse CDF.
std::vector<std::size_t> sample_power_law(double gamma, std::size_t k_min, std::size_t count,
                                          std::uint64_t seed);

struct DistributionComparison {
  /// (k, P(k)) for each graph; zero-probability bins omitted.
  std::vector<std::pair<std::size_t, double>> first;
  std::vector<std::pair<std::size_t, double>> second;
};

DistributionComparison distribution_comparison(const Graph& observed, const Graph& reference);

std::vector<std::size_t> degree_sequence(const Graph& g);

}  // namespace netchor
