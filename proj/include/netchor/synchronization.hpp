#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "netchor/graph.hpp"

namespace netchor {

/// Adjacency matrix with the diagonal replaced by -k_i (the negated graph
/// Laplacian). Every row sums to exactly zero.
Eigen::MatrixXd coupling_matrix(const Graph& g);

/// Largest graph handled by the dense eigensolver.
inline constexpr std::size_t kMaxSpectralNodes = 5000;

struct SpectralReport {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double gap = 0.0;
  bool stable = false;
  /// Eigenvalues within zero_tolerance of 0; equals the number of connected
  /// components.
  std::size_t zero_multiplicity = 0;
  double zero_tolerance = 0.0;
  double closeness_threshold = 0.0;
  /// Full spectrum, descending.
  std::vector<double> eigenvalues;
};

/// 0.1 * max(1, mean degree).
double default_closeness_threshold(const Graph& g);

/// Symmetric eigensolve of the coupling matrix. The synchronized state is
/// reported stable when lambda1 is zero (|lambda1| <= 1e-8 * max_i k_i),
/// lambda2 is negative beyond that tolerance, and lambda1 - lambda2 >=
/// closeness_threshold. Throws InputError for N < 2 or N > kMaxSpectralNodes
/// and NumericalError if the solver fails.
SpectralReport spectral_stability(const Graph& g, std::optional<double> closeness_threshold = {});

/// Built-in single-node dynamics f, applied componentwise.
struct NodeDynamics {
  enum class Kind { kZero, kLinear, kLogistic };
  Kind kind = Kind::kZero;
  /// alpha for linear (f = alpha x), r for logistic (f = r x (1 - x)).
  double parameter = 0.0;

  static NodeDynamics zero() { return {Kind::kZero, 0.0}; }
  static NodeDynamics linear(double alpha) { return {Kind::kLinear, alpha}; }
  static NodeDynamics logistic(double r) { return {Kind::kLogistic, r}; }

  double operator()(double x) const;
  /// "zero", "linear:0.5", "logistic:2"; throws InputError otherwise.
  static NodeDynamics parse(const std::string& spec);
  std::string to_string() const;
};

struct SyncConfig {
  /// Coupling strength c > 0.
  double coupling = 1.0;
  /// Inner coupling matrix (state_dim x state_dim); empty means identity.
  Eigen::MatrixXd inner_coupling;
  NodeDynamics dynamics = NodeDynamics::zero();
  std::size_t state_dim = 1;
  /// Leading components that describe the node itself; the rest describe
  /// its interactions. Informational only; 0 means all intra.
  std::size_t intra_dim = 0;
  double dt = 0.01;
  double t_max = 50.0;
  /// sync_error threshold for synchronized_at.
  double tolerance = 1e-6;
  /// Record every k-th step (the first and last steps are always kept).
  std::size_t record_stride = 1;
  bool keep_states = true;
};

struct SyncTrajectory {
  std::vector<double> times;
  /// max_i || x_i - mean ||_inf at each recorded time.
  std::vector<double> sync_error;
  /// Node states (N x state_dim) at each recorded time, when kept.
  std::vector<Eigen::MatrixXd> states;
  /// First integration step with sync_error < tolerance.
  std::optional<double> synchronized_at;
};

double sync_error(const Eigen::MatrixXd& states);

/// Fixed-step RK4 integration of
///   x_i' = f(x_i) + c * sum_j a_ij Gamma (x_j - x_i).
/// `initial` has one row per node. Throws InputError on invalid config or
/// shape and DivergenceError when a state turns non-finite.
SyncTrajectory simulate(const Graph& g, const SyncConfig& config, const Eigen::MatrixXd& initial);

/// Least-squares slope of -ln(error) against time over the samples whose
/// error lies in [lower, upper]. Throws DegenerateInputError with fewer than
/// three such samples.
double decay_rate(const std::vector<double>& times, const std::vector<double>& errors,
                  double lower, double upper);

}  // namespace netchor
