#include "netchor/synchronization.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "netchor/error.hpp"
#include "netchor/parallel.hpp"

namespace netchor {

Eigen::MatrixXd coupling_matrix(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.node_count());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    a(v, v) = -static_cast<double>(g.degree(v));
    for (NodeId w : g.neighbors_unchecked(v)) a(v, w) = 1.0;
  }
  return a;
}

double default_closeness_threshold(const Graph& g) {
  const double mean_degree =
      g.node_count() == 0 ? 0.0
                          : 2.0 * static_cast<double>(g.edge_count()) /
                                static_cast<double>(g.node_count());
  return 0.1 * std::max(1.0, mean_degree);
}

SpectralReport spectral_stability(const Graph& g, std::optional<double> closeness_threshold) {
  const std::size_t n = g.node_count();
  if (n < 2) throw InputError("spectral analysis needs at least 2 nodes");
  if (n > kMaxSpectralNodes) {
    throw InputError("spectral analysis is limited to " + std::to_string(kMaxSpectralNodes) +
                     " nodes (got " + std::to_string(n) + ")");
  }
  const Eigen::MatrixXd a = coupling_matrix(g);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalError("symmetric eigensolver did not converge");

  SpectralReport report;
  const auto& values = solver.eigenvalues();  // ascending
  report.eigenvalues.assign(values.data(), values.data() + values.size());
  std::reverse(report.eigenvalues.begin(), report.eigenvalues.end());
  report.lambda1 = report.eigenvalues[0];
  report.lambda2 = report.eigenvalues[1];
  report.gap = report.lambda1 - report.lambda2;

  double scale = 1.0;
  for (NodeId v = 0; v < n; ++v) scale = std::max(scale, static_cast<double>(g.degree(v)));
  report.zero_tolerance = 1e-8 * scale;
  report.closeness_threshold = closeness_threshold.value_or(default_closeness_threshold(g));
  report.zero_multiplicity = static_cast<std::size_t>(
      std::count_if(report.eigenvalues.begin(), report.eigenvalues.end(),
                    [&](double x) { return std::abs(x) <= report.zero_tolerance; }));
  report.stable = std::abs(report.lambda1) <= report.zero_tolerance &&
                  report.lambda2 < -report.zero_tolerance &&
                  report.gap >= report.closeness_threshold;
  return report;
}

double NodeDynamics::operator()(double x) const {
  switch (kind) {
    case Kind::kZero:
      return 0.0;
    case Kind::kLinear:
      return parameter * x;
    case Kind::kLogistic:
      return parameter * x * (1.0 - x);
  }
  return 0.0;
}

NodeDynamics NodeDynamics::parse(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  if (name == "zero") {
    if (colon != std::string::npos) throw InputError("dynamics 'zero' takes no parameter");
    return zero();
  }
  if (name != "linear" && name != "logistic") {
    throw InputError("unknown dynamics '" + spec + "' (expected zero, linear:<alpha>, logistic:<r>)");
  }
  if (colon == std::string::npos) throw InputError("dynamics '" + name + "' needs a parameter");
  double value = 0.0;
  std::istringstream in(spec.substr(colon + 1));
  if (!(in >> value) || !in.eof() || !std::isfinite(value)) {
    throw InputError("bad dynamics parameter in '" + spec + "'");
  }
  return name == "linear" ? linear(value) : logistic(value);
}

std::string NodeDynamics::to_string() const {
  std::ostringstream out;
  out.precision(17);
  switch (kind) {
    case Kind::kZero:
      return "zero";
    case Kind::kLinear:
      out << "linear:" << parameter;
      break;
    case Kind::kLogistic:
      out << "logistic:" << parameter;
      break;
  }
  return out.str();
}

double sync_error(const Eigen::MatrixXd& states) {
  if (states.rows() == 0) return 0.0;
  const Eigen::RowVectorXd mean = states.colwise().mean();
  double worst = 0.0;
  for (Eigen::Index i = 0; i < states.rows(); ++i) {
    worst = std::max(worst, (states.row(i) - mean).cwiseAbs().maxCoeff());
  }
  return worst;
}

namespace {

// Node blocks below this many state entries are evaluated on one thread;
// spawning workers per RK4 stage costs more than it saves.
constexpr Eigen::Index kParallelThreshold = 1 << 14;
constexpr std::size_t kNodeBlock = 256;

class CoupledSystem {
 public:
  CoupledSystem(const Graph& g, const SyncConfig& config)
      : g_(g), config_(config), identity_gamma_(config.inner_coupling.size() == 0) {}

  // out = F(x)
  void derivative(const Eigen::MatrixXd& x, Eigen::MatrixXd& out) const {
    const std::size_t n = g_.node_count();
    auto eval_block = [&](std::size_t b) {
      const std::size_t end = std::min(n, (b + 1) * kNodeBlock);
      Eigen::RowVectorXd diffusion(x.cols());
      for (auto i = static_cast<NodeId>(b * kNodeBlock); i < end; ++i) {
        diffusion.setZero();
        for (NodeId j : g_.neighbors_unchecked(i)) diffusion += x.row(j) - x.row(i);
        if (!identity_gamma_) diffusion = diffusion * config_.inner_coupling.transpose();
        for (Eigen::Index d = 0; d < x.cols(); ++d) {
          out(i, d) = config_.dynamics(x(i, d)) + config_.coupling * diffusion(d);
        }
      }
    };
    const std::size_t blocks = (n + kNodeBlock - 1) / kNodeBlock;
    if (x.size() >= kParallelThreshold) {
      parallel_blocks(blocks, eval_block);
    } else {
      for (std::size_t b = 0; b < blocks; ++b) eval_block(b);
    }
  }

 private:
  const Graph& g_;
  const SyncConfig& config_;
  bool identity_gamma_;
};

void validate(const Graph& g, const SyncConfig& c, const Eigen::MatrixXd& initial) {
  if (!(c.dt > 0.0)) throw InputError("dt must be > 0");
  if (!(c.t_max > c.dt)) throw InputError("t_max must exceed dt");
  if (!(c.coupling > 0.0)) throw InputError("coupling strength must be > 0");
  if (c.state_dim < 1) throw InputError("state_dim must be >= 1");
  if (c.intra_dim > c.state_dim) throw InputError("intra_dim cannot exceed state_dim");
  if (c.record_stride < 1) throw InputError("record_stride must be >= 1");
  if (!(c.tolerance > 0.0)) throw InputError("tolerance must be > 0");
  const auto dim = static_cast<Eigen::Index>(c.state_dim);
  if (c.inner_coupling.size() != 0 &&
      (c.inner_coupling.rows() != dim || c.inner_coupling.cols() != dim)) {
    throw InputError("inner coupling must be state_dim x state_dim");
  }
  if (initial.rows() != static_cast<Eigen::Index>(g.node_count()) || initial.cols() != dim) {
    throw InputError("initial state must have one row of length state_dim per node");
  }
  if (!initial.allFinite()) throw InputError("initial state contains non-finite values");
}

}  // namespace

SyncTrajectory simulate(const Graph& g, const SyncConfig& config, const Eigen::MatrixXd& initial) {
  validate(g, config, initial);
  const auto steps = static_cast<std::size_t>(std::llround(config.t_max / config.dt));
  const double h = config.dt;
  CoupledSystem system(g, config);

  SyncTrajectory traj;
  Eigen::MatrixXd x = initial;
  Eigen::MatrixXd k1(x.rows(), x.cols()), k2(x.rows(), x.cols()), k3(x.rows(), x.cols()),
      k4(x.rows(), x.cols()), probe(x.rows(), x.cols());

  auto record = [&](std::size_t step, double err) {
    traj.times.push_back(static_cast<double>(step) * h);
    traj.sync_error.push_back(err);
    if (config.keep_states) traj.states.push_back(x);
  };

  double err = sync_error(x);
  if (err < config.tolerance) traj.synchronized_at = 0.0;
  record(0, err);
  for (std::size_t step = 1; step <= steps; ++step) {
    system.derivative(x, k1);
    probe = x + (0.5 * h) * k1;
    system.derivative(probe, k2);
    probe = x + (0.5 * h) * k2;
    system.derivative(probe, k3);
    probe = x + h * k3;
    system.derivative(probe, k4);
    x += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

    const double t = static_cast<double>(step) * h;
    if (!x.allFinite()) throw DivergenceError(t);
    err = sync_error(x);
    if (!traj.synchronized_at && err < config.tolerance) traj.synchronized_at = t;
    if (step % config.record_stride == 0 || step == steps) record(step, err);
  }
  return traj;
}

double decay_rate(const std::vector<double>& times, const std::vector<double>& errors,
                  double lower, double upper) {
  double sum_t = 0.0, sum_y = 0.0, sum_tt = 0.0, sum_ty = 0.0;
  std::size_t count = 0;
  for (std::size_t i = 0; i < times.size() && i < errors.size(); ++i) {
    if (errors[i] < lower || errors[i] > upper) continue;
    const double y = std::log(errors[i]);
    sum_t += times[i];
    sum_y += y;
    sum_tt += times[i] * times[i];
    sum_ty += times[i] * y;
    ++count;
  }
  if (count < 3) throw DegenerateInputError("fewer than 3 samples in the decay window");
  const double c = static_cast<double>(count);
  const double slope = (c * sum_ty - sum_t * sum_y) / (c * sum_tt - sum_t * sum_t);
  return -slope;
}

}  // namespace netchor
