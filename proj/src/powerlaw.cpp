#include "netchor/powerlaw.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "netchor/error.hpp"
#include "netchor/metrics.hpp"
#include "netchor/rng.hpp"

namespace netchor {

double hurwitz_zeta(double s, double q) {
  if (!(s > 1.0) || !(q > 0.0)) throw InputError("hurwitz_zeta requires s > 1 and q > 0");
  // Euler-Maclaurin: sum terms directly until the base reaches kCut, then
  // add the integral tail and Bernoulli corrections there.
  constexpr double kCut = 12.0;
  constexpr std::array<double, 8> kBernoulliOverFactorial = {
      1.0 / 12.0,                     // B2 / 2!
      -1.0 / 720.0,                   // B4 / 4!
      1.0 / 30240.0,                  // B6 / 6!
      -1.0 / 1209600.0,               // B8 / 8!
      1.0 / 47900160.0,               // B10 / 10!
      -691.0 / 1307674368000.0,       // B12 / 12!
      1.0 / 74724249600.0,            // B14 / 14!
      -3617.0 / 10670622842880000.0,  // B16 / 16!
  };
  double sum = 0.0;
  double a = q;
  for (; a < kCut; a += 1.0) sum += std::pow(a, -s);
  const double a_pow = std::pow(a, -s);
  sum += a_pow * a / (s - 1.0) + 0.5 * a_pow;
  double rising = s;  // s (s+1) ... (s + 2k - 2)
  double power = a_pow / a;
  for (std::size_t k = 0; k < kBernoulliOverFactorial.size(); ++k) {
    const double term = kBernoulliOverFactorial[k] * rising * power;
    sum += term;
    if (std::abs(term) < 1e-17 * sum) break;
    rising *= (s + 2.0 * k + 1.0) * (s + 2.0 * k + 2.0);
    power /= a * a;
  }
  return sum;
}

namespace {

struct SortedDegrees {
  std::vector<std::size_t> values;        // ascending, zeros removed
  std::vector<double> suffix_log_sum;     // sum of ln(values[j]) for j >= i
  std::size_t zeros = 0;
};

SortedDegrees prepare(std::span<const std::size_t> degrees) {
  SortedDegrees d;
  d.values.reserve(degrees.size());
  for (std::size_t k : degrees) {
    if (k == 0) {
      ++d.zeros;
    } else {
      d.values.push_back(k);
    }
  }
  std::sort(d.values.begin(), d.values.end());
  d.suffix_log_sum.assign(d.values.size() + 1, 0.0);
  for (std::size_t i = d.values.size(); i-- > 0;) {
    d.suffix_log_sum[i] = d.suffix_log_sum[i + 1] + std::log(static_cast<double>(d.values[i]));
  }
  return d;
}

// Fitted tail CDF at integer k >= k_min; norm = zeta(gamma, k_min).
double fitted_cdf(double gamma, double norm, std::size_t k) {
  return 1.0 - hurwitz_zeta(gamma, static_cast<double>(k + 1)) / norm;
}

// Fit with cutoff k_min, whose first tail element sits at `start`. Returns
// false when the tail is unusable.
bool fit_from(const SortedDegrees& d, std::size_t start, std::size_t k_min, PowerLawFit& out) {
  if (start >= d.values.size()) return false;
  const std::size_t n_tail = d.values.size() - start;
  if (n_tail < 2) return false;
  if (d.values.back() == d.values[start]) return false;  // zero-variance tail

  const double log_sum = d.suffix_log_sum[start] -
                         static_cast<double>(n_tail) * std::log(static_cast<double>(k_min) - 0.5);
  if (!(log_sum > 0.0)) return false;
  const double gamma = 1.0 + static_cast<double>(n_tail) / log_sum;

  // Both CDFs are step functions on the integers and the empirical one only
  // moves at observed values, so the largest gap sits either at an observed
  // value or just before the next one.
  const double norm = hurwitz_zeta(gamma, static_cast<double>(k_min));
  double ks = 0.0;
  for (std::size_t i = start; i < d.values.size();) {
    const std::size_t k = d.values[i];
    std::size_t j = i;
    while (j < d.values.size() && d.values[j] == k) ++j;
    const double empirical = static_cast<double>(j - start) / static_cast<double>(n_tail);
    const double before = static_cast<double>(i - start) / static_cast<double>(n_tail);
    ks = std::max(ks, std::abs(empirical - fitted_cdf(gamma, norm, k)));
    if (k > k_min) {
      ks = std::max(ks, std::abs(before - fitted_cdf(gamma, norm, k - 1)));
    }
    i = j;
  }

  out.gamma = gamma;
  out.k_min = k_min;
  out.ks_stat = ks;
  out.n_tail = n_tail;
  out.zeros_dropped = d.zeros;
  return true;
}

}  // namespace

PowerLawFit fit_power_law(std::span<const std::size_t> degrees) {
  const auto d = prepare(degrees);
  if (d.values.size() < 2) {
    throw FitError("need at least 2 positive entries, got " + std::to_string(d.values.size()));
  }
  std::optional<PowerLawFit> best;
  for (std::size_t i = 0; i < d.values.size();) {
    PowerLawFit candidate;
    if (fit_from(d, i, d.values[i], candidate) && (!best || candidate.ks_stat < best->ks_stat)) {
      best = candidate;
    }
    const std::size_t k = d.values[i];
    while (i < d.values.size() && d.values[i] == k) ++i;
  }
  if (!best) throw FitError("no cutoff leaves a tail with at least 2 distinct values");
  return *best;
}

PowerLawFit fit_power_law_at(std::span<const std::size_t> degrees, std::size_t k_min) {
  if (k_min < 1) throw InputError("k_min must be >= 1");
  const auto d = prepare(degrees);
  const auto start = static_cast<std::size_t>(
      std::lower_bound(d.values.begin(), d.values.end(), k_min) - d.values.begin());
  PowerLawFit fit;
  if (!fit_from(d, start, k_min, fit)) {
    throw FitError("tail at k_min=" + std::to_string(k_min) + " is too small or constant");
  }
  return fit;
}

std::size_t power_law_support_limit(double gamma, std::size_t k_min) {
  if (!(gamma > 1.0) || !std::isfinite(gamma)) throw InputError("gamma must be finite and > 1");
  if (k_min < 1) throw InputError("k_min must be >= 1");
  constexpr double kTailMass = 1e-9;
  const double norm = hurwitz_zeta(gamma, static_cast<double>(k_min));
  auto tail = [&](std::size_t k_max) {
    return hurwitz_zeta(gamma, static_cast<double>(k_max + 1)) / norm;
  };
  if (tail(kMaxSupport) >= kTailMass) {
    throw InputError("gamma=" + std::to_string(gamma) +
                     " puts more than 1e-9 of the mass beyond k=" + std::to_string(kMaxSupport));
  }
  std::size_t lo = k_min;
  std::size_t hi = kMaxSupport;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (tail(mid) < kTailMass) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

std::vector<std::size_t> sample_power_law(double gamma, std::size_t k_min, std::size_t count,
                                          std::uint64_t seed) {
  const std::size_t k_max = power_law_support_limit(gamma, k_min);
  std::vector<double> cdf(k_max - k_min + 1);
  double total = 0.0;
  for (std::size_t k = k_min; k <= k_max; ++k) {
    total += std::pow(static_cast<double>(k), -gamma);
    cdf[k - k_min] = total;
  }
  for (double& c : cdf) c /= total;
  cdf.back() = 1.0;

  Rng rng(seed);
  std::vector<std::size_t> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double u = rng.uniform_unit();
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    out.push_back(k_min + static_cast<std::size_t>(it - cdf.begin()));
  }
  return out;
}

std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> seq(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) seq[v] = g.degree(v);
  return seq;
}

DistributionComparison distribution_comparison(const Graph& observed, const Graph& reference) {
  if (observed.node_count() == 0 || reference.node_count() == 0) {
    throw InputError("distribution comparison needs two non-empty graphs");
  }
  DistributionComparison out;
  for (const auto& point : degree_distribution(observed)) out.first.push_back(point);
  for (const auto& point : degree_distribution(reference)) out.second.push_back(point);
  return out;
}

}  // namespace netchor
