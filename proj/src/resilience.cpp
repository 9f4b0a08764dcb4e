#include "netchor/resilience.hpp"

#include <algorithm>
#include <cmath>

#include "netchor/error.hpp"
#include "netchor/parallel.hpp"
#include "netchor/rng.hpp"

namespace netchor {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// Graph with a removal mask; degrees track live neighbors only.
class MaskedGraph {
 public:
  explicit MaskedGraph(const Graph& g)
      : g_(g), alive_(g.node_count(), true), degree_(g.node_count()), remaining_(g.node_count()) {
    for (NodeId v = 0; v < g.node_count(); ++v) degree_[v] = g.degree(v);
  }

  std::size_t remaining() const { return remaining_; }
  bool alive(NodeId v) const { return alive_[v]; }

  void remove(NodeId v) {
    alive_[v] = false;
    --remaining_;
    for (NodeId w : g_.neighbors_unchecked(v)) {
      if (alive_[w]) --degree_[w];
    }
  }

  NodeId highest_degree() const {
    NodeId best = 0;
    std::size_t best_degree = 0;
    bool found = false;
    for (NodeId v = 0; v < alive_.size(); ++v) {
      if (alive_[v] && (!found || degree_[v] > best_degree)) {
        best = v;
        best_degree = degree_[v];
        found = true;
      }
    }
    return best;
  }

  struct Components {
    std::size_t count = 0;
    std::size_t largest = 0;
    std::size_t largest_id = kNone;
  };

  // Labels live nodes with their component number in `component_`.
  Components components() {
    component_.assign(alive_.size(), kNone);
    Components c;
    for (NodeId start = 0; start < alive_.size(); ++start) {
      if (!alive_[start] || component_[start] != kNone) continue;
      queue_.clear();
      queue_.push_back(start);
      component_[start] = c.count;
      for (std::size_t head = 0; head < queue_.size(); ++head) {
        for (NodeId w : g_.neighbors_unchecked(queue_[head])) {
          if (alive_[w] && component_[w] == kNone) {
            component_[w] = c.count;
            queue_.push_back(w);
          }
        }
      }
      if (queue_.size() > c.largest) {
        c.largest = queue_.size();
        c.largest_id = c.count;
      }
      ++c.count;
    }
    return c;
  }

  // Requires a preceding components() call.
  std::size_t component_diameter(std::size_t component) {
    std::vector<std::size_t> dist(alive_.size(), kNone);
    std::size_t best = 0;
    for (NodeId s = 0; s < alive_.size(); ++s) {
      if (!alive_[s] || component_[s] != component) continue;
      std::fill(dist.begin(), dist.end(), kNone);
      queue_.clear();
      queue_.push_back(s);
      dist[s] = 0;
      for (std::size_t head = 0; head < queue_.size(); ++head) {
        const NodeId v = queue_[head];
        best = std::max(best, dist[v]);
        for (NodeId w : g_.neighbors_unchecked(v)) {
          if (alive_[w] && dist[w] == kNone) {
            dist[w] = dist[v] + 1;
            queue_.push_back(w);
          }
        }
      }
    }
    return best;
  }

 private:
  const Graph& g_;
  std::vector<bool> alive_;
  std::vector<std::size_t> degree_;
  std::vector<std::size_t> component_;
  std::vector<NodeId> queue_;
  std::size_t remaining_;
};

bool is_recorded(std::size_t removed, double step_nodes) {
  if (removed == 0) return true;
  constexpr double kSlack = 1e-9;
  const auto bucket = [&](std::size_t r) {
    return std::floor(static_cast<double>(r) / step_nodes + kSlack);
  };
  return bucket(removed) > bucket(removed - 1);
}

}  // namespace

std::optional<double> ResilienceTrace::first_fraction_below(double threshold_nodes) const {
  for (std::size_t r = 0; r < lcc_by_step.size(); ++r) {
    if (static_cast<double>(lcc_by_step[r]) < threshold_nodes) {
      return static_cast<double>(r) / static_cast<double>(initial_nodes);
    }
  }
  return std::nullopt;
}

ResilienceTrace run_resilience(const Graph& g, const RemovalStrategy& strategy,
                               double record_every) {
  const std::size_t n = g.node_count();
  if (n < 2) throw InputError("resilience simulation needs at least 2 nodes");
  if (!(record_every > 0.0 && record_every <= 1.0)) {
    throw InputError("record_every must lie in (0, 1]");
  }

  std::vector<NodeId> random_order;
  if (strategy.kind == RemovalStrategy::Kind::kRandomError) {
    random_order.resize(n);
    for (NodeId v = 0; v < n; ++v) random_order[v] = v;
    Rng rng(strategy.seed);
    for (std::size_t i = n - 1; i > 0; --i) {
      std::swap(random_order[i], random_order[rng.uniform_index(i + 1)]);
    }
  }

  ResilienceTrace trace;
  trace.initial_nodes = n;
  MaskedGraph masked(g);
  const double step_nodes = record_every * static_cast<double>(n);

  for (std::size_t removed = 0;; ++removed) {
    const auto parts = masked.components();
    trace.lcc_by_step.push_back(parts.largest);
    const bool last = masked.remaining() <= 1;
    if (last || is_recorded(removed, step_nodes)) {
      TraceRow row;
      row.removed = removed;
      row.removed_fraction = static_cast<double>(removed) / static_cast<double>(n);
      row.lcc_size = parts.largest;
      row.components = parts.count;
      row.diameter = parts.largest > 1 ? masked.component_diameter(parts.largest_id) : 0;
      trace.rows.push_back(row);
    }
    if (last) break;

    const NodeId victim = strategy.kind == RemovalStrategy::Kind::kTargetedAttack
                              ? masked.highest_degree()
                              : random_order[removed];
    masked.remove(victim);
    trace.removal_order.push_back(victim);
  }
  return trace;
}

double median(std::vector<double> values) {
  if (values.empty()) throw InputError("median of an empty set");
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 == 1 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

ResilienceEnsemble run_error_ensemble(const Graph& g, const std::vector<std::uint64_t>& seeds,
                                      double record_every) {
  if (seeds.empty()) throw InputError("ensemble needs at least one seed");
  ResilienceEnsemble ensemble;
  ensemble.seeds = seeds;
  ensemble.members.resize(seeds.size());
  parallel_blocks(seeds.size(), [&](std::size_t i) {
    ensemble.members[i] = run_resilience(g, RemovalStrategy::random_error(seeds[i]), record_every);
  });

  // Every member shares the same removal counts, so rows align by index.
  const std::size_t rows = ensemble.members.front().rows.size();
  for (std::size_t r = 0; r < rows; ++r) {
    std::vector<double> diam;
    std::vector<double> lcc;
    std::vector<double> comps;
    for (const auto& m : ensemble.members) {
      diam.push_back(static_cast<double>(m.rows[r].diameter));
      lcc.push_back(static_cast<double>(m.rows[r].lcc_size));
      comps.push_back(static_cast<double>(m.rows[r].components));
    }
    EnsembleRow row;
    row.removed_fraction = ensemble.members.front().rows[r].removed_fraction;
    row.diameter_median = median(diam);
    row.diameter_min = static_cast<std::size_t>(*std::min_element(diam.begin(), diam.end()));
    row.diameter_max = static_cast<std::size_t>(*std::max_element(diam.begin(), diam.end()));
    row.lcc_median = median(lcc);
    row.lcc_min = static_cast<std::size_t>(*std::min_element(lcc.begin(), lcc.end()));
    row.lcc_max = static_cast<std::size_t>(*std::max_element(lcc.begin(), lcc.end()));
    row.components_median = median(comps);
    row.components_min = static_cast<std::size_t>(*std::min_element(comps.begin(), comps.end()));
    row.components_max = static_cast<std::size_t>(*std::max_element(comps.begin(), comps.end()));
    ensemble.rows.push_back(row);
  }
  return ensemble;
}

}  // namespace netchor
