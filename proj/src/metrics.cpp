#include "netchor/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "netchor/error.hpp"
#include "netchor/parallel.hpp"

namespace netchor {

namespace {

// Sources per parallel work unit. Fixed so partial sums are grouped the same
// way for every worker count.
constexpr std::size_t kSourceBlock = 32;

std::size_t block_count(std::size_t n) { return (n + kSourceBlock - 1) / kSourceBlock; }

// BFS that reuses caller buffers. Returns visit order.
void bfs(const Graph& g, NodeId source, std::vector<std::size_t>& dist,
         std::vector<NodeId>& order) {
  std::fill(dist.begin(), dist.end(), kUnreachable);
  order.clear();
  dist[source] = 0;
  order.push_back(source);
  for (std::size_t head = 0; head < order.size(); ++head) {
    const NodeId v = order[head];
    for (NodeId w : g.neighbors_unchecked(v)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[v] + 1;
        order.push_back(w);
      }
    }
  }
}

struct DistanceTotals {
  std::size_t pair_distance_sum = 0;  // over ordered pairs
  std::size_t reachable_ordered_pairs = 0;
  std::size_t max_distance = 0;
};

DistanceTotals all_pairs_totals(const Graph& g, const std::vector<bool>* restrict_to) {
  const std::size_t n = g.node_count();
  std::vector<DistanceTotals> partial(block_count(n));
  parallel_blocks(partial.size(), [&](std::size_t b) {
    std::vector<std::size_t> dist(n);
    std::vector<NodeId> order;
    order.reserve(n);
    auto& out = partial[b];
    const std::size_t end = std::min(n, (b + 1) * kSourceBlock);
    for (auto s = static_cast<NodeId>(b * kSourceBlock); s < end; ++s) {
      if (restrict_to && !(*restrict_to)[s]) continue;
      bfs(g, s, dist, order);
      for (NodeId v : order) {
        out.pair_distance_sum += dist[v];
        out.max_distance = std::max(out.max_distance, dist[v]);
      }
      out.reachable_ordered_pairs += order.size() - 1;
    }
  });
  DistanceTotals total;
  for (const auto& p : partial) {
    total.pair_distance_sum += p.pair_distance_sum;
    total.reachable_ordered_pairs += p.reachable_ordered_pairs;
    total.max_distance = std::max(total.max_distance, p.max_distance);
  }
  return total;
}

std::vector<bool> largest_component_mask(const Graph& g, const ComponentPartition& parts) {
  const std::size_t lcc = parts.largest_component();
  std::vector<bool> mask(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) mask[v] = parts.component_of[v] == lcc;
  return mask;
}

}  // namespace

std::vector<std::size_t> shortest_path_lengths(const Graph& g, NodeId source) {
  if (source >= g.node_count()) {
    throw InputError("source id " + std::to_string(source) + " out of range");
  }
  std::vector<std::size_t> dist(g.node_count());
  std::vector<NodeId> order;
  bfs(g, source, dist, order);
  return dist;
}

PathLengthStats average_path_length(const Graph& g) {
  const std::size_t n = g.node_count();
  if (n < 2) throw InputError("average path length needs at least 2 nodes");
  const auto totals = all_pairs_totals(g, nullptr);
  if (totals.reachable_ordered_pairs == 0) {
    throw DegenerateInputError("no pair of nodes is connected");
  }
  PathLengthStats stats;
  stats.reachable_pairs = totals.reachable_ordered_pairs / 2;
  stats.average = static_cast<double>(totals.pair_distance_sum) /
                  static_cast<double>(totals.reachable_ordered_pairs);
  const double all_pairs = static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
  stats.unreachable_fraction = 1.0 - static_cast<double>(stats.reachable_pairs) / all_pairs;
  return stats;
}

std::size_t diameter(const Graph& g) {
  if (g.node_count() < 2) throw InputError("diameter needs at least 2 nodes");
  const auto parts = connected_components(g);
  if (parts.largest_size() < 2) {
    throw DegenerateInputError("largest component has a single node");
  }
  const auto mask = largest_component_mask(g, parts);
  return all_pairs_totals(g, &mask).max_distance;
}

double local_clustering(const Graph& g, NodeId node) {
  const auto nbrs = g.neighbors(node);
  const std::size_t k = nbrs.size();
  if (k < 2) return 0.0;
  std::size_t links = 0;
  for (std::size_t a = 0; a < k; ++a) {
    const auto other = g.neighbors_unchecked(nbrs[a]);
    // Count neighbors of nbrs[a] that are also neighbors of `node` and
    // greater than nbrs[a], so each link is seen once.
    auto it = std::upper_bound(other.begin(), other.end(), nbrs[a]);
    auto jt = nbrs.begin() + static_cast<std::ptrdiff_t>(a) + 1;
    while (it != other.end() && jt != nbrs.end()) {
      if (*it < *jt) {
        ++it;
      } else if (*jt < *it) {
        ++jt;
      } else {
        ++links;
        ++it;
        ++jt;
      }
    }
  }
  return 2.0 * static_cast<double>(links) / (static_cast<double>(k) * static_cast<double>(k - 1));
}

double global_clustering(const Graph& g) {
  if (g.node_count() == 0) throw InputError("clustering of an empty graph is undefined");
  double sum = 0.0;
  for (NodeId v = 0; v < g.node_count(); ++v) sum += local_clustering(g, v);
  return sum / static_cast<double>(g.node_count());
}

std::map<std::size_t, double> degree_distribution(const Graph& g) {
  if (g.node_count() == 0) throw InputError("degree distribution of an empty graph is undefined");
  std::map<std::size_t, std::size_t> counts;
  for (NodeId v = 0; v < g.node_count(); ++v) ++counts[g.degree(v)];
  std::map<std::size_t, double> dist;
  for (const auto& [k, c] : counts) {
    dist[k] = static_cast<double>(c) / static_cast<double>(g.node_count());
  }
  return dist;
}

Closeness closeness_centrality(const Graph& g, NodeId node) {
  const auto dist = shortest_path_lengths(g, node);
  std::size_t sum = 0;
  std::size_t reached = 0;
  for (std::size_t d : dist) {
    if (d != kUnreachable) {
      sum += d;
      ++reached;
    }
  }
  if (sum == 0) throw DegenerateInputError("closeness of isolated node " + std::to_string(node));
  return {1.0 / static_cast<double>(sum), reached < g.node_count()};
}

std::vector<double> betweenness_centrality(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<std::vector<double>> partial(block_count(n));
  parallel_blocks(partial.size(), [&](std::size_t b) {
    auto& acc = partial[b];
    acc.assign(n, 0.0);
    std::vector<std::size_t> dist(n);
    std::vector<NodeId> order;
    order.reserve(n);
    std::vector<double> paths(n);
    std::vector<double> dependency(n);
    const std::size_t end = std::min(n, (b + 1) * kSourceBlock);
    for (auto s = static_cast<NodeId>(b * kSourceBlock); s < end; ++s) {
      bfs(g, s, dist, order);
      for (NodeId v : order) {
        paths[v] = 0.0;
        dependency[v] = 0.0;
      }
      paths[s] = 1.0;
      for (NodeId v : order) {
        for (NodeId w : g.neighbors_unchecked(v)) {
          if (dist[w] == dist[v] + 1) paths[w] += paths[v];
        }
      }
      // Predecessors of w are the neighbors one hop closer to s.
      for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const NodeId w = *it;
        for (NodeId v : g.neighbors_unchecked(w)) {
          if (dist[v] + 1 == dist[w]) {
            dependency[v] += paths[v] / paths[w] * (1.0 + dependency[w]);
          }
        }
        if (w != s) acc[w] += dependency[w];
      }
    }
  });
  std::vector<double> score(n, 0.0);
  for (const auto& acc : partial) {
    for (std::size_t v = 0; v < n; ++v) score[v] += acc[v];
  }
  for (double& x : score) x /= 2.0;
  return score;
}

EigenvectorResult eigenvector_centrality(const Graph& g, const EigenvectorOptions& options) {
  if (g.edge_count() == 0) throw DegenerateInputError("eigenvector centrality needs an edge");
  const std::size_t n = g.node_count();
  const auto mask = largest_component_mask(g, connected_components(g));

  std::vector<double> x(n, 0.0);
  for (std::size_t v = 0; v < n; ++v) x[v] = mask[v] ? 1.0 : 0.0;
  std::vector<double> y(n);

  EigenvectorResult result;
  bool converged = false;
  for (std::size_t iter = 1; iter <= options.max_iterations; ++iter) {
    double peak = 0.0;
    for (NodeId v = 0; v < n; ++v) {
      double sum = x[v];
      for (NodeId w : g.neighbors_unchecked(v)) sum += x[w];
      y[v] = sum;
      peak = std::max(peak, sum);
    }
    double change = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
      y[v] /= peak;
      change = std::max(change, std::abs(y[v] - x[v]));
    }
    x.swap(y);
    result.iterations = iter;
    if (change < options.tolerance) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    throw ConvergenceError("eigenvector centrality power iteration", options.max_iterations);
  }

  double numerator = 0.0;
  double denominator = 0.0;
  for (NodeId v = 0; v < n; ++v) {
    double ax = 0.0;
    for (NodeId w : g.neighbors_unchecked(v)) ax += x[w];
    numerator += x[v] * ax;
    denominator += x[v] * x[v];
  }
  result.eigenvalue = numerator / denominator;
  result.scores = std::move(x);
  return result;
}

std::vector<NodeStats> node_statistics(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<NodeStats> rows(n);
  const auto between = betweenness_centrality(g);
  std::vector<double> eigen(n, 0.0);
  if (g.edge_count() > 0) eigen = eigenvector_centrality(g).scores;

  std::vector<std::optional<double>> close(n);
  parallel_blocks(block_count(n), [&](std::size_t b) {
    std::vector<std::size_t> dist(n);
    std::vector<NodeId> order;
    const std::size_t end = std::min(n, (b + 1) * kSourceBlock);
    for (auto v = static_cast<NodeId>(b * kSourceBlock); v < end; ++v) {
      bfs(g, v, dist, order);
      std::size_t sum = 0;
      for (NodeId w : order) sum += dist[w];
      if (sum > 0) close[v] = 1.0 / static_cast<double>(sum);
    }
  });

  for (NodeId v = 0; v < n; ++v) {
    auto& row = rows[v];
    row.node = v;
    row.label = g.label(v);
    row.degree = g.degree(v);
    row.clustering = local_clustering(g, v);
    row.closeness = close[v];
    row.betweenness = between[v];
    row.eigenvector = eigen[v];
  }
  return rows;
}

GraphSummary summarize(const Graph& g) {
  GraphSummary s;
  s.nodes = g.node_count();
  s.edges = g.edge_count();
  if (s.nodes == 0) return s;
  const auto parts = connected_components(g);
  s.components = parts.count();
  s.largest_component = parts.largest_size();
  s.clustering = global_clustering(g);
  s.degree_distribution = degree_distribution(g);
  if (s.nodes >= 2 && s.edges > 0) {
    const auto apl = average_path_length(g);
    s.average_path_length = apl.average;
    s.unreachable_pair_fraction = apl.unreachable_fraction;
    s.diameter = diameter(g);
  } else if (s.nodes >= 2) {
    s.unreachable_pair_fraction = 1.0;
  }
  return s;
}

}  // namespace netchor
