#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "netchor/graph.hpp"

namespace netchor {

inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

/// Hop distances from `source`; kUnreachable marks other components.
std::vector<std::size_t> shortest_path_lengths(const Graph& g, NodeId source);

struct PathLengthStats {
  /// Mean distance over unordered pairs that are connected.
  double average = 0.0;
  std::size_t reachable_pairs = 0;
  /// Share of all unordered pairs with no connecting path.
  double unreachable_fraction = 0.0;
};

/// Requires >= 2 nodes (InputError) and at least one edge
/// (DegenerateInputError).
PathLengthStats average_path_length(const Graph& g);

/// Longest finite distance inside the largest connected component. Throws
/// DegenerateInputError when that component is a single node.
std::size_t diameter(const Graph& g);

/// 2 E_i / (k_i (k_i - 1)); 0 when k_i < 2.
double local_clustering(const Graph& g, NodeId node);
/// Mean of the local coefficients over all nodes.
double global_clustering(const Graph& g);

/// k -> fraction of nodes with degree k. Only degrees that occur are present.
std::map<std::size_t, double> degree_distribution(const Graph& g);

struct Closeness {
  /// 1 / sum of distances to every reachable node.
  double value = 0.0;
  /// True when the graph is disconnected and the sum only covers the node's
  /// own component.
  bool component_only = false;
};

/// Throws DegenerateInputError for an isolated node.
Closeness closeness_centrality(const Graph& g, NodeId node);

/// Unnormalized shortest-path betweenness, each unordered pair counted once
/// (Brandes accumulation).
std::vector<double> betweenness_centrality(const Graph& g);

struct EigenvectorOptions {
  double tolerance = 1e-10;
  std::size_t max_iterations = 100000;
};

struct EigenvectorResult {
  /// Scores scaled so the maximum is 1. Nodes outside the largest component
  /// score 0.
  std::vector<double> scores;
  /// Leading adjacency eigenvalue of the largest component.
  double eigenvalue = 0.0;
  std::size_t iterations = 0;
};

/// Principal adjacency eigenvector of the largest component by power
/// iteration on A + I (same eigenvectors as A; the shift keeps bipartite
/// graphs from oscillating). Throws DegenerateInputError on an edgeless graph
/// and ConvergenceError when the iteration cap is hit.
EigenvectorResult eigenvector_centrality(const Graph& g, const EigenvectorOptions& options = {});

struct NodeStats {
  NodeId node = 0;
  std::string label;
  std::size_t degree = 0;
  double clustering = 0.0;
  /// Absent for isolated nodes.
  std::optional<double> closeness;
  double betweenness = 0.0;
  double eigenvector = 0.0;
};

/// One row per node; eigenvector scores are all 0 when the graph has no edges.
std::vector<NodeStats> node_statistics(const Graph& g);

struct GraphSummary {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::optional<double> average_path_length;
  double unreachable_pair_fraction = 0.0;
  std::optional<std::size_t> diameter;
  double clustering = 0.0;
  std::size_t components = 0;
  std::size_t largest_component = 0;
  std::map<std::size_t, double> degree_distribution;
};

/// Path-based fields are left empty where they are undefined (fewer than two
/// nodes, no edges).
GraphSummary summarize(const Graph& g);

}  // namespace netchor
