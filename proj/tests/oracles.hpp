// Independent reference implementations used only by the tests. None of these
// share code with the library; they favor obviousness over speed.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "netchor/graph.hpp"

namespace oracle {

using netchor::Edge;
using netchor::Graph;
using netchor::NodeId;

inline constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max() / 4;

// Dense adjacency built from the edge list, independent of Graph's lists.
inline std::vector<std::vector<int>> adjacency(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (const auto& [u, v] : g.edges()) a[u][v] = a[v][u] = 1;
  return a;
}

inline std::vector<std::vector<std::size_t>> floyd_warshall(const Graph& g) {
  const std::size_t n = g.node_count();
  const auto a = adjacency(g);
  std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, kInf));
  for (std::size_t i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (a[i][j]) d[i][j] = 1;
    }
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

namespace detail {

inline void walk(const std::vector<std::vector<int>>& a, std::size_t at, std::size_t target,
                 std::size_t budget, std::vector<std::size_t>& path,
                 std::vector<std::vector<std::size_t>>& out) {
  if (at == target) {
    out.push_back(path);
    return;
  }
  if (budget == 0) return;
  for (std::size_t next = 0; next < a.size(); ++next) {
    if (!a[at][next] || std::find(path.begin(), path.end(), next) != path.end()) continue;
    path.push_back(next);
    walk(a, next, target, budget - 1, path, out);
    path.pop_back();
  }
}

}  // namespace detail

// Every shortest s-t path, listed explicitly by depth-limited search.
inline std::vector<std::vector<std::size_t>> all_shortest_paths(
    const std::vector<std::vector<int>>& a, std::size_t s, std::size_t t, std::size_t length) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> path{s};
  detail::walk(a, s, t, length, path, out);
  std::erase_if(out, [&](const auto& p) { return p.size() != length + 1; });
  return out;
}

// Betweenness by enumerating every shortest path of every unordered pair.
inline std::vector<double> brute_betweenness(const Graph& g) {
  const std::size_t n = g.node_count();
  const auto a = adjacency(g);
  const auto d = floyd_warshall(g);
  std::vector<double> score(n, 0.0);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = s + 1; t < n; ++t) {
      if (d[s][t] >= kInf) continue;
      const auto paths = all_shortest_paths(a, s, t, d[s][t]);
      for (std::size_t v = 0; v < n; ++v) {
        if (v == s || v == t) continue;
        std::size_t through = 0;
        for (const auto& p : paths) {
          if (std::find(p.begin(), p.end(), v) != p.end()) ++through;
        }
        score[v] += static_cast<double>(through) / static_cast<double>(paths.size());
      }
    }
  }
  return score;
}

// Cyclic Jacobi eigenvalue iteration for a dense symmetric matrix. Returns
// the eigenvalues sorted descending.
inline std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> a) {
  const std::size_t n = a.size();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
    if (off < 1e-30) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p];
          const double akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k];
          const double aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a[i][i];
  std::sort(eig.begin(), eig.end(), std::greater<>());
  return eig;
}

// Negated Laplacian assembled from the edge list.
inline std::vector<std::vector<double>> negated_laplacian(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
  for (const auto& [u, v] : g.edges()) {
    a[u][v] = a[v][u] = 1.0;
    a[u][u] -= 1.0;
    a[v][v] -= 1.0;
  }
  return a;
}

// Test-only G(n, p) generator with its own engine.
inline Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v)
      if (unit(engine) < p) edges.emplace_back(u, v);
  return Graph(n, edges);
}

inline bool connected(const Graph& g) {
  const auto d = floyd_warshall(g);
  for (const auto& row : d)
    for (std::size_t x : row)
      if (x >= kInf) return false;
  return true;
}

inline Graph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

inline Graph path(std::size_t n) {
  std::vector<Edge> edges;
  for (NodeId u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
  return Graph(n, edges);
}

inline Graph cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (NodeId u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
  edges.emplace_back(0, static_cast<NodeId>(n - 1));
  return Graph(n, edges);
}

// Star K_{1,leaves} with the center at id 0.
inline Graph star(std::size_t leaves) {
  std::vector<Edge> edges;
  for (NodeId v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph(leaves + 1, edges);
}

// Disjoint union of the given graphs, ids shifted in order.
inline Graph disjoint_union(const std::vector<Graph>& parts) {
  std::vector<Edge> edges;
  NodeId offset = 0;
  for (const auto& g : parts) {
    for (const auto& [u, v] : g.edges()) edges.emplace_back(u + offset, v + offset);
    offset += static_cast<NodeId>(g.node_count());
  }
  return Graph(offset, edges);
}

// Relabels node v as perm[v].
inline Graph permuted(const Graph& g, const std::vector<NodeId>& perm) {
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph(g.node_count(), edges);
}

// Two-node consensus with x0 = (1, 0): each state relaxes to 1/2 and the
// deviation from the mean is 0.5 e^{-2 c t}.
inline double p2_sync_error(double c, double t) { return 0.5 * std::exp(-2.0 * c * t); }

// E[ln k] for the discrete power law k^-gamma on [k_min, k_max], by direct
// summation in long double.
inline double power_law_mean_log(double gamma, std::size_t k_min, std::size_t k_max) {
  long double z = 0.0L;
  long double s = 0.0L;
  for (std::size_t k = k_max; k >= k_min; --k) {
    const long double w = std::pow(static_cast<long double>(k), -static_cast<long double>(gamma));
    z += w;
    s += w * std::log(static_cast<long double>(k));
    if (k == 0) break;
  }
  return static_cast<double>(s / z);
}

inline double power_law_var_log(double gamma, std::size_t k_min, std::size_t k_max) {
  long double z = 0.0L;
  long double s = 0.0L;
  long double s2 = 0.0L;
  for (std::size_t k = k_max; k >= k_min; --k) {
    const long double w = std::pow(static_cast<long double>(k), -static_cast<long double>(gamma));
    const long double l = std::log(static_cast<long double>(k));
    z += w;
    s += w * l;
    s2 += w * l * l;
    if (k == 0) break;
  }
  const long double m = s / z;
  return static_cast<double>(s2 / z - m * m);
}

}  // namespace oracle
