#include "netchor/generators.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <unordered_set>

#include "netchor/error.hpp"
#include "netchor/rng.hpp"

namespace netchor {

std::vector<double> attachment_probabilities(std::span<const std::size_t> degrees) {
  const std::size_t total = std::accumulate(degrees.begin(), degrees.end(), std::size_t{0});
  if (total == 0) throw DegenerateInputError("attachment probabilities need a positive degree");
  std::vector<double> p;
  p.reserve(degrees.size());
  for (std::size_t k : degrees) p.push_back(static_cast<double>(k) / static_cast<double>(total));
  return p;
}

Graph generate_ba(const BAParams& params) {
  const std::size_t m = params.m;
  const std::size_t m0 = params.m0 == 0 ? m + 1 : params.m0;
  const std::size_t n = params.n;
  if (m < 1 || m > m0 || m0 >= n) {
    throw InputError("BA parameters must satisfy 1 <= m <= m0 < n (got n=" + std::to_string(n) +
                     ", m=" + std::to_string(m) + ", m0=" + std::to_string(m0) + ")");
  }
  if (n > std::numeric_limits<NodeId>::max()) throw InputError("BA node count too large");

  std::vector<Edge> edges;
  edges.reserve(m0 * (m0 - 1) / 2 + m * (n - m0));
  // Each node appears once per incident edge, so a uniform draw from this
  // pool is a degree-proportional draw.
  std::vector<NodeId> endpoint_pool;
  endpoint_pool.reserve(2 * edges.capacity());
  for (NodeId a = 0; a < m0; ++a) {
    for (NodeId b = a + 1; b < m0; ++b) {
      edges.emplace_back(a, b);
      endpoint_pool.push_back(a);
      endpoint_pool.push_back(b);
    }
  }

  Rng rng(params.seed);
  std::vector<NodeId> targets;
  targets.reserve(m);
  for (auto newcomer = static_cast<NodeId>(m0); newcomer < n; ++newcomer) {
    const std::size_t pool_size = endpoint_pool.size();
    targets.clear();
    while (targets.size() < m) {
      const NodeId candidate = endpoint_pool[rng.uniform_index(pool_size)];
      if (std::find(targets.begin(), targets.end(), candidate) == targets.end()) {
        targets.push_back(candidate);
      }
    }
    for (NodeId t : targets) {
      edges.emplace_back(t, newcomer);
      endpoint_pool.push_back(t);
      endpoint_pool.push_back(newcomer);
    }
  }
  return Graph(n, edges);
}

Graph generate_er(const ERParams& params) {
  const std::size_t n = params.n;
  if (n > std::numeric_limits<NodeId>::max()) throw InputError("ER node count too large");
  const std::uint64_t pairs = n < 2 ? 0 : static_cast<std::uint64_t>(n) * (n - 1) / 2;
  if (params.m > pairs) {
    throw InputError("ER edge count " + std::to_string(params.m) + " exceeds the maximum " +
                     std::to_string(pairs) + " for n=" + std::to_string(n));
  }

  // Floyd's algorithm: m distinct pair indices, each m-subset equally likely.
  Rng rng(params.seed);
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(params.m * 2);
  for (std::uint64_t j = pairs - params.m; j < pairs; ++j) {
    const std::uint64_t t = rng.uniform_index(j + 1);
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  std::vector<std::uint64_t> indices(chosen.begin(), chosen.end());
  std::sort(indices.begin(), indices.end());

  // Pair index enumerates (0,1), (0,2), ..., (0,n-1), (1,2), ...
  std::vector<Edge> edges;
  edges.reserve(indices.size());
  NodeId row = 0;
  std::uint64_t row_start = 0;
  for (std::uint64_t idx : indices) {
    while (idx >= row_start + (n - 1 - row)) {
      row_start += n - 1 - row;
      ++row;
    }
    edges.emplace_back(row, static_cast<NodeId>(row + 1 + (idx - row_start)));
  }
  return Graph(n, edges);
}

}  // namespace netchor
