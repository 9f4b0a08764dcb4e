#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "netchor/graph.hpp"

namespace netchor {

/// Preferential-attachment growth parameters. `m0` is the size of the
/// complete seed core; 0 selects the default m + 1.
struct BAParams {
  std::size_t n = 0;
  std::size_t m = 1;
  std::size_t m0 = 0;
  std::uint64_t seed = 0;
};

/// Uniform random graph with an exact edge count (the G(n, M) ensemble).
struct ERParams {
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint64_t seed = 0;
};

/// Probability that a newcomer attaches to each existing node: k_i / sum_j k_j.
/// Throws DegenerateInputError when every degree is zero.
std::vector<double> attachment_probabilities(std::span<const std::size_t> degrees);

/// Barabasi-Albert growth from a complete core of m0 nodes. Each newcomer
/// links to m distinct existing nodes, drawn one at a time with probability
/// proportional to degree (duplicates redrawn). Degrees are frozen while a
/// newcomer's targets are drawn. Resulting edge count is
/// m0(m0-1)/2 + m(n-m0).
Graph generate_ba(const BAParams& params);

/// Exactly `m` distinct edges chosen uniformly among the n(n-1)/2 pairs.
Graph generate_er(const ERParams& params);

}  // namespace netchor
