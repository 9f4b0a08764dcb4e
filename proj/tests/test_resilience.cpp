#include <doctest.h>

#include "netchor/error.hpp"
#include "netchor/generators.hpp"
#include "netchor/parallel.hpp"
#include "netchor/resilience.hpp"
#include "oracles.hpp"

using namespace netchor;

TEST_SUITE("resilience") {
  TEST_CASE("K5 under attack stays complete") {
    const auto trace = run_resilience(oracle::complete(5), RemovalStrategy::targeted_attack(), 0.2);
    REQUIRE(trace.rows.size() >= 4);
    for (std::size_t r = 0; r <= 3; ++r) {
      CHECK(trace.rows[r].removed == r);
      CHECK(trace.rows[r].diameter == 1);
    }
    // Ties go to the smallest id.
    CHECK(trace.removal_order == std::vector<NodeId>{0, 1, 2, 3});
  }

  TEST_CASE("star under attack loses its center first") {
    const auto trace = run_resilience(oracle::star(9), RemovalStrategy::targeted_attack(), 0.1);
    CHECK(trace.removal_order.front() == 0);
    CHECK(trace.lcc_by_step[0] == 10);
    CHECK(trace.lcc_by_step[1] == 1);
    CHECK(trace.rows[1].components == 9);
    CHECK(trace.rows[1].diameter == 0);
  }

  TEST_CASE("attack is adaptive") {
    // Star K1,3 whose leaf 1 also heads a path 1-4-5-6. Initial degrees
    // would take node 1 second; after the center goes, node 1 has degree 1
    // and node 4 leads.
    const std::vector<Edge> e{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {4, 5}, {5, 6}};
    const auto trace = run_resilience(Graph(7, e), RemovalStrategy::targeted_attack(), 1.0);
    CHECK(trace.removal_order[0] == 0);
    CHECK(trace.removal_order[1] == 4);
  }

  TEST_CASE("preconditions") {
    CHECK_THROWS_AS(run_resilience(Graph(1), RemovalStrategy::targeted_attack(), 0.1), InputError);
    CHECK_THROWS_AS(run_resilience(Graph(), RemovalStrategy::targeted_attack(), 0.1), InputError);
    CHECK_THROWS_AS(run_resilience(oracle::path(3), RemovalStrategy::random_error(1), 0.0), InputError);
    CHECK_THROWS_AS(run_resilience(oracle::path(3), RemovalStrategy::random_error(1), 1.5), InputError);
  }

  TEST_CASE("property: trace invariants") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto g = generate_ba({120, 2, 0, seed});
      for (const auto& strategy : {RemovalStrategy::targeted_attack(), RemovalStrategy::random_error(seed)}) {
        const auto trace = run_resilience(g, strategy, 0.05);
        CHECK(trace.removal_order.size() == g.node_count() - 1);
        CHECK(trace.lcc_by_step.size() == g.node_count());
        for (std::size_t r = 1; r < trace.lcc_by_step.size(); ++r) {
          CHECK(trace.lcc_by_step[r] <= trace.lcc_by_step[r - 1]);
        }
        for (std::size_t r = 1; r < trace.rows.size(); ++r) {
          CHECK(trace.rows[r].removed_fraction > trace.rows[r - 1].removed_fraction);
        }
        for (const auto& row : trace.rows) {
          CHECK(row.components >= 1);
          CHECK(row.lcc_size <= g.node_count() - row.removed);
        }
      }
    }
  }

  TEST_CASE("property: component sizes sum to remaining nodes") {
    // Replays the removal order on real subgraphs.
    const auto g = generate_er({60, 90, 2});
    const auto trace = run_resilience(g, RemovalStrategy::random_error(5), 1.0 / 60.0);
    Graph current = g;
    std::vector<NodeId> current_id(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) current_id[v] = v;
    for (std::size_t step = 0; step < trace.removal_order.size(); ++step) {
      const auto parts = connected_components(current);
      std::size_t total = 0;
      for (auto s : parts.component_sizes) total += s;
      CHECK(total == g.node_count() - step);
      CHECK(parts.largest_size() == trace.lcc_by_step[step]);
      const auto removal = remove_node(current, current_id[trace.removal_order[step]]);
      for (auto& id : current_id) {
        if (id != static_cast<NodeId>(-1)) id = removal.remap[id].value_or(static_cast<NodeId>(-1));
      }
      current = removal.graph;
    }
  }

  TEST_CASE("recorded rows match direct recomputation") {
    const auto g = generate_ba({80, 2, 0, 3});
    const auto trace = run_resilience(g, RemovalStrategy::random_error(9), 0.1);
    for (const auto& row : trace.rows) {
      std::vector<bool> gone(g.node_count(), false);
      for (std::size_t i = 0; i < row.removed; ++i) gone[trace.removal_order[i]] = true;
      std::vector<NodeId> keep;
      for (NodeId v = 0; v < g.node_count(); ++v)
        if (!gone[v]) keep.push_back(v);
      std::vector<NodeId> index(g.node_count(), 0);
      for (NodeId i = 0; i < keep.size(); ++i) index[keep[i]] = i;
      std::vector<Edge> edges;
      for (const auto& [u, v] : g.edges())
        if (!gone[u] && !gone[v]) edges.emplace_back(index[u], index[v]);
      const Graph sub(keep.size(), edges);
      const auto parts = connected_components(sub);
      CHECK(parts.count() == row.components);
      CHECK(parts.largest_size() == row.lcc_size);
      // Largest-component diameter by Floyd-Warshall.
      const auto d = oracle::floyd_warshall(sub);
      const auto big = parts.largest_component();
      std::size_t diam = 0;
      for (NodeId a = 0; a < sub.node_count(); ++a)
        for (NodeId b = 0; b < sub.node_count(); ++b)
          if (parts.component_of[a] == big && parts.component_of[b] == big) diam = std::max(diam, d[a][b]);
      CHECK(diam == row.diameter);
    }
  }

  TEST_CASE("determinism") {
    const auto g = generate_ba({400, 3, 0, 7});
    set_thread_count(1);
    const auto attack = run_resilience(g, RemovalStrategy::targeted_attack(), 0.05);
    const auto error = run_resilience(g, RemovalStrategy::random_error(3), 0.05);
    const auto ensemble = run_error_ensemble(g, {1, 2, 3, 4}, 0.05);
    set_thread_count(8);
    CHECK(run_resilience(g, RemovalStrategy::targeted_attack(), 0.05).removal_order == attack.removal_order);
    CHECK(run_resilience(g, RemovalStrategy::random_error(3), 0.05).removal_order == error.removal_order);
    const auto again = run_error_ensemble(g, {1, 2, 3, 4}, 0.05);
    set_thread_count(1);
    REQUIRE(again.rows.size() == ensemble.rows.size());
    for (std::size_t r = 0; r < again.rows.size(); ++r) {
      CHECK(again.rows[r].lcc_median == ensemble.rows[r].lcc_median);
      CHECK(again.rows[r].diameter_max == ensemble.rows[r].diameter_max);
    }
    CHECK(run_resilience(g, RemovalStrategy::random_error(4), 0.05).removal_order != error.removal_order);
  }

  TEST_CASE("ensemble envelopes bracket the median") {
    const auto g = generate_ba({200, 2, 0, 1});
    const auto e = run_error_ensemble(g, {10, 11, 12, 13, 14}, 0.1);
    CHECK(e.members.size() == 5);
    for (const auto& row : e.rows) {
      CHECK(static_cast<double>(row.lcc_min) <= row.lcc_median);
      CHECK(row.lcc_median <= static_cast<double>(row.lcc_max));
      CHECK(static_cast<double>(row.diameter_min) <= row.diameter_median);
      CHECK(row.diameter_median <= static_cast<double>(row.diameter_max));
    }
    CHECK(median({3.0, 1.0, 2.0}) == 2.0);
    CHECK(median({4.0, 1.0, 2.0, 3.0}) == 2.5);
    CHECK_THROWS_AS(median({}), InputError);
  }

  TEST_CASE("first fraction below a threshold") {
    const auto trace = run_resilience(oracle::star(9), RemovalStrategy::targeted_attack(), 0.1);
    CHECK(trace.first_fraction_below(5.0) == doctest::Approx(0.1));
    CHECK_FALSE(trace.first_fraction_below(0.5).has_value());
  }
}
