#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "netchor/error.hpp"
#include "netchor/generators.hpp"
#include "netchor/metrics.hpp"
#include "netchor/parallel.hpp"
#include "oracles.hpp"

using namespace netchor;

namespace {

std::vector<std::size_t> distances(const Graph& g, NodeId s) { return shortest_path_lengths(g, s); }

}  // namespace

TEST_SUITE("metrics") {
  TEST_CASE("shortest path examples") {
    CHECK(distances(oracle::path(3), 0) == std::vector<std::size_t>{0, 1, 2});
    CHECK(distances(oracle::complete(4), 2) == std::vector<std::size_t>{1, 1, 0, 1});
    const std::vector<Edge> two{{0, 1}, {2, 3}};
    const Graph g(4, two);
    CHECK(distances(g, 0)[3] == kUnreachable);
    CHECK_THROWS_AS(distances(g, 4), InputError);
  }

  TEST_CASE("property: BFS matches Floyd-Warshall") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const auto g = oracle::random_graph(2 + seed % 20, 0.15, seed);
      const auto d = oracle::floyd_warshall(g);
      for (NodeId s = 0; s < g.node_count(); ++s) {
        const auto bfs = distances(g, s);
        for (NodeId t = 0; t < g.node_count(); ++t) {
          CHECK((d[s][t] >= oracle::kInf ? kUnreachable : d[s][t]) == bfs[t]);
        }
      }
    }
  }

  TEST_CASE("average path length") {
    for (std::size_t n = 2; n <= 10; ++n) {
      CHECK(average_path_length(oracle::complete(n)).average == 1.0);
      CHECK(diameter(oracle::complete(n)) == 1);
    }
    CHECK(average_path_length(oracle::path(3)).average == doctest::Approx(4.0 / 3.0).epsilon(1e-14));

    const std::vector<Edge> two{{0, 1}, {2, 3}};
    const auto split = average_path_length(Graph(4, two));
    CHECK(split.average == 1.0);
    CHECK(split.reachable_pairs == 2);
    CHECK(split.unreachable_fraction == doctest::Approx(4.0 / 6.0));

    CHECK_THROWS_AS(average_path_length(Graph(1)), InputError);
    CHECK_THROWS_AS(average_path_length(Graph(3)), DegenerateInputError);
  }

  TEST_CASE("diameter examples") {
    CHECK(diameter(oracle::complete(5)) == 1);
    CHECK(diameter(oracle::path(4)) == 3);
    CHECK(diameter(oracle::cycle(6)) == 3);
    // Largest component wins when disconnected.
    CHECK(diameter(oracle::disjoint_union({oracle::path(5), oracle::complete(3)})) == 4);
    CHECK_THROWS_AS(diameter(Graph(3)), DegenerateInputError);
  }

  TEST_CASE("clustering examples") {
    const auto k3 = oracle::complete(3);
    for (NodeId v = 0; v < 3; ++v) CHECK(local_clustering(k3, v) == 1.0);
    CHECK(local_clustering(oracle::star(4), 0) == 0.0);
    CHECK(local_clustering(oracle::star(4), 1) == 0.0);
    CHECK(global_clustering(oracle::complete(4)) == 1.0);
    CHECK(global_clustering(oracle::star(4)) == 0.0);
    CHECK_THROWS_AS(local_clustering(k3, 3), InputError);

    // Triangle with a pendant: node 0 has neighbors {1,2,3}, one linked pair.
    const std::vector<Edge> e{{0, 1}, {0, 2}, {1, 2}, {0, 3}};
    CHECK(local_clustering(Graph(4, e), 0) == doctest::Approx(1.0 / 3.0));
  }

  TEST_CASE("degree distribution") {
    const auto k4 = degree_distribution(oracle::complete(4));
    CHECK(k4 == std::map<std::size_t, double>{{3, 1.0}});
    const auto star = degree_distribution(oracle::star(4));
    CHECK(star.at(4) == doctest::Approx(0.2));
    CHECK(star.at(1) == doctest::Approx(0.8));
    const auto p3 = degree_distribution(oracle::path(3));
    CHECK(p3.at(1) == doctest::Approx(2.0 / 3.0));
    CHECK(p3.at(2) == doctest::Approx(1.0 / 3.0));

    const auto g = generate_ba({300, 2, 0, 1});
    double total = 0.0;
    for (const auto& [k, p] : degree_distribution(g)) total += p;
    CHECK(std::abs(total - 1.0) <= 1e-12);
  }

  TEST_CASE("closeness examples") {
    CHECK(closeness_centrality(oracle::path(3), 1).value == 0.5);
    CHECK(closeness_centrality(oracle::complete(5), 3).value == 0.25);
    CHECK(closeness_centrality(oracle::star(9), 0).value == doctest::Approx(1.0 / 9.0).epsilon(1e-14));
    CHECK_FALSE(closeness_centrality(oracle::star(9), 0).component_only);

    const auto split = oracle::disjoint_union({oracle::path(3), oracle::complete(2), Graph(1)});
    const auto c = closeness_centrality(split, 1);
    CHECK(c.value == 0.5);
    CHECK(c.component_only);
    CHECK_THROWS_AS(closeness_centrality(split, 5), DegenerateInputError);
  }

  TEST_CASE("betweenness examples") {
    const auto p3 = betweenness_centrality(oracle::path(3));
    CHECK(p3 == std::vector<double>{0.0, 1.0, 0.0});
    const auto star = betweenness_centrality(oracle::star(4));
    CHECK(star[0] == 6.0);
    const auto c4 = betweenness_centrality(oracle::cycle(4));
    for (double b : c4) CHECK(b == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(oracle::brute_betweenness(oracle::cycle(4)) == std::vector<double>(4, 0.5));
  }

  TEST_CASE("property: Brandes equals path enumeration") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const auto g = oracle::random_graph(1 + seed % 7, 0.45, seed + 77);
      const auto fast = betweenness_centrality(g);
      const auto slow = oracle::brute_betweenness(g);
      for (std::size_t v = 0; v < fast.size(); ++v) CHECK(std::abs(fast[v] - slow[v]) <= 1e-9);
    }
  }

  TEST_CASE("betweenness is zero on leaves of connected graphs") {
    const auto g = generate_ba({200, 1, 0, 3});
    const auto b = betweenness_centrality(g);
    for (NodeId v = 0; v < g.node_count(); ++v) {
      if (g.degree(v) == 1) CHECK(b[v] == 0.0);
    }
  }

  TEST_CASE("eigenvector examples") {
    const auto k3 = eigenvector_centrality(oracle::complete(3));
    for (double s : k3.scores) CHECK(s == doctest::Approx(1.0).epsilon(1e-9));

    // K_{1,n}: leaf/center ratio 1/sqrt(n).
    const auto star = eigenvector_centrality(oracle::star(4));
    CHECK(star.scores[0] == 1.0);
    for (NodeId v = 1; v <= 4; ++v) CHECK(star.scores[v] == doctest::Approx(0.5).epsilon(1e-8));
    CHECK(star.eigenvalue == doctest::Approx(2.0).epsilon(1e-8));

    CHECK_THROWS_AS(eigenvector_centrality(Graph(4)), DegenerateInputError);
    EigenvectorOptions tight;
    tight.max_iterations = 2;
    CHECK_THROWS_AS(eigenvector_centrality(generate_ba({200, 2, 0, 1}), tight), ConvergenceError);
  }

  TEST_CASE("property: eigenvector residual") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto g = generate_ba({150, 1 + seed % 3, 0, seed});
      const auto r = eigenvector_centrality(g);
      const double top = *std::max_element(r.scores.begin(), r.scores.end());
      CHECK(top == 1.0);
      double residual = 0.0;
      for (NodeId v = 0; v < g.node_count(); ++v) {
        CHECK(r.scores[v] >= 0.0);
        CHECK(r.scores[v] <= 1.0);
        double av = 0.0;
        for (NodeId w : g.neighbors(v)) av += r.scores[w];
        residual = std::max(residual, std::abs(av - r.eigenvalue * r.scores[v]));
      }
      CHECK(residual / r.eigenvalue <= 1e-8);
    }
  }

  TEST_CASE("eigenvector restricted to the largest component") {
    const auto g = oracle::disjoint_union({oracle::complete(2), oracle::star(3)});
    const auto r = eigenvector_centrality(g);
    CHECK(r.scores[0] == 0.0);
    CHECK(r.scores[1] == 0.0);
    CHECK(r.scores[2] == 1.0);
  }

  TEST_CASE("property: adding an edge never lengthens a distance") {
    std::mt19937_64 engine(5);
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const auto g = oracle::random_graph(12, 0.15, seed);
      auto edges = g.edges();
      std::vector<Edge> missing;
      for (NodeId u = 0; u < 12; ++u)
        for (NodeId v = u + 1; v < 12; ++v)
          if (!g.has_edge(u, v)) missing.emplace_back(u, v);
      if (missing.empty()) continue;
      edges.push_back(missing[engine() % missing.size()]);
      const Graph h(12, edges);
      for (NodeId s = 0; s < 12; ++s) {
        const auto before = distances(g, s);
        const auto after = distances(h, s);
        for (NodeId t = 0; t < 12; ++t) CHECK(after[t] <= before[t]);
      }
    }
  }

  TEST_CASE("property: permutation equivariance") {
    std::mt19937_64 engine(17);
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
      const auto g = generate_ba({40, 2, 0, seed});
      std::vector<NodeId> perm(g.node_count());
      std::iota(perm.begin(), perm.end(), NodeId{0});
      std::shuffle(perm.begin(), perm.end(), engine);
      const auto h = oracle::permuted(g, perm);

      const auto a = node_statistics(g);
      const auto b = node_statistics(h);
      for (NodeId v = 0; v < g.node_count(); ++v) {
        const auto& x = a[v];
        const auto& y = b[perm[v]];
        CHECK(x.degree == y.degree);
        CHECK(x.clustering == doctest::Approx(y.clustering).epsilon(1e-12));
        CHECK(*x.closeness == doctest::Approx(*y.closeness).epsilon(1e-12));
        CHECK(x.betweenness == doctest::Approx(y.betweenness).epsilon(1e-9));
        CHECK(x.eigenvector == doctest::Approx(y.eigenvector).epsilon(1e-8));
      }
      const auto sg = summarize(g);
      const auto sh = summarize(h);
      CHECK(*sg.average_path_length == doctest::Approx(*sh.average_path_length).epsilon(1e-12));
      CHECK(sg.diameter == sh.diameter);
      CHECK(sg.clustering == doctest::Approx(sh.clustering).epsilon(1e-12));
      CHECK(sg.degree_distribution == sh.degree_distribution);
    }
  }

  TEST_CASE("summary invariants") {
    const auto g = generate_ba({400, 3, 0, 8});
    const auto s = summarize(g);
    CHECK(s.nodes == 400);
    CHECK(s.edges == g.edge_count());
    REQUIRE(s.average_path_length);
    REQUIRE(s.diameter);
    CHECK(static_cast<double>(*s.diameter) >= *s.average_path_length);
    CHECK(*s.average_path_length >= 1.0);
    CHECK(s.components == 1);

    const auto empty = summarize(Graph(3));
    CHECK_FALSE(empty.average_path_length);
    CHECK_FALSE(empty.diameter);
    CHECK(empty.components == 3);
  }

  TEST_CASE("node statistics on isolated nodes") {
    const auto rows = node_statistics(oracle::disjoint_union({oracle::path(3), Graph(1)}));
    CHECK_FALSE(rows[3].closeness);
    CHECK(rows[3].eigenvector == 0.0);
    const auto none = node_statistics(Graph(2));
    CHECK(none[0].eigenvector == 0.0);
  }

  TEST_CASE("results do not depend on thread count") {
    const auto g = generate_ba({1500, 3, 0, 21});
    set_thread_count(1);
    const auto b1 = betweenness_centrality(g);
    const auto l1 = average_path_length(g).average;
    const auto e1 = eigenvector_centrality(g).scores;
    set_thread_count(8);
    CHECK(betweenness_centrality(g) == b1);
    CHECK(average_path_length(g).average == l1);
    CHECK(eigenvector_centrality(g).scores == e1);
    set_thread_count(1);
  }
}
