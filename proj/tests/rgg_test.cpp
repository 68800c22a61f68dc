#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "pclique/errors.hpp"
#include "pclique/oracle.hpp"
#include "pclique/rgg.hpp"
#include "pclique/theory.hpp"

namespace pclique {
namespace {

Graph fixed_triple() {
  return build_geometric_graph(1, 0.06, 3.0, {0.10, 0.15, 0.90});
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph::from_edges(n, edges);
}

TEST(BuildGeometricGraph, FixedTriple) {
  const Graph g = fixed_triple();
  EXPECT_EQ(g.vertex_count(), 3u);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}}));
}

TEST(BuildGeometricGraph, CoincidentPointsAreAdjacent) {
  const Graph g = build_geometric_graph(2, 0.01, 2.0, {0.3, 0.3, 0.3, 0.3});
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}}));
}

TEST(BuildGeometricGraph, EdgesAcrossTheSeam) {
  const Graph g = build_geometric_graph(2, 0.05, 2.0, {0.99, 0.5, 0.02, 0.51});
  EXPECT_TRUE(g.adjacent(0, 1));
}

TEST(SampleInstance, MatchesBruteForceOracle) {
  for (int d = 1; d <= 3; ++d) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const double n = 50.0 + static_cast<double>((seed * 37) % 450);
      const double r = 0.01 + 0.2 * static_cast<double>(seed % 17) / 16.0;
      const Graph g = sample_instance(ModelParams::from_radius(n, d, r), seed);
      const auto expected = oracle::brute_force_edges(g.positions(), d, g.radius());
      const auto report = oracle::compare_edge_sets("d=" + std::to_string(d), expected, g.edges());
      ASSERT_TRUE(report.pass()) << report.instance << " seed=" << seed;
    }
  }
}

TEST(SampleInstance, DeterministicForSeed) {
  const auto p = ModelParams::from_mu(300.0, 2, 6.0);
  EXPECT_EQ(sample_instance(p, 42), sample_instance(p, 42));
  EXPECT_FALSE(sample_instance(p, 42) == sample_instance(p, 43));
}

TEST(SampleInstance, PositionsInUnitCube) {
  const Graph g = sample_instance(ModelParams::from_mu(500.0, 3, 4.0), 5);
  for (double c : g.positions()) {
    ASSERT_GE(c, 0.0);
    ASSERT_LT(c, 1.0);
  }
  EXPECT_EQ(g.positions().size(), 3 * g.vertex_count());
}

TEST(SampleInstance, FixedVertexCount) {
  SampleOptions options;
  options.fixed_vertex_count = 123;
  EXPECT_EQ(sample_instance(ModelParams::from_mu(500.0, 2, 4.0), 1, options).vertex_count(), 123u);
}

TEST(SampleInstance, EmptyDrawGivesEmptyGraph) {
  const auto p = ModelParams::from_radius(1e-9, 2, 0.1);
  bool saw_empty = false;
  for (std::uint64_t seed = 0; seed < 20 && !saw_empty; ++seed) {
    const Graph g = sample_instance(p, seed);
    saw_empty = g.vertex_count() == 0;
    if (saw_empty) EXPECT_EQ(g.edge_count(), 0u);
  }
  EXPECT_TRUE(saw_empty);
}

TEST(SampleInstance, PoissonCountAndMeanDegree) {
  // Averages over 40 draws; the standard errors are about sqrt(n/40) and
  // sqrt(mu/(n*40)) respectively, so 5 SE gives a stable check.
  const double n = 2000.0, mu = 8.0;
  const auto p = ModelParams::from_mu(n, 2, mu);
  double total_n = 0.0, total_deg = 0.0;
  const int draws = 40;
  for (int s = 0; s < draws; ++s) {
    const Graph g = sample_instance(p, 1000 + s);
    total_n += static_cast<double>(g.vertex_count());
    total_deg += 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(g.vertex_count());
  }
  EXPECT_NEAR(total_n / draws, n, 5.0 * std::sqrt(n / draws));
  EXPECT_NEAR(total_deg / draws, mu, 5.0 * std::sqrt(2.0 * mu / (n * draws)) + 0.05);
}

TEST(SampleInstance, RadiusOutOfDomain) {
  EXPECT_THROW(build_geometric_graph(2, 0.25, 10.0, {0.1, 0.1}), ModelDomainError);
}

TEST(Graph, RejectsBadEdges) {
  const std::vector<Edge> loop{{1, 1}};
  EXPECT_THROW(Graph::from_edges(3, loop), UsageError);
  const std::vector<Edge> dup{{0, 1}, {0, 1}};
  EXPECT_THROW(Graph::from_edges(3, dup), UsageError);
  const std::vector<Edge> out_of_range{{0, 5}};
  EXPECT_THROW(Graph::from_edges(3, out_of_range), UsageError);
}

TEST(PlantClique, PlantsMissingPairOnFixedTriple) {
  const auto inst = plant_clique_on(fixed_triple(), {0, 2});
  EXPECT_EQ(inst.planted_edges, (std::vector<Edge>{{0, 2}}));
  EXPECT_EQ(inst.graph.degree(0), 2u);
  EXPECT_EQ(inst.graph.degree(1), 1u);
  EXPECT_EQ(inst.graph.degree(2), 1u);
}

TEST(PlantClique, FullSizeGivesCompleteGraph) {
  const Graph g = sample_instance(ModelParams::from_mu(40.0, 2, 2.0), 9);
  const auto inst = plant_clique(g, g.vertex_count(), 3);
  const std::size_t n = g.vertex_count();
  EXPECT_EQ(inst.graph.edge_count(), n * (n - 1) / 2);
  EXPECT_EQ(inst.planted_edges.size(), n * (n - 1) / 2 - g.edge_count());
}

TEST(PlantClique, ExistingEdgeAddsNothing) {
  const std::vector<Edge> edge{{0, 1}};
  const Graph g = Graph::from_edges(2, edge);
  const auto inst = plant_clique(g, 2, 1);
  EXPECT_TRUE(inst.planted_edges.empty());
  EXPECT_EQ(inst.graph, g);
}

TEST(PlantClique, InvariantsOnRandomInstances) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = sample_instance(ModelParams::from_mu(400.0, 2, 5.0), seed);
    const std::size_t k = 2 + seed % 20;
    const auto inst = plant_clique(g, k, seed + 77);
    ASSERT_EQ(inst.clique.size(), k);
    ASSERT_TRUE(std::is_sorted(inst.clique.begin(), inst.clique.end()));
    ASSERT_EQ(std::adjacent_find(inst.clique.begin(), inst.clique.end()), inst.clique.end());
    ASSERT_TRUE(is_clique(inst.graph, inst.clique));
    for (const Edge& e : inst.planted_edges) {
      ASSERT_FALSE(g.adjacent(e.first, e.second));
      ASSERT_TRUE(std::binary_search(inst.clique.begin(), inst.clique.end(), e.first));
      ASSERT_TRUE(std::binary_search(inst.clique.begin(), inst.clique.end(), e.second));
    }
    ASSERT_EQ(inst.graph.edge_count(), g.edge_count() + inst.planted_edges.size());
    ASSERT_EQ(remove_edges(inst.graph, inst.planted_edges), g);
    // Planting again on the same set is a no-op.
    const auto again = plant_clique_on(inst.graph, inst.clique);
    ASSERT_TRUE(again.planted_edges.empty());
    ASSERT_EQ(again.graph, inst.graph);
  }
}

TEST(PlantClique, CliqueIsUniformlyDistributed) {
  // Each of 10 vertices should be chosen with probability 3/10.
  const Graph g = Graph::from_edges(10, {});
  std::vector<int> hits(10, 0);
  const int draws = 5000;
  for (int s = 0; s < draws; ++s) {
    for (Vertex v : plant_clique(g, 3, s).clique) ++hits[v];
  }
  const double expected = draws * 0.3;
  const double sd = std::sqrt(draws * 0.3 * 0.7);
  for (int h : hits) EXPECT_NEAR(h, expected, 5 * sd);
}

TEST(PlantClique, Errors) {
  const Graph g = fixed_triple();
  EXPECT_THROW(plant_clique(g, 4, 1), InstanceError);
  EXPECT_THROW(plant_clique(g, 1, 1), UsageError);
}

TEST(CommonNeighbors, CompleteGraph) {
  EXPECT_EQ(common_neighbors(complete_graph(5), 0, 1), (std::vector<Vertex>{2, 3, 4}));
}

TEST(CommonNeighbors, DisjointNeighbourhoods) {
  const std::vector<Edge> edges{{0, 2}, {1, 3}};
  EXPECT_TRUE(common_neighbors(Graph::from_edges(4, edges), 0, 1).empty());
}

TEST(CommonNeighbors, SameVertexIsUsageError) {
  EXPECT_THROW(common_neighbors(complete_graph(3), 1, 1), UsageError);
}

TEST(CommonNeighbors, MatchesSetIntersection) {
  const Graph g = sample_instance(ModelParams::from_mu(400.0, 2, 15.0), 21);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(g.vertex_count() - 1));
  for (int t = 0; t < 1000; ++t) {
    const Vertex i = pick(rng);
    Vertex j = pick(rng);
    if (i == j) j = (j + 1) % g.vertex_count();
    std::vector<Vertex> expected;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (v != i && v != j && g.adjacent(i, v) && g.adjacent(j, v)) expected.push_back(v);
    }
    ASSERT_EQ(common_neighbors(g, i, j), expected);
  }
}

TEST(IsClique, SmallSetsAreCliques) {
  const Graph g = fixed_triple();
  EXPECT_TRUE(is_clique(g, std::vector<Vertex>{}));
  EXPECT_TRUE(is_clique(g, std::vector<Vertex>{2}));
}

TEST(IsClique, PathIsNotClique) {
  const std::vector<Edge> edges{{0, 1}, {1, 2}};
  EXPECT_FALSE(is_clique(Graph::from_edges(3, edges), std::vector<Vertex>{0, 1, 2}));
}

TEST(IsClique, ProbeCountBoundedByPairs) {
  const std::vector<Vertex> s{0, 1, 2, 3, 4, 5};
  std::uint64_t probes = 0;
  EXPECT_TRUE(is_clique(complete_graph(8), s, &probes));
  EXPECT_LE(probes, 15u);
}

}  // namespace
}  // namespace pclique
