#include "pclique/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "pclique/errors.hpp"
#include "pclique/random.hpp"

namespace pclique::oracle {

std::vector<Edge> brute_force_edges(std::span<const double> positions, int d, double r) {
  const auto dim = static_cast<std::size_t>(d);
  const std::size_t n = positions.size() / dim;
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      double sq = 0.0;
      for (std::size_t c = 0; c < dim; ++c) {
        double delta = std::fabs(positions[a * dim + c] - positions[b * dim + c]);
        if (1.0 - delta < delta) delta = 1.0 - delta;
        sq += delta * delta;
      }
      if (std::sqrt(sq) <= r) edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
  }
  return edges;
}

std::vector<CnCandidate> brute_force_cn_scan(const Graph& graph, std::size_t k) {
  if (k < 2) throw UsageError("brute_force_cn_scan: k must be >= 2");
  const std::size_t n = graph.vertex_count();
  std::vector<std::set<Vertex>> adj(n);
  for (auto [a, b] : graph.edges()) {
    adj[a].insert(b);
    adj[b].insert(a);
  }
  std::vector<CnCandidate> out;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (!adj[i].count(j)) continue;
      std::vector<Vertex> z;
      for (Vertex w = 0; w < n; ++w) {
        if (adj[i].count(w) && adj[j].count(w)) z.push_back(w);
      }
      if (z.size() != k - 2) continue;
      bool clique = true;
      for (Vertex a : z) {
        for (Vertex b : z) {
          if (a != b && !adj[a].count(b)) clique = false;
        }
      }
      if (!clique) continue;
      z.push_back(i);
      z.push_back(j);
      std::sort(z.begin(), z.end());
      out.push_back({{i, j}, std::move(z)});
    }
  }
  return out;
}

VolumeEstimate monte_carlo_volume(const std::function<bool(std::span<const double>)>& region,
                                  int d, std::uint64_t samples, std::uint64_t seed) {
  if (d < 1) throw UsageError("monte_carlo_volume: d must be >= 1");
  if (samples < 10'000) throw UsageError("monte_carlo_volume: need at least 10^4 samples");
  Rng rng(splitmix64(seed));
  std::normal_distribution<double> gauss;
  std::vector<double> p(static_cast<std::size_t>(d));
  std::uint64_t hits = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    // Uniform in the ball: Gaussian direction, radius U^{1/d}.
    double norm = 0.0;
    for (double& c : p) {
      c = gauss(rng);
      norm += c * c;
    }
    const double radius = std::pow(uniform01(rng), 1.0 / d) / std::sqrt(norm);
    for (double& c : p) c *= radius;
    if (region(p)) ++hits;
  }
  const double f = static_cast<double>(hits) / static_cast<double>(samples);
  return {f, std::sqrt(f * (1.0 - f) / static_cast<double>(samples))};
}

OracleReport compare_edge_sets(std::string instance, std::span<const Edge> expected,
                               std::span<const Edge> actual) {
  std::set<Edge> want(expected.begin(), expected.end());
  std::set<Edge> got(actual.begin(), actual.end());
  OracleReport report{std::move(instance), {}};
  for (const auto& e : want) {
    if (!got.count(e)) {
      report.mismatches.push_back("missing (" + std::to_string(e.first) + "," +
                                  std::to_string(e.second) + ")");
    }
  }
  for (const auto& e : got) {
    if (!want.count(e)) {
      report.mismatches.push_back("extra (" + std::to_string(e.first) + "," +
                                  std::to_string(e.second) + ")");
    }
  }
  return report;
}

}  // namespace pclique::oracle
