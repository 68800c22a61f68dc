#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "pclique/rgg.hpp"

// Brute-force references for tests. Nothing here shares code with the grid
// construction or the sorted-list algorithms it checks.
namespace pclique::oracle {

// Every pair at torus distance <= r, by an O(N^2) scan. positions is
// row-major with d coordinates per vertex.
std::vector<Edge> brute_force_edges(std::span<const double> positions, int d, double r);

struct CnCandidate {
  Edge edge;
  std::vector<Vertex> clique;  // {i, j} ∪ Z_ij, sorted
};

// Every edge meeting the CN condition, in lexicographic edge order.
std::vector<CnCandidate> brute_force_cn_scan(const Graph& graph, std::size_t k);

struct VolumeEstimate {
  double fraction = 0.0;
  double std_error = 0.0;
};

// Fraction of the unit d-ball (centered at the origin) where the predicate
// holds, by rejection sampling. Requires samples >= 10^4.
VolumeEstimate monte_carlo_volume(const std::function<bool(std::span<const double>)>& region,
                                  int d, std::uint64_t samples, std::uint64_t seed);

struct OracleReport {
  std::string instance;
  std::vector<std::string> mismatches;
  bool pass() const { return mismatches.empty(); }
};

// Symmetric difference of two edge sets, listed as mismatches.
OracleReport compare_edge_sets(std::string instance, std::span<const Edge> expected,
                               std::span<const Edge> actual);

}  // namespace pclique::oracle
