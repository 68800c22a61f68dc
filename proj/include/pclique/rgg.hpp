#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "pclique/theory.hpp"

namespace pclique {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;  // always first < second

// Immutable graph with vertex positions on the unit torus and CSR adjacency.
//
// Abstract graphs built with from_edges() have dimension 0 and no positions.
class Graph {
 public:
  Graph() = default;

  // Positions are row-major (vertex_count rows of d coordinates). Edges may
  // come in either orientation and in any order; duplicates and self-loops
  // are rejected with UsageError.
  Graph(int dimension, double radius, double expected_n, std::vector<double> positions,
        std::span<const Edge> edges);

  static Graph from_edges(std::size_t vertex_count, std::span<const Edge> edges);

  std::size_t vertex_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return neighbors_.size() / 2; }
  int dimension() const noexcept { return dimension_; }
  double radius() const noexcept { return radius_; }
  double expected_n() const noexcept { return expected_n_; }

  // Only valid for geometric graphs (dimension >= 1, radius < 1/4, n > 0).
  ModelParams model_params() const;

  std::span<const double> position(Vertex v) const;
  std::span<const double> positions() const noexcept { return positions_; }
  std::span<const Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const;

  // All edges (i, j) with i < j in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int dimension_ = 0;
  double radius_ = 0.0;
  double expected_n_ = 0.0;
  std::vector<double> positions_;
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> neighbors_;
};

struct SampleOptions {
  // Use exactly this many vertices instead of a Poisson(n) draw.
  std::optional<std::size_t> fixed_vertex_count;
};

// Draws N ~ Poisson(n) (or the fixed count), places the vertices uniformly on
// [0,1)^d and joins every pair at torus distance <= r. Deterministic in
// (params, seed).
Graph sample_instance(const ModelParams& params, std::uint64_t seed,
                      const SampleOptions& options = {});

// Builds the hard geometric graph on given positions with a cell grid.
// Each cell has side >= r, so only the 3^d surrounding cells are searched.
Graph build_geometric_graph(int dimension, double radius, double expected_n,
                            std::vector<double> positions);

struct PlantedInstance {
  Graph graph;                      // after planting
  std::vector<Vertex> clique;       // sorted
  std::vector<Edge> planted_edges;  // sorted, absent before planting
};

// Chooses K uniformly among k-subsets (partial Fisher-Yates on the "clique"
// substream of seed) and plants it. Throws UsageError for k < 2 and
// InstanceError for k > N.
PlantedInstance plant_clique(const Graph& graph, std::size_t k, std::uint64_t seed);

// Plants a given vertex set (sorted and deduplicated first).
PlantedInstance plant_clique_on(const Graph& graph, std::vector<Vertex> clique);

// Same graph without the listed edges; undoes plant_clique_on.
Graph remove_edges(const Graph& graph, std::span<const Edge> edges);

// N(i) ∩ N(j), by sorted-list intersection. Throws UsageError when i == j or
// either vertex is out of range.
std::vector<Vertex> common_neighbors(const Graph& graph, Vertex i, Vertex j);

// At most |S|(|S|-1)/2 adjacency probes; the count is added to *probes.
bool is_clique(const Graph& graph, std::span<const Vertex> vertices,
               std::uint64_t* probes = nullptr);

}  // namespace pclique
