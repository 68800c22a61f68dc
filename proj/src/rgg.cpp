#include "pclique/rgg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "pclique/errors.hpp"
#include "pclique/geometry.hpp"
#include "pclique/random.hpp"

namespace pclique {
namespace {

Edge ordered(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// Directed copies of an edge list, sorted by (source, target).
std::vector<Edge> directed(std::span<const Edge> edges) {
  std::vector<Edge> out;
  out.reserve(2 * edges.size());
  for (auto [a, b] : edges) {
    out.emplace_back(a, b);
    out.emplace_back(b, a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Grid of m^d cells of side 1/m >= r covering the torus.
class CellGrid {
 public:
  CellGrid(int d, double radius, std::size_t vertex_count) : d_(d) {
    // Never more than ~2 cells per vertex; the side only has to be >= r.
    const double cap = std::max(1.0, std::floor(std::pow(2.0 * std::max<std::size_t>(vertex_count, 1), 1.0 / d)));
    double m = cap;
    if (radius > 0.0) {
      // Slack keeps a point on a cell boundary from being misfiled by rounding.
      m = std::min(cap, std::floor(1.0 / (radius * (1.0 + 1e-9))));
    }
    m_ = static_cast<std::size_t>(std::max(1.0, m));
  }

  std::size_t cells_per_axis() const { return m_; }

  std::size_t cell_count() const {
    std::size_t c = 1;
    for (int i = 0; i < d_; ++i) c *= m_;
    return c;
  }

  std::size_t cell_of(std::span<const double> p) const {
    std::size_t index = 0;
    for (int i = d_ - 1; i >= 0; --i) {
      auto a = static_cast<std::size_t>(p[i] * static_cast<double>(m_));
      index = index * m_ + std::min(a, m_ - 1);
    }
    return index;
  }

  // Distinct cells within one step (mod m) of `cell` along every axis.
  void neighbor_cells(std::size_t cell, std::vector<std::size_t>& out) const {
    std::vector<std::size_t> coord(d_);
    for (int i = 0; i < d_; ++i) {
      coord[i] = cell % m_;
      cell /= m_;
    }
    out.clear();
    std::size_t combos = 1;
    for (int i = 0; i < d_; ++i) combos *= 3;
    for (std::size_t c = 0; c < combos; ++c) {
      std::size_t rest = c;
      std::size_t index = 0;
      std::size_t stride = 1;
      for (int i = 0; i < d_; ++i) {
        const std::size_t step = rest % 3;
        rest /= 3;
        const std::size_t a = (coord[i] + m_ + step - 1) % m_;
        index += a * stride;
        stride *= m_;
      }
      out.push_back(index);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }

 private:
  int d_;
  std::size_t m_ = 1;
};

}  // namespace

// ---------------------------------------------------------------------------
// Graph

Graph::Graph(int dimension, double radius, double expected_n, std::vector<double> positions,
             std::span<const Edge> edges)
    : dimension_(dimension),
      radius_(radius),
      expected_n_(expected_n),
      positions_(std::move(positions)) {
  if (dimension_ < 1) throw UsageError("geometric graph needs dimension >= 1");
  if (!(radius_ >= 0.0)) throw UsageError("radius must be non-negative");
  if (!(radius_ < 0.25)) throw ModelDomainError("radius must be < 1/4");
  if (!(expected_n_ >= 0.0)) throw UsageError("expected n must be non-negative");
  if (positions_.size() % static_cast<std::size_t>(dimension_) != 0) {
    throw UsageError("position array length is not a multiple of the dimension");
  }
  for (double c : positions_) {
    if (!(c >= 0.0 && c < 1.0)) throw UsageError("position coordinate outside [0,1)");
  }
  const std::size_t n = positions_.size() / static_cast<std::size_t>(dimension_);

  const auto arcs = directed(edges);
  offsets_.assign(n + 1, 0);
  for (auto [a, b] : arcs) {
    if (a >= n || b >= n) throw UsageError("edge endpoint out of range");
    if (a == b) throw UsageError("self-loop on vertex " + std::to_string(a));
    ++offsets_[a + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  neighbors_.reserve(arcs.size());
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (i > 0 && arcs[i] == arcs[i - 1]) {
      throw UsageError("duplicate edge (" + std::to_string(arcs[i].first) + ", " +
                       std::to_string(arcs[i].second) + ")");
    }
    neighbors_.push_back(arcs[i].second);
  }
}

Graph Graph::from_edges(std::size_t vertex_count, std::span<const Edge> edges) {
  // Build as a 1-d graph with dummy positions, then drop the geometry.
  Graph g(1, 0.0, static_cast<double>(vertex_count), std::vector<double>(vertex_count, 0.0),
          edges);
  g.dimension_ = 0;
  g.positions_.clear();
  return g;
}

ModelParams Graph::model_params() const {
  if (dimension_ < 1) throw UsageError("abstract graph has no model parameters");
  return ModelParams::from_radius(expected_n_, dimension_, radius_);
}

std::span<const double> Graph::position(Vertex v) const {
  if (dimension_ < 1) throw UsageError("abstract graph has no positions");
  if (v >= vertex_count()) throw UsageError("vertex out of range");
  return std::span<const double>(positions_).subspan(
      static_cast<std::size_t>(v) * dimension_, dimension_);
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  if (v >= vertex_count()) throw UsageError("vertex " + std::to_string(v) + " out of range");
  return std::span<const Vertex>(neighbors_).subspan(offsets_[v], offsets_[v + 1] - offsets_[v]);
}

std::size_t Graph::degree(Vertex v) const { return neighbors(v).size(); }

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto nu = neighbors(u);
  return std::binary_search(nu.begin(), nu.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex i = 0; i < vertex_count(); ++i) {
    for (Vertex j : neighbors(i)) {
      if (i < j) out.emplace_back(i, j);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Generation

Graph build_geometric_graph(int dimension, double radius, double expected_n,
                            std::vector<double> positions) {
  if (dimension < 1) throw UsageError("dimension must be >= 1");
  if (!(radius < 0.25)) throw ModelDomainError("radius must be < 1/4");
  const auto d = static_cast<std::size_t>(dimension);
  const std::size_t n = positions.size() / d;
  const auto point = [&](std::size_t v) {
    return std::span<const double>(positions).subspan(v * d, d);
  };

  const CellGrid grid(dimension, radius, n);
  const std::size_t cells = grid.cell_count();
  std::vector<std::size_t> cell_of(n);
  std::vector<std::size_t> start(cells + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    for (double c : point(v)) {
      if (!(c >= 0.0 && c < 1.0)) throw UsageError("position coordinate outside [0,1)");
    }
    cell_of[v] = grid.cell_of(point(v));
    ++start[cell_of[v] + 1];
  }
  std::partial_sum(start.begin(), start.end(), start.begin());
  std::vector<Vertex> members(n);
  {
    std::vector<std::size_t> fill(start.begin(), start.end() - 1);
    for (std::size_t v = 0; v < n; ++v) members[fill[cell_of[v]]++] = static_cast<Vertex>(v);
  }

  std::vector<Edge> edges;
  std::vector<std::size_t> around;
  for (std::size_t cell = 0; cell < cells; ++cell) {
    if (start[cell] == start[cell + 1]) continue;
    grid.neighbor_cells(cell, around);
    for (std::size_t a = start[cell]; a < start[cell + 1]; ++a) {
      const Vertex p = members[a];
      for (std::size_t other : around) {
        for (std::size_t b = start[other]; b < start[other + 1]; ++b) {
          const Vertex q = members[b];
          if (q > p && torus_distance(point(p), point(q)) <= radius) edges.emplace_back(p, q);
        }
      }
    }
  }
  return Graph(dimension, radius, expected_n, std::move(positions), edges);
}

Graph sample_instance(const ModelParams& params, std::uint64_t seed,
                      const SampleOptions& options) {
  const int d = params.dimension();
  std::size_t n = 0;
  if (options.fixed_vertex_count) {
    n = *options.fixed_vertex_count;
  } else {
    Rng rng = substream(seed, "poisson");
    std::poisson_distribution<long long> poisson(params.n());
    n = static_cast<std::size_t>(poisson(rng));
  }
  if (n > std::numeric_limits<Vertex>::max()) throw UsageError("vertex count too large");

  Rng rng = substream(seed, "positions");
  std::vector<double> positions(n * static_cast<std::size_t>(d));
  for (double& c : positions) c = uniform01(rng);
  return build_geometric_graph(d, params.radius(), params.n(), std::move(positions));
}

// ---------------------------------------------------------------------------
// Planting

namespace {

// Rebuilds the CSR arrays with arcs added and removed.
Graph rebuild(const Graph& base, std::span<const Edge> add, std::span<const Edge> remove) {
  auto edges = base.edges();
  if (!remove.empty()) {
    std::vector<Edge> drop(remove.begin(), remove.end());
    for (auto& e : drop) e = ordered(e.first, e.second);
    std::sort(drop.begin(), drop.end());
    for (const auto& e : drop) {
      if (!std::binary_search(edges.begin(), edges.end(), e)) {
        throw UsageError("cannot remove absent edge (" + std::to_string(e.first) + ", " +
                         std::to_string(e.second) + ")");
      }
    }
    std::vector<Edge> kept;
    kept.reserve(edges.size());
    std::set_difference(edges.begin(), edges.end(), drop.begin(), drop.end(),
                        std::back_inserter(kept));
    edges = std::move(kept);
  }
  edges.insert(edges.end(), add.begin(), add.end());
  std::vector<double> positions(base.positions().begin(), base.positions().end());
  if (base.dimension() == 0) return Graph::from_edges(base.vertex_count(), edges);
  return Graph(base.dimension(), base.radius(), base.expected_n(), std::move(positions), edges);
}

}  // namespace

PlantedInstance plant_clique_on(const Graph& graph, std::vector<Vertex> clique) {
  std::sort(clique.begin(), clique.end());
  clique.erase(std::unique(clique.begin(), clique.end()), clique.end());
  if (clique.size() < 2) throw UsageError("planted clique needs at least 2 vertices");
  if (clique.back() >= graph.vertex_count()) throw UsageError("clique vertex out of range");

  std::vector<Edge> missing;
  for (std::size_t a = 0; a < clique.size(); ++a) {
    for (std::size_t b = a + 1; b < clique.size(); ++b) {
      if (!graph.adjacent(clique[a], clique[b])) missing.emplace_back(clique[a], clique[b]);
    }
  }
  PlantedInstance out{missing.empty() ? graph : rebuild(graph, missing, {}), std::move(clique),
                      std::move(missing)};
  return out;
}

PlantedInstance plant_clique(const Graph& graph, std::size_t k, std::uint64_t seed) {
  if (k < 2) throw UsageError("planted clique size must be >= 2");
  const std::size_t n = graph.vertex_count();
  if (k > n) {
    throw InstanceError("clique size " + std::to_string(k) + " exceeds vertex count " +
                        std::to_string(n));
  }
  Rng rng = substream(seed, "clique");
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  for (std::size_t i = 0; i < k; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, n - 1);
    std::swap(order[i], order[pick(rng)]);
  }
  order.resize(k);
  return plant_clique_on(graph, std::move(order));
}

Graph remove_edges(const Graph& graph, std::span<const Edge> edges) {
  return rebuild(graph, {}, edges);
}

// ---------------------------------------------------------------------------
// Queries

std::vector<Vertex> common_neighbors(const Graph& graph, Vertex i, Vertex j) {
  if (i == j) throw UsageError("common_neighbors: i == j");
  const auto a = graph.neighbors(i);
  const auto b = graph.neighbors(j);
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool is_clique(const Graph& graph, std::span<const Vertex> vertices, std::uint64_t* probes) {
  std::uint64_t count = 0;
  bool ok = true;
  for (std::size_t a = 0; a < vertices.size() && ok; ++a) {
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      ++count;
      if (!graph.adjacent(vertices[a], vertices[b])) {
        ok = false;
        break;
      }
    }
  }
  if (probes != nullptr) *probes += count;
  return ok;
}

}  // namespace pclique
