#include "pclique/algorithms.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "pclique/errors.hpp"

namespace pclique {

std::string_view to_string(Method m) { return m == Method::kVd ? "VD" : "CN"; }

RecoveryResult vd_recover(const Graph& graph, std::size_t k) {
  const std::size_t n = graph.vertex_count();
  if (k < 1) throw UsageError("vd_recover: k must be >= 1");
  if (k > n) {
    throw UsageError("vd_recover: k = " + std::to_string(k) + " exceeds N = " + std::to_string(n));
  }

  struct Entry {
    std::size_t degree;
    Vertex v;
  };
  // "a ranks above b"; the heap top is the weakest vertex kept so far.
  const auto ranks_above = [](const Entry& a, const Entry& b) {
    return a.degree != b.degree ? a.degree > b.degree : a.v < b.v;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(ranks_above)> heap(ranks_above);

  RecoveryResult result;
  result.method = Method::kVd;
  for (Vertex v = 0; v < n; ++v) {
    const Entry e{graph.degree(v), v};
    ++result.work.vertices_scanned;
    if (heap.size() < k) {
      heap.push(e);
    } else if (ranks_above(e, heap.top())) {
      heap.pop();
      heap.push(e);
    }
  }
  result.output.reserve(k);
  while (!heap.empty()) {
    result.output.push_back(heap.top().v);
    heap.pop();
  }
  std::sort(result.output.begin(), result.output.end());
  return result;
}

namespace {

// |a ∩ b|, giving up once it exceeds limit.
std::size_t bounded_intersection_size(std::span<const Vertex> a, std::span<const Vertex> b,
                                      std::size_t limit) {
  std::size_t count = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      if (++count > limit) return count;
      ++ia;
      ++ib;
    }
  }
  return count;
}

}  // namespace

RecoveryResult cn_recover(const Graph& graph, std::size_t k) {
  if (k < 2) throw UsageError("cn_recover: k must be >= 2");
  const std::size_t target = k - 2;
  const std::size_t n = graph.vertex_count();

  RecoveryResult result;
  result.method = Method::kCn;
  for (Vertex i = 0; i < n; ++i) {
    const auto ni = graph.neighbors(i);
    for (Vertex j : ni) {
      if (j <= i) continue;
      ++result.work.edges_scanned;
      const auto nj = graph.neighbors(j);
      // j ∈ N(i) and Z_ij ⊆ N(i), so both degrees are at least |Z_ij| + 1.
      if (ni.size() < target + 1 || nj.size() < target + 1) continue;
      if (bounded_intersection_size(ni, nj, target) != target) continue;

      auto z = common_neighbors(graph, i, j);
      ++result.work.clique_checks;
      if (is_clique(graph, z, &result.work.adjacency_probes)) {
        z.push_back(i);
        z.push_back(j);
        std::sort(z.begin(), z.end());
        result.output = std::move(z);
        return result;
      }
    }
  }
  return result;
}

RecoveryResult evaluate(RecoveryResult result, std::span<const Vertex> truth) {
  std::vector<Vertex> sorted_truth(truth.begin(), truth.end());
  std::sort(sorted_truth.begin(), sorted_truth.end());
  std::vector<Vertex> common;
  std::set_intersection(result.output.begin(), result.output.end(), sorted_truth.begin(),
                        sorted_truth.end(), std::back_inserter(common));
  result.overlap = common.size();
  result.exact_match = result.output == sorted_truth;
  return result;
}

}  // namespace pclique
