#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "pclique/rgg.hpp"

namespace pclique {

enum class Method { kVd, kCn };
std::string_view to_string(Method m);

struct WorkCounters {
  std::uint64_t vertices_scanned = 0;
  std::uint64_t edges_scanned = 0;
  std::uint64_t clique_checks = 0;
  std::uint64_t adjacency_probes = 0;
};

struct RecoveryResult {
  Method method = Method::kVd;
  std::vector<Vertex> output;  // sorted; empty when CN finds nothing
  bool exact_match = false;    // filled in by evaluate()
  std::size_t overlap = 0;     // |output ∩ truth|, filled in by evaluate()
  WorkCounters work;
};

// The k vertices of largest degree, chosen with a size-k min-heap in one pass.
// Equal degrees prefer the smaller vertex id. Requires 1 <= k <= N.
RecoveryResult vd_recover(const Graph& graph, std::size_t k);

// Scans edges (i, j), i < j, lexicographically and returns {i, j} ∪ Z_ij for
// the first edge whose common neighbourhood Z_ij has exactly k - 2 vertices
// and is a clique. Returns an empty set when no edge qualifies. Requires k >= 2.
RecoveryResult cn_recover(const Graph& graph, std::size_t k);

RecoveryResult evaluate(RecoveryResult result, std::span<const Vertex> truth);

}  // namespace pclique
