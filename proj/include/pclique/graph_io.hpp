#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

#include "pclique/rgg.hpp"

// Text format, one record per line:
//
//   rggraph v1 <d> <r> <N>
//   <x_1> ... <x_d>            N lines, 17 significant digits
//   edges <M>
//   <i> <j>                    M lines, i < j
//
// A planted instance appends
//
//   clique <k>
//   <v_1> ... <v_k>            sorted
//   planted <P>
//   <i> <j>                    P lines, i < j
//
// The header does not carry n; a graph read back has expected_n() == N.

namespace pclique {

void write_graph(std::ostream& out, const Graph& graph);
void write_instance(std::ostream& out, const PlantedInstance& instance);

// A graph file, or an instance file with its clique section.
struct LoadedInstance {
  Graph graph;
  std::optional<std::vector<Vertex>> clique;
  std::vector<Edge> planted_edges;
};

// Throws ParseError (with the 1-based line number) on malformed input.
LoadedInstance read_instance(std::istream& in);

// Throws UsageError when the file cannot be opened.
LoadedInstance load_instance(const std::filesystem::path& path);
void save_graph(const std::filesystem::path& path, const Graph& graph);
void save_instance(const std::filesystem::path& path, const PlantedInstance& instance);

}  // namespace pclique
