#include "pclique/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

#include <fmt/format.h>

#include "pclique/errors.hpp"

namespace pclique {
namespace {

void write_body(std::ostream& out, const Graph& graph) {
  if (graph.dimension() < 1) throw UsageError("only geometric graphs can be written");
  const std::size_t n = graph.vertex_count();
  out << fmt::format("rggraph v1 {} {:.17g} {}\n", graph.dimension(), graph.radius(), n);
  for (Vertex v = 0; v < n; ++v) {
    const auto p = graph.position(v);
    std::string line;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i > 0) line += ' ';
      line += fmt::format("{:.17g}", p[i]);
    }
    out << line << '\n';
  }
  const auto edges = graph.edges();
  out << "edges " << edges.size() << '\n';
  for (auto [a, b] : edges) out << a << ' ' << b << '\n';
}

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next line split on whitespace; false at end of input.
  bool next(std::vector<std::string_view>& tokens) {
    if (!std::getline(in_, buffer_)) return false;
    ++line_;
    tokens.clear();
    std::string_view rest = buffer_;
    while (!rest.empty()) {
      const auto start = rest.find_first_not_of(" \t\r");
      if (start == std::string_view::npos) break;
      rest.remove_prefix(start);
      const auto end = rest.find_first_of(" \t\r");
      tokens.push_back(rest.substr(0, end));
      rest.remove_prefix(end == std::string_view::npos ? rest.size() : end);
    }
    return true;
  }

  std::vector<std::string_view> expect(std::string_view what) {
    std::vector<std::string_view> tokens;
    if (!next(tokens)) fail("unexpected end of input, expected " + std::string(what));
    return tokens;
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, what); }

  std::size_t line() const { return line_; }

  template <class T>
  T number(std::string_view token) const {
    T value{};
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      fail("malformed number '" + std::string(token) + "'");
    }
    return value;
  }

  // "<keyword> <count>"
  std::size_t section(std::string_view keyword) {
    const auto tokens = expect(keyword);
    if (tokens.size() != 2 || tokens[0] != keyword) {
      fail("expected '" + std::string(keyword) + " <count>'");
    }
    return number<std::size_t>(tokens[1]);
  }

  std::vector<Edge> pairs(std::size_t count, std::size_t n, std::string_view what) {
    std::vector<Edge> out;
    out.reserve(count);
    for (std::size_t e = 0; e < count; ++e) {
      const auto tokens = expect(what);
      if (tokens.size() != 2) fail("expected two vertex ids");
      const auto a = number<Vertex>(tokens[0]);
      const auto b = number<Vertex>(tokens[1]);
      if (!(a < b)) fail("pair must satisfy i < j");
      if (b >= n) fail("vertex id out of range");
      if (!out.empty() && !(out.back() < Edge{a, b})) fail("pairs must be sorted and distinct");
      out.emplace_back(a, b);
    }
    return out;
  }

 private:
  std::istream& in_;
  std::string buffer_;
  std::size_t line_ = 0;
};

}  // namespace

void write_graph(std::ostream& out, const Graph& graph) { write_body(out, graph); }

void write_instance(std::ostream& out, const PlantedInstance& instance) {
  write_body(out, instance.graph);
  out << "clique " << instance.clique.size() << '\n';
  for (std::size_t i = 0; i < instance.clique.size(); ++i) {
    if (i > 0) out << ' ';
    out << instance.clique[i];
  }
  out << '\n';
  out << "planted " << instance.planted_edges.size() << '\n';
  for (auto [a, b] : instance.planted_edges) out << a << ' ' << b << '\n';
}

LoadedInstance read_instance(std::istream& in) {
  LineReader reader(in);
  auto header = reader.expect("header");
  if (header.size() != 5 || header[0] != "rggraph" || header[1] != "v1") {
    reader.fail("expected header 'rggraph v1 <d> <r> <N>'");
  }
  const int d = reader.number<int>(header[2]);
  const double r = reader.number<double>(header[3]);
  const auto n = reader.number<std::size_t>(header[4]);
  if (d < 1) reader.fail("dimension must be >= 1");
  if (!(r >= 0.0 && r < 0.25)) reader.fail("radius must lie in [0, 1/4)");

  std::vector<double> positions;
  positions.reserve(n * static_cast<std::size_t>(d));
  for (std::size_t v = 0; v < n; ++v) {
    const auto tokens = reader.expect("position");
    if (tokens.size() != static_cast<std::size_t>(d)) {
      reader.fail("expected " + std::to_string(d) + " coordinates");
    }
    for (auto t : tokens) {
      const double c = reader.number<double>(t);
      if (!(c >= 0.0 && c < 1.0)) reader.fail("coordinate outside [0,1)");
      positions.push_back(c);
    }
  }
  const auto edges = reader.pairs(reader.section("edges"), n, "edge");

  LoadedInstance out{Graph(d, r, static_cast<double>(n), std::move(positions), edges), {}, {}};

  std::vector<std::string_view> tokens;
  while (reader.next(tokens)) {
    if (tokens.empty()) continue;
    if (tokens.size() != 2 || tokens[0] != "clique") reader.fail("expected 'clique <k>' or end of file");
    const auto k = reader.number<std::size_t>(tokens[1]);
    const auto ids = reader.expect("clique vertices");
    if (ids.size() != k) reader.fail("expected " + std::to_string(k) + " clique vertices");
    std::vector<Vertex> clique;
    for (auto t : ids) {
      const auto v = reader.number<Vertex>(t);
      if (v >= n) reader.fail("clique vertex out of range");
      if (!clique.empty() && !(clique.back() < v)) reader.fail("clique must be sorted and distinct");
      clique.push_back(v);
    }
    if (k < 2) reader.fail("clique needs at least 2 vertices");
    if (!is_clique(out.graph, clique)) reader.fail("clique vertices are not pairwise adjacent");
    out.planted_edges = reader.pairs(reader.section("planted"), n, "planted edge");
    for (auto [a, b] : out.planted_edges) {
      if (!std::binary_search(clique.begin(), clique.end(), a) ||
          !std::binary_search(clique.begin(), clique.end(), b)) {
        reader.fail("planted edge outside the clique");
      }
      if (!out.graph.adjacent(a, b)) reader.fail("planted edge missing from the edge list");
    }
    out.clique = std::move(clique);
    while (reader.next(tokens)) {
      if (!tokens.empty()) reader.fail("trailing content after planted section");
    }
    break;
  }
  return out;
}

LoadedInstance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path.string());
  return read_instance(in);
}

void save_graph(const std::filesystem::path& path, const Graph& graph) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path.string());
  write_graph(out, graph);
}

void save_instance(const std::filesystem::path& path, const PlantedInstance& instance) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path.string());
  write_instance(out, instance);
}

}  // namespace pclique
