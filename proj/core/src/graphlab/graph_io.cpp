#include "ramcut/graphlab/graph_io.hpp"

#include "ramcut/error.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace ramcut::graphlab {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream stream(line.substr(0, line.find('#')));
  std::string token;
  while (stream >> token) out.push_back(token);
  return out;
}

std::uint64_t parse_count(const std::string& token, std::size_t line, const char* what) {
  std::uint64_t value = 0;
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || end != token.data() + token.size()) {
    throw ParseError(std::string("expected non-negative integer for ") + what + ", got '" + token + "'", line);
  }
  return value;
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  return in;
}

}  // namespace

AnyGraph load_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string> header;
  while (header.empty() && std::getline(in, line)) {
    ++line_no;
    header = tokens_of(line);
  }
  if (header.empty()) throw ParseError("missing 'graph <n> <k> <directed|undirected>' header", line_no);
  if (header.size() != 4 || header[0] != "graph") {
    throw ParseError("header must read 'graph <n> <k> <directed|undirected>'", line_no);
  }
  const auto n = parse_count(header[1], line_no, "n");
  const auto k = parse_count(header[2], line_no, "k");
  const bool directed = header[3] == "directed";
  if (!directed && header[3] != "undirected") {
    throw ParseError("orientation must be 'directed' or 'undirected', got '" + header[3] + "'", line_no);
  }
  if (n > 0xFFFFFFFFull) throw ParseError("vertex count too large", line_no);

  std::vector<std::pair<Vertex, Vertex>> edges;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = tokens_of(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 2) throw ParseError("edge line must contain exactly two vertices", line_no);
    const auto u = parse_count(tokens[0], line_no, "vertex");
    const auto v = parse_count(tokens[1], line_no, "vertex");
    if (u >= n || v >= n) throw ParseError("vertex out of range [0, " + std::to_string(n) + ")", line_no);
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (directed) return RegularDigraph(n, k, edges);
  return RegularGraph(n, k, edges);
}

AnyGraph load_graph_file(const std::string& path) {
  auto in = open_or_throw(path);
  return load_graph(in);
}

std::vector<std::uint32_t> load_coloring(std::istream& in, std::size_t n) {
  std::vector<std::uint32_t> colors(n, 0);
  std::vector<bool> assigned(n, false);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = tokens_of(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 2) throw ParseError("coloring line must read 'v c'", line_no);
    const auto v = parse_count(tokens[0], line_no, "vertex");
    const auto c = parse_count(tokens[1], line_no, "color");
    if (v >= n) throw ParseError("vertex out of range [0, " + std::to_string(n) + ")", line_no);
    if (assigned[v]) throw ParseError("vertex " + std::to_string(v) + " colored twice", line_no);
    if (c > 0xFFFFFFFFull) throw ParseError("color too large", line_no);
    assigned[v] = true;
    colors[v] = static_cast<std::uint32_t>(c);
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (!assigned[v]) throw ParseError("vertex " + std::to_string(v) + " has no color", 0);
  }
  return colors;
}

std::vector<std::uint32_t> load_coloring_file(const std::string& path, std::size_t n) {
  auto in = open_or_throw(path);
  return load_coloring(in, n);
}

void write_graph(std::ostream& out, const RegularGraph& g) {
  out << "graph " << g.vertex_count() << ' ' << g.degree() << " undirected\n";
  for (const auto& [u, v] : g.edge_list()) out << u << ' ' << v << '\n';
}

void write_graph(std::ostream& out, const RegularDigraph& g) {
  out << "graph " << g.vertex_count() << ' ' << g.degree() << " directed\n";
  for (const auto& [u, v] : g.arc_list()) out << u << ' ' << v << '\n';
}

}  // namespace ramcut::graphlab
