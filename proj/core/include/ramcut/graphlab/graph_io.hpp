#pragma once

#include "ramcut/graphlab/graph.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace ramcut::graphlab {

using AnyGraph = std::variant<RegularGraph, RegularDigraph>;

/// Edge-list format:
///
///     graph <n> <k> <directed|undirected>
///     u v
///     ...
///
/// Vertices are 0-indexed, multi-edges are repeated, blank lines and
/// '#' comments are ignored. Throws ParseError (with line number) or
/// NotRegularError.
AnyGraph load_graph(std::istream& in);
AnyGraph load_graph_file(const std::string& path);

/// One "v c" pair per line; every vertex must be listed exactly once.
std::vector<std::uint32_t> load_coloring(std::istream& in, std::size_t n);
std::vector<std::uint32_t> load_coloring_file(const std::string& path, std::size_t n);

void write_graph(std::ostream& out, const RegularGraph& g);
void write_graph(std::ostream& out, const RegularDigraph& g);

}  // namespace ramcut::graphlab
