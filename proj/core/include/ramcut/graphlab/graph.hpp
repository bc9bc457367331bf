#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ramcut::graphlab {

using Vertex = std::uint32_t;

/// Thrown when a vertex has the wrong degree; names the first offender.
class NotRegularError : public std::runtime_error {
 public:
  NotRegularError(Vertex vertex, std::size_t degree, std::size_t expected, const std::string& kind);

  Vertex vertex() const noexcept { return vertex_; }
  std::size_t degree() const noexcept { return degree_; }

 private:
  Vertex vertex_;
  std::size_t degree_;
};

/// k-regular undirected multigraph stored as n*k neighbor slots.
///
/// Multi-edges appear with multiplicity. A self-loop occupies one slot of its
/// vertex, so the adjacency matrix has A[v][v] = number of loops at v and
/// every row sums to k.
class RegularGraph {
 public:
  /// Builds from an undirected edge list. Throws NotRegularError.
  RegularGraph(std::size_t n, std::size_t k, std::span<const std::pair<Vertex, Vertex>> edges);

  /// Builds from per-vertex neighbor slots (vertex v owns slots [v*k, v*k+k)).
  /// Throws std::invalid_argument if u->v and v->u multiplicities differ.
  static RegularGraph from_neighbor_slots(std::size_t n, std::size_t k, std::vector<Vertex> slots);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t degree() const noexcept { return k_; }
  std::span<const Vertex> neighbors(Vertex v) const noexcept { return {slots_.data() + v * k_, k_}; }

  /// Each undirected edge once: pairs (u, v) with u <= v, repeated by multiplicity.
  std::vector<std::pair<Vertex, Vertex>> edge_list() const;

  bool is_connected() const;
  bool is_bipartite() const;

  /// Assigns colors 0..m-1. Throws std::invalid_argument if the map is not
  /// surjective onto {0..m-1} or has the wrong length.
  void set_coloring(std::vector<std::uint32_t> colors);
  const std::optional<std::vector<std::uint32_t>>& coloring() const noexcept { return coloring_; }
  std::size_t color_count() const noexcept { return color_count_; }

 private:
  RegularGraph() = default;

  std::size_t n_ = 0;
  std::size_t k_ = 0;
  std::vector<Vertex> slots_;
  std::optional<std::vector<std::uint32_t>> coloring_;
  std::size_t color_count_ = 0;
};

/// Digraph with out-degree = in-degree = k at every vertex.
class RegularDigraph {
 public:
  /// Throws NotRegularError naming the first vertex with a bad out- or in-degree.
  RegularDigraph(std::size_t n, std::size_t k, std::span<const std::pair<Vertex, Vertex>> arcs);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t degree() const noexcept { return k_; }
  std::span<const Vertex> out_neighbors(Vertex v) const noexcept { return {slots_.data() + v * k_, k_}; }
  std::vector<std::pair<Vertex, Vertex>> arc_list() const;

 private:
  std::size_t n_ = 0;
  std::size_t k_ = 0;
  std::vector<Vertex> slots_;
};

}  // namespace ramcut::graphlab
