#pragma once

#include "ramcut/graphlab/graph.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <utility>

namespace ramcut::graphlab {

struct CollisionReport {
  bool collision_free = true;
  /// First ordered pair (u, v), scanning u then v, joined by two or more
  /// directed walks of lengths 1..L. Closed walks count, so u == v is possible.
  std::optional<std::pair<Vertex, Vertex>> first_violation;
  unsigned horizon = 0;
};

/// Walk counting with counters saturating at 2. Exact for digraphs whose
/// L-neighborhoods are acyclic; conservative otherwise. Throws DomainError if L == 0.
CollisionReport collision_free_check(const RegularDigraph& graph, unsigned L);

/// Same check on an arbitrary digraph given by its arcs (for local pieces
/// such as directed paths, which are not regular).
CollisionReport collision_free_check(std::size_t n, std::span<const std::pair<Vertex, Vertex>> arcs, unsigned L);

}  // namespace ramcut::graphlab
