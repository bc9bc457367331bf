#pragma once

#include "ramcut/cayley/generators.hpp"
#include "ramcut/graphlab/graph.hpp"
#include "ramcut/qcalc/rational.hpp"

#include <cstddef>
#include <vector>

namespace ramcut::cayley {

struct CayleyOptions {
  /// Adds missing inverses instead of rejecting a non-symmetric set.
  bool auto_symmetrize = false;
};

struct CayleyGraph {
  graphlab::RegularGraph graph;
  /// elements[v] is the group element of vertex v; vertex 0 is the identity.
  std::vector<ProjectiveMatrix> elements;
  /// Generators actually used (after symmetrization).
  std::vector<ProjectiveMatrix> generators;
  /// Every generator determinant is a d-th power, so the closure lies in PSL_d.
  bool in_psl = false;

  std::size_t order() const noexcept { return elements.size(); }
};

/// BFS closure from the identity under right multiplication; each layer is
/// sorted before numbering, so vertex ids are reproducible. Edges {g, gs}.
/// Throws DomainError for a non-symmetric set (unless auto_symmetrize) and
/// CapExceeded, carrying the frontier size, once more than `cap` elements
/// are discovered.
CayleyGraph cayley_graph(const GeneratorSet& gens, std::size_t cap, const CayleyOptions& options = {});

/// |PGL_d(F_q)| = prod_{i<d} (q^d - q^i) / (q - 1).
BigInt pgl_order(unsigned d, std::uint64_t q);

/// |PSL_d(F_q)| = |PGL_d(F_q)| / gcd(d, q - 1).
BigInt psl_order(unsigned d, std::uint64_t q);

}  // namespace ramcut::cayley
