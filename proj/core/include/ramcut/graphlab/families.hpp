#pragma once

#include "ramcut/graphlab/graph.hpp"

#include <cstdint>

namespace ramcut::graphlab {

/// C_n, 2-regular. Requires n >= 3.
RegularGraph cycle_graph(std::size_t n);

/// K_n, (n-1)-regular. Requires n >= 2.
RegularGraph complete_graph(std::size_t n);

/// Q_m on 2^m vertices; v ~ v xor 2^i. Requires 1 <= m <= 24.
RegularGraph hypercube(unsigned m);

RegularGraph petersen_graph();

/// Random loopless 3-regular multigraph on `expander_vertices` (configuration
/// model, repeated edges kept) with a ladder of `ladder_vertices` spliced
/// into two of its edges. The long ladder forces a tiny spectral gap.
RegularGraph ladder_spliced_cubic(std::size_t expander_vertices, std::size_t ladder_vertices, std::uint64_t seed);

}  // namespace ramcut::graphlab
