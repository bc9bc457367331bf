#pragma once

#include "ramcut/cayley/field.hpp"
#include "ramcut/cayley/matrix.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace ramcut::cayley {

struct GeneratorSet {
  FiniteField field{2};
  unsigned d = 0;
  /// With multiplicity, in file order.
  std::vector<ProjectiveMatrix> elements;
  /// Every class g occurs as often as g^{-1}.
  bool symmetric = false;
};

bool is_symmetric(const FiniteField& field, const std::vector<ProjectiveMatrix>& elements);

/// Appends inverses until each class g occurs as often as g^{-1}.
GeneratorSet symmetrize(GeneratorSet gens);

/// Generator file:
///
///     gens <d> <p> <e>
///     modulus c_0 c_1 ... c_e      (only when e > 1)
///     <d*d entries, row-major>     (one matrix per line)
///
/// Blank lines and '#' comments are ignored. Throws ParseError with a line
/// number, or DomainError for singular matrices and bad fields.
GeneratorSet load_generators(std::istream& in);
GeneratorSet load_generators_file(const std::string& path);

}  // namespace ramcut::cayley
