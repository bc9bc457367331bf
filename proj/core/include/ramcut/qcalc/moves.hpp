#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace ramcut::qcalc {

/// Largest rank d accepted by the enumeration routines (2^d - 2 moves).
inline constexpr unsigned kMaxRank = 20;

/// One apartment step: a non-constant binary vector gamma of length d.
struct GammaMove {
  std::vector<int> gamma;
  /// Inversion count #{(i, j) : i < j, gamma[i] = 1, gamma[j] = 0}.
  unsigned z_exponent = 0;
  /// Difference-coordinate increment, gamma_prime[i] = gamma[i] - gamma[i+1].
  std::vector<int> gamma_prime;
  /// R-norm of gamma_prime.
  long r_increment = 0;
};

/// All 2^d - 2 moves, ordered by the integer whose bit i (from the most
/// significant of d bits) is gamma[i]. Throws DomainError unless 2 <= d <= kMaxRank.
std::vector<GammaMove> enumerate_moves(unsigned d);

/// Weights (j+1)(d-1-j) of the R-norm, 0-based j = 0..d-2.
std::vector<long> r_weights(unsigned d);

/// R(x) = sum_j (j+1)(d-1-j) x[j]. Requires x.size() == d-1.
long r_norm(unsigned d, std::span<const long> x);
long r_norm(unsigned d, std::span<const int> x);

}  // namespace ramcut::qcalc
