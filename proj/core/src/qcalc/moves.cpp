#include "ramcut/qcalc/moves.hpp"

#include "ramcut/error.hpp"

#include <string>

namespace ramcut::qcalc {

namespace {

void check_rank(unsigned d) {
  if (d < 2 || d > kMaxRank) {
    throw DomainError("rank d must lie in [2, " + std::to_string(kMaxRank) + "], got " + std::to_string(d));
  }
}

template <typename T>
long weighted_sum(unsigned d, std::span<const T> x) {
  check_rank(d);
  if (x.size() != d - 1) {
    throw DomainError("sector vector must have length d-1 = " + std::to_string(d - 1) + ", got " +
                      std::to_string(x.size()));
  }
  long total = 0;
  for (unsigned j = 0; j + 1 < d; ++j) total += static_cast<long>(j + 1) * static_cast<long>(d - 1 - j) * x[j];
  return total;
}

}  // namespace

std::vector<GammaMove> enumerate_moves(unsigned d) {
  check_rank(d);
  const std::uint32_t full = (std::uint32_t{1} << d) - 1;
  const auto weights = r_weights(d);
  std::vector<GammaMove> moves;
  moves.reserve(full - 1);
  for (std::uint32_t bits = 1; bits < full; ++bits) {
    GammaMove move;
    move.gamma.resize(d);
    for (unsigned i = 0; i < d; ++i) move.gamma[i] = static_cast<int>((bits >> (d - 1 - i)) & 1u);
    unsigned ones_seen = 0;
    for (unsigned i = 0; i < d; ++i) {
      if (move.gamma[i] == 1) {
        ++ones_seen;
      } else {
        move.z_exponent += ones_seen;
      }
    }
    move.gamma_prime.resize(d - 1);
    for (unsigned i = 0; i + 1 < d; ++i) {
      move.gamma_prime[i] = move.gamma[i] - move.gamma[i + 1];
      move.r_increment += weights[i] * move.gamma_prime[i];
    }
    moves.push_back(std::move(move));
  }
  return moves;
}

std::vector<long> r_weights(unsigned d) {
  check_rank(d);
  std::vector<long> weights(d - 1);
  for (unsigned j = 0; j + 1 < d; ++j) weights[j] = static_cast<long>(j + 1) * static_cast<long>(d - 1 - j);
  return weights;
}

long r_norm(unsigned d, std::span<const long> x) { return weighted_sum(d, x); }
long r_norm(unsigned d, std::span<const int> x) { return weighted_sum(d, x); }

}  // namespace ramcut::qcalc
