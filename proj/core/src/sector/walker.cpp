#include "ramcut/sector/walker.hpp"

#include "ramcut/error.hpp"
#include "ramcut/qcalc/constants.hpp"
#include "ramcut/qcalc/moves.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace ramcut::sector {

AliasTable::AliasTable(std::span<const double> weights) : threshold_(weights.size()), alias_(weights.size()) {
  const std::size_t m = weights.size();
  if (m == 0) throw DomainError("alias table needs at least one outcome");
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw DomainError("alias table weights must be non-negative");
    total += w;
  }
  if (!(total > 0.0)) throw DomainError("alias table weights must not all be zero");

  std::vector<double> scaled(m);
  std::vector<std::size_t> small, large;
  for (std::size_t i = 0; i < m; ++i) {
    scaled[i] = weights[i] * static_cast<double>(m) / total;
    (scaled[i] < 1.0 ? small : large).push_back(i);
  }
  while (!small.empty() && !large.empty()) {
    const std::size_t s = small.back();
    small.pop_back();
    const std::size_t l = large.back();
    threshold_[s] = scaled[s];
    alias_[s] = l;
    scaled[l] -= 1.0 - scaled[s];
    if (scaled[l] < 1.0) {
      large.pop_back();
      small.push_back(l);
    }
  }
  for (std::size_t i : large) {
    threshold_[i] = 1.0;
    alias_[i] = i;
  }
  for (std::size_t i : small) {
    threshold_[i] = 1.0;
    alias_[i] = i;
  }
}

namespace {

std::vector<double> move_probabilities(unsigned d, const Rational& q) {
  if (d < 2 || d > kMaxWalkRank) {
    throw DomainError("Monte Carlo rank must lie in [2, " + std::to_string(kMaxWalkRank) + "], got " +
                      std::to_string(d));
  }
  if (q < 2) throw DomainError("q must be >= 2, got " + to_string(q));
  const Rational degree = qcalc::vertex_degree(d, q);
  std::vector<double> probabilities;
  for (const auto& move : qcalc::enumerate_moves(d)) probabilities.push_back(to_double(pow(q, move.z_exponent) / degree));
  return probabilities;
}

}  // namespace

SectorChain::SectorChain(unsigned d, const Rational& q)
    : d_(d), table_(move_probabilities(d, q)) {
  weights_ = qcalc::r_weights(d);
  for (const auto& move : qcalc::enumerate_moves(d)) {
    Move m;
    std::copy(move.gamma.begin(), move.gamma.end(), m.gamma.begin());
    std::copy(move.gamma_prime.begin(), move.gamma_prime.end(), m.gamma_prime.begin());
    m.r_increment = move.r_increment;
    moves_.push_back(m);
    support_.push_back(move.r_increment);
  }
  std::sort(support_.begin(), support_.end());
  support_.erase(std::unique(support_.begin(), support_.end()), support_.end());
}

WalkerState SectorChain::origin() const noexcept {
  WalkerState state;
  state.zero_count = d_ - 1;
  return state;
}

void SectorChain::fold_step(WalkerState& state, const Move& move) const noexcept {
  std::array<long, kMaxWalkRank> alpha{};
  alpha[d_ - 1] = 0;
  for (unsigned i = d_ - 1; i-- > 0;) alpha[i] = alpha[i + 1] + state.x[i];
  for (unsigned i = 0; i < d_; ++i) alpha[i] += move.gamma[i];
  std::sort(alpha.begin(), alpha.begin() + d_, std::greater<>());
  // Differences are invariant under subtracting the last entry.
  state.rho = 0;
  state.zero_count = 0;
  for (unsigned i = 0; i + 1 < d_; ++i) {
    state.x[i] = alpha[i] - alpha[i + 1];
    state.rho += weights_[i] * state.x[i];
    if (state.x[i] == 0) ++state.zero_count;
  }
}

long SectorChain::advance(WalkerState& state, StreamRng& rng) const noexcept {
  const std::uint64_t column_bits = rng.next_u64();
  const double coin = rng.uniform();
  const Move& move = moves_[table_.sample(column_bits, coin)];
  const long before = state.rho;
  if (state.zero_count == 0) {
    // Interior: x_i >= 1 and gamma'_i >= -1 keep the point inside the sector.
    unsigned zeros = 0;
    for (unsigned i = 0; i + 1 < d_; ++i) {
      state.x[i] += move.gamma_prime[i];
      if (state.x[i] == 0) ++zeros;
    }
    state.rho += move.r_increment;
    state.zero_count = zeros;
  } else {
    fold_step(state, move);
  }
  return state.rho - before;
}

}  // namespace ramcut::sector
