#pragma once

#include "ramcut/qcalc/rational.hpp"
#include "ramcut/sector/rng.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace ramcut::sector {

/// Largest rank supported by the Monte Carlo kernel.
inline constexpr unsigned kMaxWalkRank = 10;

/// Walker's alias method: O(1) sampling from a fixed finite law.
class AliasTable {
 public:
  explicit AliasTable(std::span<const double> weights);

  std::size_t size() const noexcept { return threshold_.size(); }
  /// `column_bits` picks the column, `coin` (in [0,1)) decides alias vs. own.
  std::size_t sample(std::uint64_t column_bits, double coin) const noexcept {
    __extension__ using wide = unsigned __int128;
    const auto column = static_cast<std::size_t>((static_cast<wide>(column_bits) * threshold_.size()) >> 64);
    return coin < threshold_[column] ? column : alias_[column];
  }

 private:
  std::vector<double> threshold_;
  std::vector<std::size_t> alias_;
};

/// Mutable position of one walker, in difference coordinates.
struct WalkerState {
  std::array<long, kMaxWalkRank - 1> x{};
  long rho = 0;            ///< R-norm of x
  unsigned zero_count = 0; ///< number of coordinates equal to 0
};

/// Immutable sampling kernel of the projected walk; shareable across threads.
class SectorChain {
 public:
  /// Throws DomainError unless 2 <= d <= kMaxWalkRank and q >= 2.
  SectorChain(unsigned d, const Rational& q);

  unsigned rank() const noexcept { return d_; }
  WalkerState origin() const noexcept;

  /// Advances one step and returns the R-norm increment.
  long advance(WalkerState& state, StreamRng& rng) const noexcept;

  /// Possible interior R-increments (support of the increment law).
  std::span<const long> increment_support() const noexcept { return support_; }

 private:
  struct Move {
    std::array<int, kMaxWalkRank> gamma{};
    std::array<int, kMaxWalkRank - 1> gamma_prime{};
    long r_increment = 0;
  };

  void fold_step(WalkerState& state, const Move& move) const noexcept;

  unsigned d_;
  std::vector<Move> moves_;
  std::vector<long> weights_;
  std::vector<long> support_;
  AliasTable table_;
};

}  // namespace ramcut::sector
