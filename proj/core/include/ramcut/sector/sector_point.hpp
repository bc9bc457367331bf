#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace ramcut::sector {

/// A vertex of the sector N^{d-1}.
///
/// Stored in both exponent form (alpha: descending, length d, last entry 0)
/// and difference form (x[i] = alpha[i] - alpha[i+1], length d-1).
class SectorPoint {
 public:
  SectorPoint() = default;

  /// Throws DomainError unless alpha is descending with alpha.back() == 0.
  static SectorPoint from_alpha(std::vector<long> alpha);
  /// Throws DomainError unless every entry is >= 0.
  static SectorPoint from_x(std::vector<long> x);
  static SectorPoint origin(unsigned d);

  unsigned rank() const noexcept { return static_cast<unsigned>(alpha_.size()); }
  const std::vector<long>& alpha() const noexcept { return alpha_; }
  const std::vector<long>& x() const noexcept { return x_; }

  /// Some x_i == 0.
  bool on_boundary() const noexcept;
  long r_norm() const;

  /// "(x_1,...,x_{d-1})"
  std::string to_string() const;

  friend bool operator==(const SectorPoint& a, const SectorPoint& b) { return a.x_ == b.x_; }
  friend auto operator<=>(const SectorPoint& a, const SectorPoint& b) { return a.x_ <=> b.x_; }

 private:
  std::vector<long> alpha_;
  std::vector<long> x_;
};

/// Sorts raw descending and subtracts the last entry, returning the sector
/// point the apartment vertex folds to. Throws DomainError if raw.size() != d.
SectorPoint fold(unsigned d, std::span<const long> raw);

}  // namespace ramcut::sector
