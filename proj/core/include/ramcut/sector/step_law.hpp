#pragma once

#include "ramcut/qcalc/rational.hpp"
#include "ramcut/sector/sector_point.hpp"

#include <utility>
#include <vector>

namespace ramcut::sector {

/// Exact one-step law of the projected walk from `source`.
/// Targets are distinct and sorted; masses sum to exactly 1.
struct StepLaw {
  SectorPoint source;
  std::vector<std::pair<SectorPoint, Rational>> entries;

  Rational mass_of(const SectorPoint& target) const;
};

/// Each move gamma sends alpha to fold(alpha + gamma) with mass
/// q^{Z_gamma} / deg; coinciding targets have their masses summed.
/// Throws DomainError for q < 2 or d outside [2, kMaxRank].
StepLaw transition_distribution(unsigned d, const Rational& q, const SectorPoint& p);

/// Interior masses of the +1 and -1 moves of one coordinate.
struct CoordinateBias {
  Rational up;
  Rational down;
  bool ratio_is_q = false;  ///< up == q * down, exactly
};

/// Per-coordinate check that, off the boundary, a unit increase of x_i is
/// exactly q times as likely as a unit decrease.
std::vector<CoordinateBias> bias_check(unsigned d, const Rational& q);

}  // namespace ramcut::sector
