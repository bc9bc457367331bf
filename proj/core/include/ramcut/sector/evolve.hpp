#pragma once

#include "ramcut/qcalc/rational.hpp"
#include "ramcut/sector/sector_point.hpp"

#include <cstddef>
#include <map>

namespace ramcut::sector {

struct EvolveOptions {
  /// Maximum number of simultaneously tracked states; exceeding it throws CapExceeded.
  std::size_t state_cap = 2'000'000;
};

/// Distribution at the horizon restricted to {R(x) <= r_max}. Mass that
/// crossed the radius is absorbed into `truncated_mass`, so
/// sum(distribution) + truncated_mass == 1.
template <typename Scalar>
struct SectorDistribution {
  unsigned horizon = 0;
  long r_max = 0;
  std::map<SectorPoint, Scalar> distribution;
  Scalar truncated_mass{};

  /// P[R(X_T) = r] for every r carrying mass.
  std::map<long, Scalar> r_histogram() const {
    std::map<long, Scalar> out;
    for (const auto& [point, mass] : distribution) out[point.r_norm()] += mass;
    return out;
  }
};

using ExactEvolution = SectorDistribution<Rational>;
using FloatEvolution = SectorDistribution<double>;

/// Exact forward evolution of the projected walk in rational arithmetic.
ExactEvolution evolve_exact(unsigned d, const Rational& q, const SectorPoint& start, unsigned horizon, long r_max,
                            const EvolveOptions& options = {});

/// Same chain in double precision, for horizons where exact masses get large.
FloatEvolution evolve_float(unsigned d, const Rational& q, const SectorPoint& start, unsigned horizon, long r_max,
                            const EvolveOptions& options = {});

}  // namespace ramcut::sector
