#pragma once

#include "ramcut/qcalc/constants.hpp"
#include "ramcut/qcalc/rational.hpp"
#include "ramcut/qcalc/schedule.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace ramcut::sector {

struct SimulationConfig {
  unsigned d = 3;
  Rational q = 2;
  std::uint64_t horizon = 0;
  std::uint64_t trajectories = 1;
  std::uint64_t seed = 0;
  /// 0 picks std::thread::hardware_concurrency(). Results do not depend on it.
  unsigned threads = 0;
};

/// Monte Carlo summary of walks started at the origin.
struct WalkStats {
  unsigned d = 0;
  Rational q;
  std::uint64_t trajectory_count = 0;
  std::uint64_t horizon = 0;
  std::uint64_t seed = 0;
  /// R-norm at the horizon, one per trajectory.
  std::vector<long> rho_samples;
  /// Steps (times 0..horizon-1) whose pre-state had some x_i = 0.
  std::vector<std::uint64_t> boundary_visits;
  /// Last time in 0..horizon at which the walker stood on the boundary.
  std::vector<std::uint64_t> last_boundary_step;
  /// R-increments of steps whose pre-state was interior.
  std::map<long, std::uint64_t> interior_increment_histogram;
};

/// Trajectory i draws from substream (seed, i). Throws DomainError if trajectories == 0.
WalkStats simulate(const SimulationConfig& config);

struct IncrementSummary {
  std::uint64_t count = 0;
  double mean = 0.0;
  double variance = 0.0;  ///< sample variance (n - 1 denominator)
  double standard_error = 0.0;
};

IncrementSummary summarize_interior(const WalkStats& stats);

struct XiSummary {
  double mean = 0.0;
  double variance = 0.0;  ///< sample variance (n - 1 denominator)
};

/// Moments of (rho(T) - E_d T) / (sigma_d sqrt(T)) across trajectories. Requires horizon > 0.
XiSummary normalized_xi(const WalkStats& stats, const qcalc::DriftConstants& constants);

struct TailReport {
  qcalc::MixingSchedule schedule;
  std::uint64_t t0_step = 0;  ///< t_0 rounded to nearest, clamped at 0
  std::uint64_t t1_step = 0;
  double p_exceed_r0_at_t0 = 0.0;
  double p_below_r1_at_t1 = 0.0;
  /// P[Z > c s] with c = E_d^{3/2} / sigma_d.
  double normal_tail_reference = 0.0;
  /// Schedule is pre-asymptotic or t_0 < 0; numbers are reported anyway.
  bool flagged = false;
  std::uint64_t trajectories = 0;
  std::uint64_t seed = 0;
};

TailReport tail_experiment(unsigned d, const Rational& q, const BigInt& n, double s, std::uint64_t trajectories,
                           std::uint64_t seed, unsigned threads = 0);

}  // namespace ramcut::sector
