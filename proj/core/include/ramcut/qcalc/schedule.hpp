#pragma once

#include "ramcut/qcalc/rational.hpp"

#include <optional>

namespace ramcut::qcalc {

/// Rank-3 schedule in graph-distance units with base-q^2 logarithms, where
/// graph distance is half the R-norm.
struct RankThreeSchedule {
  double log_q2_n = 0.0;
  /// Coefficient of log_{q^2} n in the cutoff time, (q^2+q+1)/(q^2-1).
  Rational rate;
  double t_cutoff = 0.0;
  double t_0 = 0.0;
  double t_1 = 0.0;
  double r_0 = 0.0;  ///< log_{q^2} n - 3 log_{q^2} log_{q^2} n
  double r_1 = 0.0;  ///< log_{q^2} n + 16 log_{q^2} log_{q^2} n
  double window = 0.0;
};

/// Rank-2 schedule in the tree form (k / (k-2)) log_{k-1} n with k = q + 1.
struct TreeSchedule {
  Rational k;
  Rational rate;  ///< k / (k - 2)
  double log_k1_n = 0.0;
  double t_cutoff = 0.0;
};

/// Lower/upper mixing-time markers around the cutoff, R-norm units, base q.
/// Times are real valued; callers round outward.
struct MixingSchedule {
  unsigned d = 0;
  Rational q;
  BigInt n;
  double s = 0.0;
  Rational cutoff_constant;  ///< C_{d,q}
  double log_q_n = 0.0;
  double t_cutoff = 0.0;     ///< C_{d,q} log_q n
  double t_0 = 0.0;          ///< t_cutoff - (s+1) window
  double t_1 = 0.0;          ///< t_cutoff + (s+1) window
  double r_0 = 0.0;          ///< log_q n - d log_q log_q n
  double r_1 = 0.0;          ///< log_q n + 2(d^d + 1) log_q log_q n
  double window = 0.0;       ///< sqrt(log_q n)
  /// r_0 <= 0: n is too small for the asymptotic markers.
  bool pre_asymptotic = false;
  /// t_0 < 0: the lower marker falls before the walk starts.
  bool t0_negative = false;
  std::optional<RankThreeSchedule> rank_three;
  std::optional<TreeSchedule> tree;
};

/// Throws DomainError unless n >= q^2, s >= 0 and q >= 2.
MixingSchedule mixing_schedule(unsigned d, const Rational& q, const BigInt& n, double s);

}  // namespace ramcut::qcalc

namespace ramcut::qcalc {

/// Polynomial identity 2 deg(q) (q^2 - 1) = drift(q) (q^2 + q + 1) for d = 3,
/// i.e. C_{3,q} log_q n equals ((q^2+q+1)/(q^2-1)) log_{q^2} n for every q.
bool rank_three_rate_identity();

/// Polynomial identity deg(q) (q - 1) = drift(q) (q + 1) for d = 2, i.e.
/// C_{2,q} = k / (k - 2) with k = q + 1.
bool tree_rate_identity();

}  // namespace ramcut::qcalc
