#pragma once

#include "ramcut/qcalc/rational.hpp"

#include <optional>
#include <span>

namespace ramcut::qcalc {

struct SphereSize {
  Rational value;
  /// r = 0: value is 1 by convention; the closed form starts at r = 1.
  bool outside_formula_range = false;
};

/// Size of the graph-distance r-sphere in the rank-3 building:
/// (r+1)q^{2r} + 2r q^{2r-1} + 2r q^{2r-2} + (r-1) q^{2r-3}.
SphereSize sphere_size_d3(const Rational& q, unsigned r);

/// Crude ball bound 8 r^2 q^{2r}.
Rational ball_bound_d3(const Rational& q, unsigned r);

struct FiberBound {
  long r_norm = 0;
  /// prod_{j=1}^{d-1} (q^{j+1}-1)/(q-1) * q^{R(x)}
  Rational product_form;
  /// d! q^{C(d,2) + R(x)}
  Rational loose_form;
};

/// Throws DomainError if x.size() != d-1, any x_i < 0, or q < 2.
FiberBound fiber_bound(unsigned d, const Rational& q, std::span<const long> x);

/// A positive real that may overflow a double: natural log always, linear
/// value when it fits.
struct LogValue {
  double log = 0.0;
  std::optional<double> linear;
};

LogValue make_log_value(double log_value);

struct NormBudget {
  /// (sqrt(n)/2) (2qR(x))^{d^d} q^{-R(x)/2}
  LogValue general;
  /// Rank 3 only, x = (x, y): (sqrt(n)/2) C(x+2,2) C(2y+5,5) q^{9/2} q^{-(x+y)}
  std::optional<LogValue> rank_three;
};

/// Upper bounds on the TV norm of the nontrivial part of the fiber-conditioned
/// distribution on a Ramanujan quotient with n vertices.
NormBudget l2_norm_budget(unsigned d, const Rational& q, std::span<const long> x, const BigInt& n);

}  // namespace ramcut::qcalc
