#pragma once

#include "ramcut/qcalc/qpolynomial.hpp"
#include "ramcut/qcalc/rational.hpp"

#include <map>
#include <string>

namespace ramcut::qcalc {

/// Gaussian binomial [d j]_q as a polynomial in q (q-Pascal recurrence).
/// Throws DomainError if d == 0 or j > d.
QPolynomial gaussian_binomial(unsigned d, unsigned j);

/// Gaussian binomial at a rational q via the product
/// prod_{i=1}^{j} (q^{d-i+1} - 1) / (q^i - 1). Requires q != 1.
Rational gaussian_binomial(unsigned d, unsigned j, const Rational& q);

/// Vertex degree of the building, sum_{j=1}^{d-1} [d j]_q. Requires d >= 2.
QPolynomial vertex_degree(unsigned d);
Rational vertex_degree(unsigned d, const Rational& q);

/// sum over moves of R(gamma') q^{Z_gamma}; equals drift * degree.
QPolynomial drift_polynomial(unsigned d);

/// sum over moves of R(gamma')^2 q^{Z_gamma}.
QPolynomial second_moment_polynomial(unsigned d);

/// Unnormalized law of the interior R-increment: value -> sum of q^{Z_gamma}
/// over moves with that R(gamma'). Divide by vertex_degree(d) for probabilities.
std::map<long, QPolynomial> increment_law(unsigned d);

/// Drift and spread of the interior R-increment, all kept exact.
struct DriftConstants {
  unsigned d = 0;
  Rational q;
  Rational degree;
  Rational drift;            ///< E_d, mean R-increment off the boundary
  Rational variance;         ///< sigma_d^2
  Rational cutoff_constant;  ///< C_{d,q} = 1 / E_d
  double sigma = 0.0;        ///< sqrt(variance), taken only here
  double c_constant = 0.0;   ///< E_d^{3/2} / sigma_d
  /// Set when q is not an integer prime power; the formulas still apply.
  bool q_not_prime_power = false;
};

/// Throws DomainError if d is out of range or q < 2.
DriftConstants drift_constants(unsigned d, const Rational& q);

/// Lower bound on the two-step drift of the distance to the x-axis in rank 3:
/// (4q^4 + q^3 - 5q^2 - 9q - 7) / (4 (q^2 + q + 1)^2).
Rational two_step_drift_d3(const Rational& q);

/// Upper tail of the standard normal, P[Z > z].
double normal_upper_tail(double z);

}  // namespace ramcut::qcalc
