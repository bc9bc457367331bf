#include "ramcut/qcalc/bounds.hpp"

#include "ramcut/error.hpp"
#include "ramcut/qcalc/moves.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace ramcut::qcalc {

namespace {

void check_q(const Rational& q) {
  if (q < 2) throw DomainError("q must be >= 2, got " + to_string(q));
}

void check_sector_vector(unsigned d, std::span<const long> x) {
  if (x.size() + 1 != d) throw DomainError("sector vector must have length d-1 = " + std::to_string(d - 1));
  for (long xi : x) {
    if (xi < 0) throw DomainError("sector coordinates must be non-negative");
  }
}

double log_binomial(double n, double k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

}  // namespace

SphereSize sphere_size_d3(const Rational& q, unsigned r) {
  check_q(q);
  if (r == 0) return {Rational(1), true};
  const Rational rr = r;
  Rational value = (rr + 1) * pow(q, 2 * r) + 2 * rr * pow(q, 2 * r - 1) + 2 * rr * pow(q, 2 * r - 2);
  if (r >= 2) {
    value += (rr - 1) * pow(q, 2 * r - 3);
  }
  // At r = 1 the last term carries the factor (r-1) = 0.
  return {value, false};
}

Rational ball_bound_d3(const Rational& q, unsigned r) {
  check_q(q);
  return Rational(8 * r * r) * pow(q, 2 * r);
}

FiberBound fiber_bound(unsigned d, const Rational& q, std::span<const long> x) {
  check_q(q);
  check_sector_vector(d, x);
  FiberBound out;
  out.r_norm = r_norm(d, x);
  const Rational q_power = pow(q, static_cast<unsigned>(out.r_norm));
  Rational product = 1;
  for (unsigned j = 1; j < d; ++j) product *= (pow(q, j + 1) - 1) / (q - 1);
  out.product_form = product * q_power;
  BigInt factorial = 1;
  for (unsigned i = 2; i <= d; ++i) factorial *= i;
  out.loose_form = Rational(factorial) * pow(q, d * (d - 1) / 2) * q_power;
  return out;
}

LogValue make_log_value(double log_value) {
  LogValue out;
  out.log = log_value;
  if (log_value < std::log(std::numeric_limits<double>::max())) out.linear = std::exp(log_value);
  return out;
}

NormBudget l2_norm_budget(unsigned d, const Rational& q, std::span<const long> x, const BigInt& n) {
  check_q(q);
  check_sector_vector(d, x);
  if (n < 1) throw DomainError("vertex count n must be >= 1");
  const double log_q = std::log(to_double(q));
  const double log_prefactor = 0.5 * log_big(n) - std::log(2.0);
  const long r = r_norm(d, x);

  NormBudget out;
  if (r == 0) {
    // (2qR)^{d^d} vanishes at the origin.
    out.general = LogValue{-std::numeric_limits<double>::infinity(), 0.0};
  } else {
    const double exponent = std::pow(static_cast<double>(d), static_cast<double>(d));
    const double log_general =
        log_prefactor + exponent * std::log(2.0 * to_double(q) * static_cast<double>(r)) - 0.5 * r * log_q;
    out.general = make_log_value(log_general);
  }
  if (d == 3) {
    const double xs = static_cast<double>(x[0]);
    const double ys = static_cast<double>(x[1]);
    const double log_sharp = log_prefactor + log_binomial(xs + 2.0, 2.0) + log_binomial(2.0 * ys + 5.0, 5.0) +
                             4.5 * log_q - (xs + ys) * log_q;
    out.rank_three = make_log_value(log_sharp);
  }
  return out;
}

}  // namespace ramcut::qcalc
