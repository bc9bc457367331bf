#include "ramcut/qcalc/constants.hpp"

#include "ramcut/error.hpp"
#include "ramcut/qcalc/moves.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace ramcut::qcalc {

namespace {

void check_degree_rank(unsigned d) {
  if (d < 2 || d > kMaxRank) {
    throw DomainError("rank d must lie in [2, " + std::to_string(kMaxRank) + "], got " + std::to_string(d));
  }
}

}  // namespace

QPolynomial gaussian_binomial(unsigned d, unsigned j) {
  if (d == 0) throw DomainError("gaussian_binomial requires d >= 1");
  if (j > d) throw DomainError("gaussian_binomial requires j <= d");
  // row[k] holds [n k]_q; [n k] = [n-1 k-1] + q^k [n-1 k].
  std::vector<QPolynomial> row{QPolynomial{1}};
  for (unsigned n = 1; n <= d; ++n) {
    std::vector<QPolynomial> next(n + 1);
    next[0] = QPolynomial{1};
    next[n] = QPolynomial{1};
    for (unsigned k = 1; k < n; ++k) next[k] = row[k - 1] + QPolynomial::monomial(1, k) * row[k];
    row = std::move(next);
  }
  return row[j];
}

Rational gaussian_binomial(unsigned d, unsigned j, const Rational& q) {
  if (d == 0) throw DomainError("gaussian_binomial requires d >= 1");
  if (j > d) throw DomainError("gaussian_binomial requires j <= d");
  if (q == 1) throw DomainError("the product form of the Gaussian binomial is undefined at q = 1");
  Rational value = 1;
  for (unsigned i = 1; i <= j; ++i) value *= (pow(q, d - i + 1) - 1) / (pow(q, i) - 1);
  return value;
}

QPolynomial vertex_degree(unsigned d) {
  check_degree_rank(d);
  QPolynomial total;
  for (unsigned j = 1; j < d; ++j) total += gaussian_binomial(d, j);
  return total;
}

Rational vertex_degree(unsigned d, const Rational& q) { return vertex_degree(d).evaluate(q); }

QPolynomial drift_polynomial(unsigned d) {
  QPolynomial total;
  for (const auto& move : enumerate_moves(d)) total += QPolynomial::monomial(move.r_increment, move.z_exponent);
  return total;
}

QPolynomial second_moment_polynomial(unsigned d) {
  QPolynomial total;
  for (const auto& move : enumerate_moves(d)) {
    const BigInt r = move.r_increment;
    total += QPolynomial::monomial(r * r, move.z_exponent);
  }
  return total;
}

std::map<long, QPolynomial> increment_law(unsigned d) {
  std::map<long, QPolynomial> law;
  for (const auto& move : enumerate_moves(d)) law[move.r_increment] += QPolynomial::monomial(1, move.z_exponent);
  return law;
}

DriftConstants drift_constants(unsigned d, const Rational& q) {
  check_degree_rank(d);
  if (q < 2) throw DomainError("drift_constants requires q >= 2, got " + to_string(q));
  DriftConstants out;
  out.d = d;
  out.q = q;
  out.degree = vertex_degree(d).evaluate(q);
  out.drift = drift_polynomial(d).evaluate(q) / out.degree;
  out.variance = second_moment_polynomial(d).evaluate(q) / out.degree - out.drift * out.drift;
  out.cutoff_constant = 1 / out.drift;
  out.sigma = std::sqrt(to_double(out.variance));
  out.c_constant = std::pow(to_double(out.drift), 1.5) / out.sigma;
  out.q_not_prime_power = !is_prime_power(q);
  return out;
}

Rational two_step_drift_d3(const Rational& q) {
  const QPolynomial numerator{-7, -9, -5, 1, 4};
  const Rational base = q * q + q + 1;
  return numerator.evaluate(q) / (4 * base * base);
}

double normal_upper_tail(double z) { return 0.5 * std::erfc(z / std::sqrt(2.0)); }

}  // namespace ramcut::qcalc
