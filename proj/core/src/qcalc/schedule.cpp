#include "ramcut/qcalc/schedule.hpp"

#include "ramcut/error.hpp"
#include "ramcut/qcalc/constants.hpp"

#include <cmath>

namespace ramcut::qcalc {

MixingSchedule mixing_schedule(unsigned d, const Rational& q, const BigInt& n, double s) {
  if (!(s >= 0.0)) throw DomainError("slack s must be >= 0");
  const DriftConstants constants = drift_constants(d, q);
  if (Rational(n) < q * q) throw DomainError("mixing_schedule requires n >= q^2");

  const double log_q = std::log(to_double(q));
  MixingSchedule out;
  out.d = d;
  out.q = q;
  out.n = n;
  out.s = s;
  out.cutoff_constant = constants.cutoff_constant;
  out.log_q_n = log_big(n) / log_q;
  const double loglog = std::log(out.log_q_n) / log_q;
  out.window = std::sqrt(out.log_q_n);
  out.t_cutoff = to_double(out.cutoff_constant) * out.log_q_n;
  out.t_0 = out.t_cutoff - (s + 1.0) * out.window;
  out.t_1 = out.t_cutoff + (s + 1.0) * out.window;
  out.r_0 = out.log_q_n - static_cast<double>(d) * loglog;
  out.r_1 = out.log_q_n + 2.0 * (std::pow(static_cast<double>(d), static_cast<double>(d)) + 1.0) * loglog;
  out.pre_asymptotic = out.r_0 <= 0.0;
  out.t0_negative = out.t_0 < 0.0;

  if (d == 3) {
    RankThreeSchedule r3;
    const double log_q2 = 2.0 * log_q;
    r3.log_q2_n = log_big(n) / log_q2;
    r3.rate = (q * q + q + 1) / (q * q - 1);
    const double loglog2 = std::log(r3.log_q2_n) / log_q2;
    r3.window = std::sqrt(r3.log_q2_n);
    r3.t_cutoff = to_double(r3.rate) * r3.log_q2_n;
    r3.t_0 = r3.t_cutoff - (s + 1.0) * r3.window;
    r3.t_1 = r3.t_cutoff + (s + 1.0) * r3.window;
    r3.r_0 = r3.log_q2_n - 3.0 * loglog2;
    r3.r_1 = r3.log_q2_n + 16.0 * loglog2;
    out.rank_three = r3;
  }
  if (d == 2) {
    TreeSchedule tree;
    tree.k = q + 1;
    tree.rate = tree.k / (tree.k - 2);
    tree.log_k1_n = log_big(n) / std::log(to_double(tree.k - 1));
    tree.t_cutoff = to_double(tree.rate) * tree.log_k1_n;
    out.tree = tree;
  }
  return out;
}

}  // namespace ramcut::qcalc

namespace ramcut::qcalc {

bool rank_three_rate_identity() {
  const QPolynomial q2_minus_1{-1, 0, 1};
  const QPolynomial q2_plus_q_plus_1{1, 1, 1};
  return QPolynomial{2} * vertex_degree(3) * q2_minus_1 == drift_polynomial(3) * q2_plus_q_plus_1;
}

bool tree_rate_identity() {
  return vertex_degree(2) * QPolynomial{-1, 1} == drift_polynomial(2) * QPolynomial{1, 1};
}

}  // namespace ramcut::qcalc
