#include "ramcut/graphlab/norm_bounds.hpp"

#include "ramcut/error.hpp"

#include <cmath>
#include <limits>

namespace ramcut::graphlab {

namespace {

void check(unsigned ell, unsigned r, unsigned k) {
  if (ell == 0 || r == 0 || k == 0) throw DomainError("normal bounds need ell, r, k >= 1");
}

}  // namespace

LogValue normal_bound(unsigned ell, unsigned r, unsigned k, double lambda) {
  check(ell, r, k);
  if (!(lambda >= 0.0)) throw DomainError("lambda must be non-negative");
  const double n = static_cast<double>(ell) + r - 1.0;
  const double log_binomial = std::lgamma(n + 1.0) - std::lgamma(static_cast<double>(r)) - std::lgamma(n - r + 2.0);
  const double exponent = static_cast<double>(ell) - r + 1.0;
  double log_lambda_term = 0.0;
  if (exponent != 0.0) {
    log_lambda_term = lambda == 0.0 ? (exponent > 0 ? -std::numeric_limits<double>::infinity()
                                                    : std::numeric_limits<double>::infinity())
                                    : exponent * std::log(lambda);
  }
  return qcalc::make_log_value(log_binomial + (r - 1.0) * std::log(static_cast<double>(k)) + log_lambda_term);
}

LogValue ram_digraph_bound(unsigned ell, unsigned r, unsigned k) {
  check(ell, r, k);
  const double sum = static_cast<double>(ell) + r;
  return qcalc::make_log_value(r * std::log(sum) + 0.5 * sum * std::log(static_cast<double>(k)));
}

}  // namespace ramcut::graphlab
