#include "ramcut/sector/step_law.hpp"

#include "ramcut/error.hpp"
#include "ramcut/qcalc/constants.hpp"
#include "ramcut/qcalc/moves.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace ramcut::sector {

Rational StepLaw::mass_of(const SectorPoint& target) const {
  const auto it = std::lower_bound(entries.begin(), entries.end(), target,
                                   [](const auto& entry, const SectorPoint& t) { return entry.first < t; });
  return it != entries.end() && it->first == target ? it->second : Rational(0);
}

StepLaw transition_distribution(unsigned d, const Rational& q, const SectorPoint& p) {
  if (q < 2) throw DomainError("q must be >= 2, got " + to_string(q));
  if (p.rank() != d) throw DomainError("sector point rank does not match d = " + std::to_string(d));
  const Rational degree = qcalc::vertex_degree(d, q);
  std::map<SectorPoint, Rational> masses;
  std::vector<long> raw(d);
  for (const auto& move : qcalc::enumerate_moves(d)) {
    for (unsigned i = 0; i < d; ++i) raw[i] = p.alpha()[i] + move.gamma[i];
    masses[fold(d, raw)] += pow(q, move.z_exponent) / degree;
  }
  StepLaw law;
  law.source = p;
  law.entries.assign(masses.begin(), masses.end());
  return law;
}

std::vector<CoordinateBias> bias_check(unsigned d, const Rational& q) {
  if (q < 2) throw DomainError("q must be >= 2, got " + to_string(q));
  const Rational degree = qcalc::vertex_degree(d, q);
  std::vector<CoordinateBias> out(d - 1);
  for (const auto& move : qcalc::enumerate_moves(d)) {
    const Rational mass = pow(q, move.z_exponent) / degree;
    for (unsigned i = 0; i + 1 < d; ++i) {
      if (move.gamma_prime[i] == 1) out[i].up += mass;
      if (move.gamma_prime[i] == -1) out[i].down += mass;
    }
  }
  for (auto& bias : out) bias.ratio_is_q = bias.up == q * bias.down;
  return out;
}

}  // namespace ramcut::sector
