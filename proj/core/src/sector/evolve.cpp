#include "ramcut/sector/evolve.hpp"

#include "ramcut/error.hpp"
#include "ramcut/sector/step_law.hpp"

#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace ramcut::sector {

namespace {

template <typename Scalar>
Scalar convert(const Rational& value) {
  if constexpr (std::is_same_v<Scalar, double>) {
    return to_double(value);
  } else {
    return value;
  }
}

template <typename Scalar>
SectorDistribution<Scalar> evolve(unsigned d, const Rational& q, const SectorPoint& start, unsigned horizon,
                                  long r_max, const EvolveOptions& options) {
  if (start.rank() != d) throw DomainError("start point rank does not match d = " + std::to_string(d));
  using Law = std::vector<std::pair<SectorPoint, Scalar>>;
  std::map<SectorPoint, Law> law_cache;
  auto law_for = [&](const SectorPoint& p) -> const Law& {
    auto it = law_cache.find(p);
    if (it != law_cache.end()) return it->second;
    const StepLaw exact = transition_distribution(d, q, p);
    Law law;
    law.reserve(exact.entries.size());
    for (const auto& [target, mass] : exact.entries) law.emplace_back(target, convert<Scalar>(mass));
    return law_cache.emplace(p, std::move(law)).first->second;
  };

  SectorDistribution<Scalar> out;
  out.horizon = horizon;
  out.r_max = r_max;
  if (start.r_norm() > r_max) {
    out.truncated_mass = Scalar(1);
    return out;
  }
  out.distribution.emplace(start, Scalar(1));
  for (unsigned t = 0; t < horizon; ++t) {
    std::map<SectorPoint, Scalar> next;
    for (const auto& [point, mass] : out.distribution) {
      for (const auto& [target, p] : law_for(point)) {
        if (target.r_norm() > r_max) {
          out.truncated_mass += mass * p;
        } else {
          next[target] += mass * p;
        }
      }
    }
    if (next.size() > options.state_cap) {
      throw CapExceeded("sector evolution exceeded the state cap of " + std::to_string(options.state_cap) +
                            " at horizon " + std::to_string(t + 1),
                        options.state_cap, t + 1);
    }
    out.distribution = std::move(next);
  }
  return out;
}

}  // namespace

ExactEvolution evolve_exact(unsigned d, const Rational& q, const SectorPoint& start, unsigned horizon, long r_max,
                            const EvolveOptions& options) {
  return evolve<Rational>(d, q, start, horizon, r_max, options);
}

FloatEvolution evolve_float(unsigned d, const Rational& q, const SectorPoint& start, unsigned horizon, long r_max,
                            const EvolveOptions& options) {
  return evolve<double>(d, q, start, horizon, r_max, options);
}

}  // namespace ramcut::sector
