#include "ramcut/graphlab/mixing.hpp"

#include "ramcut/error.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

namespace ramcut::graphlab {

namespace {

struct ColorClasses {
  std::vector<std::uint32_t> color;
  std::vector<std::size_t> size;
};

std::optional<ColorClasses> classes_of(const RegularGraph& graph) {
  if (!graph.coloring()) return std::nullopt;
  ColorClasses out;
  out.color = *graph.coloring();
  out.size.assign(graph.color_count(), 0);
  for (const auto c : out.color) ++out.size[c];
  return out;
}

struct Observation {
  double total = 0.0;
  double trivial = 0.0;
  double orth = 0.0;
  Rational total_exact;
  Rational trivial_exact;
  Rational orth_exact;
};

Observation observe(const ExactWalk& walk, const ColorClasses* classes) {
  const auto& num = walk.numerators();
  const BigInt& den = walk.denominator();
  const BigInt n = static_cast<unsigned long>(num.size());
  Observation out;
  BigInt acc = 0;
  for (const auto& x : num) acc += abs(n * x - den);
  out.total_exact = Rational(acc, 2 * n * den);
  out.total = to_double(out.total_exact);
  if (classes == nullptr) return out;

  std::vector<BigInt> class_mass(classes->size.size(), BigInt(0));
  for (std::size_t w = 0; w < num.size(); ++w) class_mass[classes->color[w]] += num[w];
  acc = 0;
  for (std::size_t c = 0; c < class_mass.size(); ++c) {
    acc += abs(n * class_mass[c] - BigInt(static_cast<unsigned long>(classes->size[c])) * den);
  }
  out.trivial_exact = Rational(acc, 2 * n * den);

  std::vector<BigInt> spread(class_mass.size(), BigInt(0));
  for (std::size_t w = 0; w < num.size(); ++w) {
    const auto c = classes->color[w];
    spread[c] += abs(BigInt(static_cast<unsigned long>(classes->size[c])) * num[w] - class_mass[c]);
  }
  Rational orth = 0;
  for (std::size_t c = 0; c < spread.size(); ++c) {
    orth += Rational(spread[c], 2 * den * static_cast<unsigned long>(classes->size[c]));
  }
  out.orth_exact = orth;
  out.trivial = to_double(out.trivial_exact);
  out.orth = to_double(out.orth_exact);
  return out;
}

Observation observe(const FloatWalk& walk, const ColorClasses* classes) {
  const auto& mu = walk.distribution();
  const double uniform = 1.0 / static_cast<double>(mu.size());
  Observation out;
  for (const double x : mu) out.total += std::abs(x - uniform);
  out.total *= 0.5;
  if (classes == nullptr) return out;

  std::vector<double> class_mass(classes->size.size(), 0.0);
  for (std::size_t w = 0; w < mu.size(); ++w) class_mass[classes->color[w]] += mu[w];
  for (std::size_t c = 0; c < class_mass.size(); ++c) {
    out.trivial += std::abs(class_mass[c] - static_cast<double>(classes->size[c]) * uniform);
  }
  out.trivial *= 0.5;
  for (std::size_t w = 0; w < mu.size(); ++w) {
    const auto c = classes->color[w];
    out.orth += std::abs(mu[w] - class_mass[c] / static_cast<double>(classes->size[c]));
  }
  out.orth *= 0.5;
  return out;
}

void require_connected(const RegularGraph& graph) {
  if (!graph.is_connected()) throw DomainError("graph is disconnected; the uniform distribution is not the limit");
}

void check_start(const RegularGraph& graph, Vertex start) {
  if (start >= graph.vertex_count()) {
    throw DomainError("start vertex " + std::to_string(start) + " out of range [0, " +
                      std::to_string(graph.vertex_count()) + ")");
  }
}

/// Runs the walk for t = 0..horizon and hands every observation to `visit`,
/// stopping early when it returns false.
template <typename Walk, typename Visit>
void drive(Walk walk, unsigned horizon, const ColorClasses* classes, Visit&& visit) {
  for (unsigned t = 0;; ++t) {
    if (!visit(t, observe(walk, classes))) return;
    if (t == horizon) return;
    walk.step();
  }
}

template <typename Visit>
void drive(const RegularGraph& graph, Vertex start, EvolutionMode mode, const WalkOptions& options,
           unsigned horizon, const ColorClasses* classes, Visit&& visit) {
  if (mode == EvolutionMode::exact) {
    drive(ExactWalk(graph, start, options.lazy, options.threads), horizon, classes, visit);
  } else {
    drive(FloatWalk(graph, start, options.lazy, options.threads), horizon, classes, visit);
  }
}

bool below(const Observation& obs, EvolutionMode mode, double eps) {
  if (mode == EvolutionMode::exact) return obs.total_exact < rational_from_double(eps);
  return obs.total < eps;
}

MixingProfile single_profile(const RegularGraph& graph, Vertex start, unsigned horizon, EvolutionMode mode,
                             const WalkOptions& options, const ColorClasses* classes) {
  MixingProfile profile;
  profile.mode = mode;
  profile.lazy = options.lazy;
  profile.start = start;
  drive(graph, start, mode, options, horizon, classes, [&](unsigned t, const Observation& obs) {
    profile.times.push_back(t);
    profile.tv_total.push_back(obs.total);
    if (mode == EvolutionMode::exact) profile.tv_total_exact.push_back(obs.total_exact);
    if (classes != nullptr) {
      profile.tv_trivial.push_back(obs.trivial);
      profile.tv_orth.push_back(obs.orth);
      if (mode == EvolutionMode::exact) {
        profile.tv_trivial_exact.push_back(obs.trivial_exact);
        profile.tv_orth_exact.push_back(obs.orth_exact);
      }
    }
    return true;
  });
  return profile;
}

template <typename T>
void pointwise_max(std::vector<T>& acc, const std::vector<T>& next) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = std::max(acc[i], next[i]);
}

}  // namespace

MixingProfile tv_profile(const RegularGraph& graph, Vertex start, unsigned horizon, const ProfileOptions& options) {
  check_start(graph, start);
  require_connected(graph);
  const auto classes = classes_of(graph);
  const ColorClasses* class_ptr = classes ? &*classes : nullptr;
  const auto n = graph.vertex_count();
  const auto work = options.worst_case ? static_cast<std::uint64_t>(horizon) * n : horizon;
  const EvolutionMode mode = resolve_mode(options.walk, n, work);

  MixingProfile profile;
  if (!options.worst_case) {
    profile = single_profile(graph, start, horizon, mode, options.walk, class_ptr);
  } else {
    profile = single_profile(graph, 0, horizon, mode, options.walk, class_ptr);
    for (Vertex v = 1; v < n; ++v) {
      const auto next = single_profile(graph, v, horizon, mode, options.walk, class_ptr);
      pointwise_max(profile.tv_total, next.tv_total);
      pointwise_max(profile.tv_trivial, next.tv_trivial);
      pointwise_max(profile.tv_orth, next.tv_orth);
      pointwise_max(profile.tv_total_exact, next.tv_total_exact);
      pointwise_max(profile.tv_trivial_exact, next.tv_trivial_exact);
      pointwise_max(profile.tv_orth_exact, next.tv_orth_exact);
    }
    profile.worst_case = true;
    profile.start.reset();
  }

  for (const double eps : options.eps) {
    std::optional<unsigned> hit;
    for (std::size_t i = 0; i < profile.times.size() && !hit; ++i) {
      const bool under = mode == EvolutionMode::exact ? profile.tv_total_exact[i] < rational_from_double(eps)
                                                      : profile.tv_total[i] < eps;
      if (under) hit = profile.times[i];
    }
    profile.t_mix[eps] = hit;
  }
  return profile;
}

void write_profile_csv(std::ostream& out, const MixingProfile& profile) {
  out << "t,tv_total,tv_trivial,tv_orth\n";
  for (std::size_t i = 0; i < profile.times.size(); ++i) {
    out << profile.times[i] << ',' << decimal(profile.tv_total[i]) << ',';
    if (profile.has_coloring()) out << decimal(profile.tv_trivial[i]) << ',' << decimal(profile.tv_orth[i]);
    else out << ',';
    out << '\n';
  }
}

std::optional<unsigned> mixing_time(const RegularGraph& graph, Vertex start, double eps, unsigned max_horizon,
                                    const WalkOptions& options) {
  check_start(graph, start);
  require_connected(graph);
  if (!(eps > 0.0 && eps < 1.0)) throw DomainError("eps must lie in (0, 1)");
  const EvolutionMode mode = resolve_mode(options, graph.vertex_count(), max_horizon);
  std::optional<unsigned> hit;
  drive(graph, start, mode, options, max_horizon, nullptr, [&](unsigned t, const Observation& obs) {
    if (below(obs, mode, eps)) hit = t;
    return !hit;
  });
  return hit;
}

std::vector<CutoffResult> cutoff_ratio(const std::vector<FamilyMember>& family, double eps, unsigned max_horizon,
                                       const WalkOptions& options) {
  if (!(eps > 0.0 && eps < 0.5)) throw DomainError("cutoff_ratio requires 0 < eps < 1/2");
  std::vector<CutoffResult> out;
  out.reserve(family.size());
  for (const auto& member : family) {
    const auto& graph = *member.graph;
    check_start(graph, member.start);
    require_connected(graph);
    CutoffResult result;
    result.vertex_count = graph.vertex_count();
    result.mode = resolve_mode(options, graph.vertex_count(), max_horizon);
    drive(graph, member.start, result.mode, options, max_horizon, nullptr, [&](unsigned t, const Observation& obs) {
      if (!result.t_mix_complement && below(obs, result.mode, 1.0 - eps)) result.t_mix_complement = t;
      if (below(obs, result.mode, eps)) result.t_mix_eps = t;
      return !result.t_mix_eps;
    });
    if (!result.t_mix_eps) {
      result.unresolved = true;
    } else if (*result.t_mix_complement == 0) {
      result.infinite = true;
      result.ratio = std::numeric_limits<double>::infinity();
    } else {
      result.ratio = static_cast<double>(*result.t_mix_eps) / static_cast<double>(*result.t_mix_complement);
    }
    out.push_back(result);
  }
  return out;
}

}  // namespace ramcut::graphlab
