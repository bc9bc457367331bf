#pragma once

#include "ramcut/graphlab/graph.hpp"
#include "ramcut/graphlab/walk.hpp"
#include "ramcut/qcalc/rational.hpp"

#include <iosfwd>
#include <limits>
#include <map>
#include <optional>
#include <vector>

namespace ramcut::graphlab {

/// Total-variation distance to uniform along a walk, split by the coloring
/// when one is present:
///   tv_trivial = TV(color-class average of mu^t, uniform)
///   tv_orth    = TV(mu^t, color-class average of mu^t)
struct MixingProfile {
  EvolutionMode mode = EvolutionMode::exact;
  bool lazy = false;
  bool worst_case = false;
  /// Start vertex; empty for worst-case profiles (pointwise max over starts).
  std::optional<Vertex> start;
  std::vector<unsigned> times;
  std::vector<double> tv_total;
  std::vector<double> tv_trivial;
  std::vector<double> tv_orth;
  /// Populated in exact mode only.
  std::vector<Rational> tv_total_exact;
  std::vector<Rational> tv_trivial_exact;
  std::vector<Rational> tv_orth_exact;
  /// First t with tv_total(t) < eps, empty if not reached by the horizon.
  std::map<double, std::optional<unsigned>> t_mix;

  bool has_coloring() const noexcept { return !tv_trivial.empty(); }
};

struct ProfileOptions {
  WalkOptions walk;
  bool worst_case = false;
  std::vector<double> eps;
};

/// Throws DomainError if the graph is disconnected or `start` is out of range.
MixingProfile tv_profile(const RegularGraph& graph, Vertex start, unsigned horizon,
                         const ProfileOptions& options = {});

/// Header `t,tv_total,tv_trivial,tv_orth`; the last two are empty without a coloring.
void write_profile_csv(std::ostream& out, const MixingProfile& profile);

/// First t <= max_horizon with TV(mu^t, uniform) < eps from `start`.
std::optional<unsigned> mixing_time(const RegularGraph& graph, Vertex start, double eps, unsigned max_horizon,
                                    const WalkOptions& options = {});

struct FamilyMember {
  const RegularGraph* graph = nullptr;
  Vertex start = 0;
};

struct CutoffResult {
  std::size_t vertex_count = 0;
  EvolutionMode mode = EvolutionMode::exact;
  std::optional<unsigned> t_mix_eps;
  std::optional<unsigned> t_mix_complement;
  /// t_mix(eps) / t_mix(1 - eps); +inf when t_mix(1 - eps) = 0.
  double ratio = std::numeric_limits<double>::quiet_NaN();
  bool infinite = false;
  /// The walk did not reach eps within max_horizon; ratio stays NaN.
  bool unresolved = false;
};

/// Ratios t_mix(eps)/t_mix(1-eps) for each member. Requires 0 < eps < 1/2.
std::vector<CutoffResult> cutoff_ratio(const std::vector<FamilyMember>& family, double eps, unsigned max_horizon,
                                       const WalkOptions& options = {});

}  // namespace ramcut::graphlab
