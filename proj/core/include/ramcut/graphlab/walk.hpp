#pragma once

#include "ramcut/graphlab/graph.hpp"
#include "ramcut/qcalc/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace ramcut::graphlab {

enum class EvolutionMode { automatic, exact, floating };

std::string to_string(EvolutionMode mode);

struct WalkOptions {
  /// Holds with probability 1/2 before each uniform neighbor step.
  bool lazy = false;
  EvolutionMode mode = EvolutionMode::automatic;
  /// Automatic mode stays exact while n * horizon is at most this.
  std::uint64_t exact_budget = 10'000'000;
  /// Exact numerators grow by log2(2k) bits per step; automatic mode also
  /// caps the horizon here.
  unsigned exact_horizon_cap = 2000;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Resolves EvolutionMode::automatic against the budget.
EvolutionMode resolve_mode(const WalkOptions& options, std::size_t n, std::uint64_t horizon);

/// Exact SRW distribution, stored as integer numerators over a common
/// denominator k^t (or (2k)^t for the lazy walk).
class ExactWalk {
 public:
  ExactWalk(const RegularGraph& graph, Vertex start, bool lazy = false, unsigned threads = 1);

  void step();
  unsigned time() const noexcept { return time_; }
  const std::vector<BigInt>& numerators() const noexcept { return numerators_; }
  const BigInt& denominator() const noexcept { return denominator_; }
  Rational mass(Vertex v) const { return Rational(numerators_[v], denominator_); }
  std::vector<Rational> distribution() const;

 private:
  const RegularGraph* graph_;
  bool lazy_;
  unsigned threads_;
  unsigned time_ = 0;
  std::vector<BigInt> numerators_;
  std::vector<BigInt> scratch_;
  BigInt denominator_ = 1;
};

/// Double-precision counterpart of ExactWalk; neighbor sums are compensated.
class FloatWalk {
 public:
  FloatWalk(const RegularGraph& graph, Vertex start, bool lazy = false, unsigned threads = 1);

  void step();
  unsigned time() const noexcept { return time_; }
  const std::vector<double>& distribution() const noexcept { return mass_; }

 private:
  const RegularGraph* graph_;
  bool lazy_;
  unsigned threads_;
  unsigned time_ = 0;
  std::vector<double> mass_;
  std::vector<double> scratch_;
};

/// mu^0 .. mu^horizon from a point mass at `start`. Throws DomainError if start >= n.
std::vector<std::vector<Rational>> evolve_srw(const RegularGraph& graph, Vertex start, unsigned horizon,
                                              bool lazy = false);
std::vector<std::vector<double>> evolve_srw_float(const RegularGraph& graph, Vertex start, unsigned horizon,
                                                  bool lazy = false);

}  // namespace ramcut::graphlab
