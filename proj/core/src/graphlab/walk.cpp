#include "ramcut/graphlab/walk.hpp"

#include "parallel.hpp"
#include "ramcut/error.hpp"

#include <cmath>

namespace ramcut::graphlab {

namespace {

void check_start(const RegularGraph& graph, Vertex start) {
  if (start >= graph.vertex_count()) {
    throw DomainError("start vertex " + std::to_string(start) + " out of range [0, " +
                      std::to_string(graph.vertex_count()) + ")");
  }
}

}  // namespace

std::string to_string(EvolutionMode mode) {
  switch (mode) {
    case EvolutionMode::automatic: return "auto";
    case EvolutionMode::exact: return "exact";
    case EvolutionMode::floating: return "float";
  }
  return "unknown";
}

EvolutionMode resolve_mode(const WalkOptions& options, std::size_t n, std::uint64_t horizon) {
  if (options.mode != EvolutionMode::automatic) return options.mode;
  const bool small = horizon <= options.exact_horizon_cap &&
                     static_cast<long double>(n) * static_cast<long double>(horizon) <=
                         static_cast<long double>(options.exact_budget);
  return small ? EvolutionMode::exact : EvolutionMode::floating;
}

ExactWalk::ExactWalk(const RegularGraph& graph, Vertex start, bool lazy, unsigned threads)
    : graph_(&graph), lazy_(lazy), threads_(detail::resolve_threads(threads)) {
  check_start(graph, start);
  numerators_.assign(graph.vertex_count(), BigInt(0));
  scratch_.assign(graph.vertex_count(), BigInt(0));
  numerators_[start] = 1;
}

void ExactWalk::step() {
  const auto& g = *graph_;
  const BigInt k = static_cast<unsigned long>(g.degree());
  detail::parallel_blocks(g.vertex_count(), threads_, [&](std::size_t begin, std::size_t end) {
    for (std::size_t w = begin; w < end; ++w) {
      BigInt sum = 0;
      for (const Vertex u : g.neighbors(static_cast<Vertex>(w))) sum += numerators_[u];
      if (lazy_) sum += k * numerators_[w];
      scratch_[w] = std::move(sum);
    }
  });
  numerators_.swap(scratch_);
  denominator_ *= lazy_ ? 2 * k : k;
  ++time_;
}

std::vector<Rational> ExactWalk::distribution() const {
  std::vector<Rational> out;
  out.reserve(numerators_.size());
  for (const auto& num : numerators_) out.emplace_back(num, denominator_);
  return out;
}

FloatWalk::FloatWalk(const RegularGraph& graph, Vertex start, bool lazy, unsigned threads)
    : graph_(&graph), lazy_(lazy), threads_(detail::resolve_threads(threads)) {
  check_start(graph, start);
  mass_.assign(graph.vertex_count(), 0.0);
  scratch_.assign(graph.vertex_count(), 0.0);
  mass_[start] = 1.0;
}

void FloatWalk::step() {
  const auto& g = *graph_;
  const double inv_k = 1.0 / static_cast<double>(g.degree());
  detail::parallel_blocks(g.vertex_count(), threads_, [&](std::size_t begin, std::size_t end) {
    for (std::size_t w = begin; w < end; ++w) {
      // Neumaier summation over the k incoming masses.
      double sum = 0.0;
      double carry = 0.0;
      for (const Vertex u : g.neighbors(static_cast<Vertex>(w))) {
        const double term = mass_[u];
        const double t = sum + term;
        carry += std::abs(sum) >= std::abs(term) ? (sum - t) + term : (term - t) + sum;
        sum = t;
      }
      const double pulled = (sum + carry) * inv_k;
      scratch_[w] = lazy_ ? 0.5 * (mass_[w] + pulled) : pulled;
    }
  });
  mass_.swap(scratch_);
  ++time_;
}

std::vector<std::vector<Rational>> evolve_srw(const RegularGraph& graph, Vertex start, unsigned horizon,
                                              bool lazy) {
  ExactWalk walk(graph, start, lazy);
  std::vector<std::vector<Rational>> out;
  out.reserve(horizon + 1);
  out.push_back(walk.distribution());
  for (unsigned t = 0; t < horizon; ++t) {
    walk.step();
    out.push_back(walk.distribution());
  }
  return out;
}

std::vector<std::vector<double>> evolve_srw_float(const RegularGraph& graph, Vertex start, unsigned horizon,
                                                  bool lazy) {
  FloatWalk walk(graph, start, lazy);
  std::vector<std::vector<double>> out;
  out.reserve(horizon + 1);
  out.push_back(walk.distribution());
  for (unsigned t = 0; t < horizon; ++t) {
    walk.step();
    out.push_back(walk.distribution());
  }
  return out;
}

}  // namespace ramcut::graphlab
