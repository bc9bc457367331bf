#include "ramcut/sector/simulate.hpp"

#include "ramcut/error.hpp"
#include "ramcut/sector/walker.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <thread>

namespace ramcut::sector {

namespace {

unsigned resolve_threads(unsigned requested, std::uint64_t work_items) {
  unsigned threads = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(1, work_items)));
}

/// Runs body(worker, begin, end) over contiguous index blocks.
void parallel_blocks(std::uint64_t count, unsigned threads,
                     const std::function<void(unsigned, std::uint64_t, std::uint64_t)>& body) {
  if (threads <= 1) {
    body(0, 0, count);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned w = 0; w < threads; ++w) {
    const std::uint64_t begin = count * w / threads;
    const std::uint64_t end = count * (w + 1) / threads;
    pool.emplace_back([&body, w, begin, end] { body(w, begin, end); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace

WalkStats simulate(const SimulationConfig& config) {
  if (config.trajectories == 0) throw DomainError("simulate needs at least one trajectory");
  const SectorChain chain(config.d, config.q);

  WalkStats stats;
  stats.d = config.d;
  stats.q = config.q;
  stats.trajectory_count = config.trajectories;
  stats.horizon = config.horizon;
  stats.seed = config.seed;
  stats.rho_samples.resize(config.trajectories);
  stats.boundary_visits.resize(config.trajectories);
  stats.last_boundary_step.resize(config.trajectories);

  const unsigned threads = resolve_threads(config.threads, config.trajectories);
  const auto support = chain.increment_support();
  const long min_increment = support.front();
  std::vector<std::vector<std::uint64_t>> histograms(threads,
                                                     std::vector<std::uint64_t>(support.back() - min_increment + 1));

  parallel_blocks(config.trajectories, threads, [&](unsigned worker, std::uint64_t begin, std::uint64_t end) {
    auto& histogram = histograms[worker];
    for (std::uint64_t i = begin; i < end; ++i) {
      StreamRng rng(config.seed, i);
      WalkerState state = chain.origin();
      std::uint64_t visits = 0;
      std::uint64_t last_boundary = 0;
      for (std::uint64_t t = 0; t < config.horizon; ++t) {
        const bool interior = state.zero_count == 0;
        if (!interior) {
          ++visits;
          last_boundary = t;
        }
        const long increment = chain.advance(state, rng);
        if (interior) ++histogram[increment - min_increment];
      }
      if (state.zero_count != 0) last_boundary = config.horizon;
      stats.rho_samples[i] = state.rho;
      stats.boundary_visits[i] = visits;
      stats.last_boundary_step[i] = last_boundary;
    }
  });

  for (std::size_t k = 0; k < histograms.front().size(); ++k) {
    std::uint64_t total = 0;
    for (const auto& h : histograms) total += h[k];
    if (total != 0) stats.interior_increment_histogram[min_increment + static_cast<long>(k)] = total;
  }
  return stats;
}

IncrementSummary summarize_interior(const WalkStats& stats) {
  IncrementSummary out;
  double sum = 0.0;
  for (const auto& [value, count] : stats.interior_increment_histogram) {
    out.count += count;
    sum += static_cast<double>(value) * static_cast<double>(count);
  }
  if (out.count == 0) return out;
  out.mean = sum / static_cast<double>(out.count);
  double squares = 0.0;
  for (const auto& [value, count] : stats.interior_increment_histogram) {
    const double dev = static_cast<double>(value) - out.mean;
    squares += dev * dev * static_cast<double>(count);
  }
  if (out.count > 1) out.variance = squares / static_cast<double>(out.count - 1);
  out.standard_error = std::sqrt(out.variance / static_cast<double>(out.count));
  return out;
}

XiSummary normalized_xi(const WalkStats& stats, const qcalc::DriftConstants& constants) {
  if (stats.horizon == 0) throw DomainError("normalized_xi needs a positive horizon");
  const double t = static_cast<double>(stats.horizon);
  const double drift = to_double(constants.drift);
  const double scale = constants.sigma * std::sqrt(t);
  XiSummary out;
  const auto n = static_cast<double>(stats.rho_samples.size());
  for (long rho : stats.rho_samples) out.mean += (static_cast<double>(rho) - drift * t) / scale;
  out.mean /= n;
  for (long rho : stats.rho_samples) {
    const double dev = (static_cast<double>(rho) - drift * t) / scale - out.mean;
    out.variance += dev * dev;
  }
  if (stats.rho_samples.size() > 1) out.variance /= n - 1.0;
  return out;
}

TailReport tail_experiment(unsigned d, const Rational& q, const BigInt& n, double s, std::uint64_t trajectories,
                           std::uint64_t seed, unsigned threads) {
  if (trajectories == 0) throw DomainError("tail_experiment needs at least one trajectory");
  TailReport report;
  report.schedule = qcalc::mixing_schedule(d, q, n, s);
  report.flagged = report.schedule.pre_asymptotic || report.schedule.t0_negative;
  report.trajectories = trajectories;
  report.seed = seed;
  const auto round_step = [](double t) -> std::uint64_t { return t <= 0.0 ? 0 : static_cast<std::uint64_t>(std::llround(t)); };
  report.t0_step = round_step(report.schedule.t_0);
  report.t1_step = round_step(report.schedule.t_1);
  const qcalc::DriftConstants constants = qcalc::drift_constants(d, q);
  report.normal_tail_reference = qcalc::normal_upper_tail(constants.c_constant * s);

  const SectorChain chain(d, q);
  const unsigned workers = resolve_threads(threads, trajectories);
  std::vector<std::uint64_t> exceed(workers, 0), below(workers, 0);
  const std::uint64_t horizon = std::max(report.t0_step, report.t1_step);
  parallel_blocks(trajectories, workers, [&](unsigned worker, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) {
      StreamRng rng(seed, i);
      WalkerState state = chain.origin();
      for (std::uint64_t t = 0;; ++t) {
        if (t == report.t0_step && static_cast<double>(state.rho) > report.schedule.r_0) ++exceed[worker];
        if (t == report.t1_step && static_cast<double>(state.rho) < report.schedule.r_1) ++below[worker];
        if (t == horizon) break;
        chain.advance(state, rng);
      }
    }
  });
  std::uint64_t exceed_total = 0, below_total = 0;
  for (unsigned w = 0; w < workers; ++w) {
    exceed_total += exceed[w];
    below_total += below[w];
  }
  report.p_exceed_r0_at_t0 = static_cast<double>(exceed_total) / static_cast<double>(trajectories);
  report.p_below_r1_at_t1 = static_cast<double>(below_total) / static_cast<double>(trajectories);
  return report;
}

}  // namespace ramcut::sector
