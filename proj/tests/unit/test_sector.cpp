#include "ramcut/error.hpp"
#include "ramcut/qcalc/bounds.hpp"
#include "ramcut/qcalc/constants.hpp"
#include "ramcut/qcalc/moves.hpp"
#include "ramcut/qcalc/rational.hpp"
#include "ramcut/sector/evolve.hpp"
#include "ramcut/sector/rng.hpp"
#include "ramcut/sector/sector_point.hpp"
#include "ramcut/sector/simulate.hpp"
#include "ramcut/sector/step_law.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <deque>
#include <map>
#include <set>

namespace ramcut::sector {
namespace {

const std::vector<int> kQs = {2, 3, 4, 5, 7, 8, 9};

SectorPoint xy(long a, long b) { return SectorPoint::from_x({a, b}); }

TEST(SectorPoint, RoundTrip) {
  const auto p = SectorPoint::from_alpha({5, 3, 3, 0});
  EXPECT_EQ(p.x(), (std::vector<long>{2, 0, 3}));
  EXPECT_EQ(SectorPoint::from_x(p.x()).alpha(), p.alpha());
  EXPECT_TRUE(p.on_boundary());
  EXPECT_EQ(p.r_norm(), 3 * 2 + 3 * 3);
  EXPECT_EQ(p.to_string(), "(2,0,3)");
  EXPECT_FALSE(xy(1, 1).on_boundary());
  EXPECT_THROW(SectorPoint::from_alpha({1, 2, 0}), DomainError);
  EXPECT_THROW(SectorPoint::from_alpha({2, 1, 1}), DomainError);
  EXPECT_THROW(SectorPoint::from_x({1, -1}), DomainError);
}

TEST(Fold, NamedCases) {
  for (long a = 1; a <= 4; ++a) {
    const std::vector<long> raw{a + 1, 0, 1};
    const auto p = fold(3, raw);
    EXPECT_EQ(p.alpha(), (std::vector<long>{a + 1, 1, 0}));
    EXPECT_EQ(p.x(), (std::vector<long>{a, 1}));
  }
  for (long b = 1; b <= 4; ++b) {
    const std::vector<long> raw{b, b + 1, 1};
    EXPECT_EQ(fold(3, raw).x(), (std::vector<long>{1, b - 1}));
  }
  const std::vector<long> sorted{4, 2, 0};
  EXPECT_EQ(fold(3, sorted).alpha(), sorted);
  const std::vector<long> wrong{1, 0};
  EXPECT_THROW(fold(3, wrong), DomainError);
}

TEST(StepLaw, RankThreeOrigin) {
  for (int q : kQs) {
    const auto law = transition_distribution(3, Rational(q), SectorPoint::origin(3));
    ASSERT_EQ(law.entries.size(), 2u);
    EXPECT_EQ(law.mass_of(xy(1, 0)), Rational(1, 2));
    EXPECT_EQ(law.mass_of(xy(0, 1)), Rational(1, 2));
  }
}

TEST(StepLaw, RankThreeYAxis) {
  for (int qi : kQs) {
    const Rational q = qi;
    const Rational k = 2 * (q * q + q + 1);
    for (long b = 1; b <= 3; ++b) {
      const auto law = transition_distribution(3, q, xy(0, b));
      std::map<long, Rational> dy;
      for (const auto& [target, mass] : law.entries) dy[target.x()[1] - b] += mass;
      ASSERT_EQ(dy.size(), 3u);
      EXPECT_EQ(dy[1], q * q / k);
      EXPECT_EQ(dy[0], (q * q + q) / k);
      EXPECT_EQ(dy[-1], (q + 2) / k);
    }
  }
}

TEST(StepLaw, RankThreeXAxisMirrorsYAxis) {
  for (int q : kQs) {
    for (long a = 1; a <= 3; ++a) {
      const auto on_x = transition_distribution(3, Rational(q), xy(a, 0));
      const auto on_y = transition_distribution(3, Rational(q), xy(0, a));
      ASSERT_EQ(on_x.entries.size(), on_y.entries.size());
      for (const auto& [target, mass] : on_x.entries) {
        EXPECT_EQ(on_y.mass_of(xy(target.x()[1], target.x()[0])), mass);
      }
    }
  }
}

TEST(StepLaw, RankThreeInterior) {
  for (int qi : kQs) {
    const Rational q = qi;
    const Rational k = 2 * (q * q + q + 1);
    const auto law = transition_distribution(3, q, xy(2, 3));
    ASSERT_EQ(law.entries.size(), 6u);
    EXPECT_EQ(law.mass_of(xy(3, 3)), q * q / k);
    EXPECT_EQ(law.mass_of(xy(2, 4)), q * q / k);
    EXPECT_EQ(law.mass_of(xy(3, 2)), q / k);
    EXPECT_EQ(law.mass_of(xy(1, 4)), q / k);
    EXPECT_EQ(law.mass_of(xy(1, 3)), 1 / k);
    EXPECT_EQ(law.mass_of(xy(2, 2)), 1 / k);
  }
}

// Every point with entries in 0..3, walked odometer style.
std::vector<SectorPoint> small_points(unsigned d) {
  std::vector<SectorPoint> out;
  std::vector<long> x(d - 1, 0);
  while (true) {
    out.push_back(SectorPoint::from_x(x));
    std::size_t i = 0;
    while (i < x.size() && x[i] == 3) x[i++] = 0;
    if (i == x.size()) break;
    ++x[i];
  }
  return out;
}

TEST(StepLaw, ExhaustiveMassIsOne) {
  for (unsigned d = 2; d <= 5; ++d) {
    for (int q : kQs) {
      for (const auto& p : small_points(d)) {
        const auto law = transition_distribution(d, Rational(q), p);
        Rational total = 0;
        for (std::size_t i = 0; i < law.entries.size(); ++i) {
          total += law.entries[i].second;
          if (i > 0) EXPECT_LT(law.entries[i - 1].first, law.entries[i].first);
        }
        EXPECT_EQ(total, 1) << "d=" << d << " q=" << q << " p=" << p.to_string();
      }
    }
  }
}

TEST(StepLaw, HighRankMassIsOneOnCorners) {
  for (unsigned d = 6; d <= 7; ++d) {
    for (int q : {2, 9}) {
      for (const auto& x : {std::vector<long>(d - 1, 0), std::vector<long>(d - 1, 1), std::vector<long>(d - 1, 3)}) {
        auto y = x;
        y[d / 2] = 0;
        for (const auto& p : {SectorPoint::from_x(x), SectorPoint::from_x(y)}) {
          const auto law = transition_distribution(d, Rational(q), p);
          Rational total = 0;
          for (const auto& [target, mass] : law.entries) total += mass;
          EXPECT_EQ(total, 1);
        }
      }
    }
  }
}

TEST(StepLaw, InteriorIncrementLawIsHomogeneous) {
  for (unsigned d = 2; d <= 6; ++d) {
    const Rational q = 3;
    const auto law = qcalc::increment_law(d);
    const auto degree = qcalc::vertex_degree(d, q);
    for (const auto& x : {std::vector<long>(d - 1, 1), std::vector<long>(d - 1, 4)}) {
      const auto p = SectorPoint::from_x(x);
      std::map<long, Rational> seen;
      for (const auto& [target, mass] : transition_distribution(d, q, p).entries) {
        seen[target.r_norm() - p.r_norm()] += mass;
      }
      ASSERT_EQ(seen.size(), law.size());
      for (const auto& [r, poly] : law) EXPECT_EQ(seen[r], poly.evaluate(q) / degree);
    }
  }
}

TEST(StepLaw, RejectsBadArguments) {
  EXPECT_THROW(transition_distribution(3, Rational(1), xy(0, 0)), DomainError);
  EXPECT_THROW(transition_distribution(1, Rational(2), SectorPoint::origin(1)), DomainError);
}

// Detailed balance N(x) P(x, y) = N(y) P(y, x) fixes the fiber sizes N from
// N(origin) = 1; summing over x + y = r reproduces the sphere count.
TEST(StepLaw, DetailedBalanceRecoversSphereSizes) {
  for (int qi : {2, 3, 5}) {
    const Rational q = qi;
    std::map<SectorPoint, Rational> fiber{{xy(0, 0), 1}};
    std::deque<SectorPoint> queue{xy(0, 0)};
    while (!queue.empty()) {
      const auto p = queue.front();
      queue.pop_front();
      for (const auto& [target, mass] : transition_distribution(3, q, p).entries) {
        if (target.x()[0] + target.x()[1] > 6) continue;
        const Rational back = transition_distribution(3, q, target).mass_of(p);
        ASSERT_GT(back, 0);
        const Rational n = fiber.at(p) * mass / back;
        auto [it, inserted] = fiber.emplace(target, n);
        if (inserted) {
          queue.push_back(target);
        } else {
          EXPECT_EQ(it->second, n) << target.to_string();
        }
      }
    }
    for (unsigned r = 1; r <= 6; ++r) {
      Rational sphere = 0;
      for (const auto& [p, n] : fiber) {
        if (p.x()[0] + p.x()[1] == static_cast<long>(r)) sphere += n;
      }
      EXPECT_EQ(sphere, qcalc::sphere_size_d3(q, r).value) << "q=" << qi << " r=" << r;
    }
    for (const auto& [p, n] : fiber) {
      const auto bound = qcalc::fiber_bound(3, q, std::vector<long>(p.x().begin(), p.x().end()));
      EXPECT_LE(n, bound.product_form);
    }
  }
}

TEST(StepLaw, RankTwoFibersAreTreeSpheres) {
  for (int qi : {2, 3, 4}) {
    const Rational q = qi;
    Rational n = 1;
    for (long m = 0; m < 8; ++m) {
      const auto p = SectorPoint::from_x({m});
      const auto up = SectorPoint::from_x({m + 1});
      n = n * transition_distribution(2, q, p).mass_of(up) / transition_distribution(2, q, up).mass_of(p);
      EXPECT_EQ(n, (q + 1) * pow(q, static_cast<unsigned>(m)));
    }
  }
}

TEST(Bias, UpIsQTimesDown) {
  for (int qi = 2; qi <= 9; ++qi) {
    const Rational q = qi;
    for (unsigned d = 2; d <= 7; ++d) {
      const auto bias = bias_check(d, q);
      ASSERT_EQ(bias.size(), d - 1);
      for (const auto& b : bias) {
        EXPECT_TRUE(b.ratio_is_q);
        EXPECT_EQ(b.up, q * b.down);
      }
    }
    EXPECT_EQ(bias_check(2, q)[0].up, q / (q + 1));
    EXPECT_EQ(bias_check(2, q)[0].down, 1 / (q + 1));
    const Rational k = 2 * (q * q + q + 1);
    EXPECT_EQ(bias_check(3, q)[0].up, (q * q + q) / k);
    EXPECT_EQ(bias_check(3, q)[0].down, (q + 1) / k);
  }
}

TEST(Evolve, HorizonZeroAndOne) {
  const Rational q = 3;
  const auto start = xy(1, 2);
  const auto zero = evolve_exact(3, q, start, 0, 100);
  ASSERT_EQ(zero.distribution.size(), 1u);
  EXPECT_EQ(zero.distribution.at(start), 1);
  const auto one = evolve_exact(3, q, start, 1, 100);
  const auto law = transition_distribution(3, q, start);
  ASSERT_EQ(one.distribution.size(), law.entries.size());
  for (const auto& [target, mass] : law.entries) EXPECT_EQ(one.distribution.at(target), mass);
  EXPECT_EQ(one.truncated_mass, 0);
}

TEST(Evolve, TwoStepsComposeByHand) {
  const Rational q = 2;
  const auto origin = SectorPoint::origin(3);
  Rational back = 0;
  for (const auto& [mid, mass] : transition_distribution(3, q, origin).entries) {
    back += mass * transition_distribution(3, q, mid).mass_of(origin);
  }
  const auto ev = evolve_exact(3, q, origin, 2, 100);
  EXPECT_EQ(ev.distribution.at(origin), back);
  // Only the move (0,0,1) lands back on the origin: mass 1 / k from either side.
  EXPECT_EQ(back, Rational(1, 14));
}

TEST(Evolve, TruncationConservesMass) {
  const auto ev = evolve_exact(3, Rational(2), SectorPoint::origin(3), 6, 4);
  Rational total = ev.truncated_mass;
  for (const auto& [p, mass] : ev.distribution) {
    EXPECT_LE(p.r_norm(), 4);
    total += mass;
  }
  EXPECT_EQ(total, 1);
  EXPECT_GT(ev.truncated_mass, 0);

  const auto fl = evolve_float(3, Rational(2), SectorPoint::origin(3), 6, 4);
  EXPECT_NEAR(fl.truncated_mass, to_double(ev.truncated_mass), 1e-12);
  for (const auto& [r, mass] : ev.r_histogram()) EXPECT_NEAR(fl.r_histogram().at(r), to_double(mass), 1e-12);
}

TEST(Evolve, StateCap) {
  EvolveOptions options;
  options.state_cap = 10;
  try {
    evolve_exact(3, Rational(2), SectorPoint::origin(3), 20, 1000, options);
    FAIL() << "expected CapExceeded";
  } catch (const CapExceeded& e) {
    EXPECT_EQ(e.cap(), 10u);
    EXPECT_GT(e.progress(), 0u);
  }
}

TEST(Philox, KnownAnswers) {
  using C = Philox4x32::Counter;
  EXPECT_EQ(Philox4x32::apply(C{0, 0, 0, 0}, {0, 0}), (C{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8}));
  EXPECT_EQ(Philox4x32::apply(C{0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}),
            (C{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd}));
  EXPECT_EQ(Philox4x32::apply(C{0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}),
            (C{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1}));
}

TEST(Philox, StreamsAreReproducibleAndDistinct) {
  StreamRng a(42, 7), b(42, 7), c(42, 8);
  for (int i = 0; i < 100; ++i) {
    const auto va = a.next_u64();
    EXPECT_EQ(va, b.next_u64());
    EXPECT_NE(va, c.next_u64());
  }
  StreamRng u(1, 0);
  double sum = 0;
  for (int i = 0; i < 100000; ++i) {
    const double x = u.uniform();
    ASSERT_GE(x, 0.0);
    ASSERT_LT(x, 1.0);
    sum += x;
  }
  EXPECT_NEAR(sum / 100000, 0.5, 0.005);
}

TEST(Simulate, DeterministicAcrossThreadCounts) {
  SimulationConfig config;
  config.d = 3;
  config.q = 2;
  config.horizon = 200;
  config.trajectories = 300;
  config.seed = 99;
  config.threads = 1;
  const auto one = simulate(config);
  config.threads = 4;
  const auto four = simulate(config);
  EXPECT_EQ(one.rho_samples, four.rho_samples);
  EXPECT_EQ(one.boundary_visits, four.boundary_visits);
  EXPECT_EQ(one.last_boundary_step, four.last_boundary_step);
  EXPECT_EQ(one.interior_increment_histogram, four.interior_increment_histogram);
  ASSERT_EQ(one.rho_samples.size(), 300u);
  for (auto v : one.boundary_visits) EXPECT_LE(v, 200u);
}

TEST(Simulate, HorizonZeroStaysAtOrigin) {
  SimulationConfig config;
  config.d = 4;
  config.q = 3;
  config.horizon = 0;
  config.trajectories = 5;
  const auto stats = simulate(config);
  for (auto r : stats.rho_samples) EXPECT_EQ(r, 0);
  EXPECT_TRUE(stats.interior_increment_histogram.empty());
  config.trajectories = 0;
  EXPECT_THROW(simulate(config), DomainError);
}

TEST(Simulate, IncrementsComeFromMoves) {
  SimulationConfig config;
  config.d = 4;
  config.q = 2;
  config.horizon = 300;
  config.trajectories = 200;
  config.seed = 5;
  const auto stats = simulate(config);
  std::set<long> support;
  for (const auto& m : qcalc::enumerate_moves(4)) support.insert(m.r_increment);
  for (const auto& [r, count] : stats.interior_increment_histogram) EXPECT_TRUE(support.count(r)) << r;
}

TEST(Simulate, InteriorDriftMatchesExact) {
  SimulationConfig config;
  config.d = 3;
  config.q = 5;
  config.horizon = 1000;
  config.trajectories = 200;
  config.seed = 11;
  const auto stats = simulate(config);
  const auto summary = summarize_interior(stats);
  ASSERT_GE(summary.count, 100000u);
  EXPECT_NEAR(summary.mean, 48.0 / 31.0, 4 * summary.standard_error);
}

TEST(Simulate, RankTwoIsBiasedReflectedWalk) {
  SimulationConfig config;
  config.d = 2;
  config.q = 3;
  config.horizon = 500;
  config.trajectories = 200;
  config.seed = 3;
  const auto stats = simulate(config);
  const auto& h = stats.interior_increment_histogram;
  ASSERT_EQ(h.size(), 2u);
  const double up = static_cast<double>(h.at(1));
  const double total = up + static_cast<double>(h.at(-1));
  const double p = 0.75;
  EXPECT_NEAR(up / total, p, 4 * std::sqrt(p * (1 - p) / total));
}

TEST(Tail, LargeSWindowEmptiesBothTails) {
  const auto report = tail_experiment(3, Rational(5), pow(BigInt(5), 12u), 30.0, 500, 17);
  EXPECT_EQ(report.p_exceed_r0_at_t0, 0.0);
  EXPECT_EQ(report.p_below_r1_at_t1, 0.0);
  EXPECT_TRUE(report.flagged);  // t_0 < 0
}

TEST(Tail, LowerTailWithinNormalReference) {
  const auto report = tail_experiment(3, Rational(5), pow(BigInt(5), 12u), 2.0, 10000, 20240611);
  EXPECT_LE(report.p_exceed_r0_at_t0, report.normal_tail_reference + 0.05);
  EXPECT_EQ(report.trajectories, 10000u);
}

}  // namespace
}  // namespace ramcut::sector
