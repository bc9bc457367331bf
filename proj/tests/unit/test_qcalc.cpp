#include "oracles.hpp"

#include "ramcut/error.hpp"
#include "ramcut/qcalc/rational.hpp"
#include "ramcut/qcalc/bounds.hpp"
#include "ramcut/qcalc/constants.hpp"
#include "ramcut/qcalc/moves.hpp"
#include "ramcut/qcalc/qpolynomial.hpp"
#include "ramcut/qcalc/schedule.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

namespace ramcut::qcalc {
namespace {

// Rows d = 2..7 of the drift/degree table, constant term first.
const std::map<unsigned, std::pair<QPolynomial, QPolynomial>>& table() {
  static const std::map<unsigned, std::pair<QPolynomial, QPolynomial>> rows = {
      {2, {{-1, 1}, {1, 1}}},
      {3, {{-4, 0, 4}, {2, 2, 2}}},
      {4, {{-10, -4, 2, 8, 4}, {3, 3, 4, 3, 1}}},
      {5, {{-20, -12, -8, 4, 16, 8, 12}, {4, 4, 6, 6, 6, 2, 2}}},
      {6, {{-35, -25, -28, -15, 3, 21, 25, 22, 23, 9}, {5, 5, 8, 9, 11, 9, 7, 4, 3, 1}}},
      {7,
       {{-56, -44, -60, -52, -40, -8, 24, 32, 56, 52, 52, 20, 24},
        {6, 6, 10, 12, 16, 16, 18, 12, 12, 8, 6, 2, 2}}},
  };
  return rows;
}

TEST(QPolynomial, ArithmeticAndRendering) {
  const QPolynomial a{-1, 1};  // q - 1
  const QPolynomial b{1, 1};   // q + 1
  EXPECT_EQ((a * b).to_string(), "q^2 - 1");
  EXPECT_EQ((a + b).to_string(), "2q");
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ((a - a).degree(), -1);
  EXPECT_EQ((a * b).divide_exact(a), b);
  EXPECT_THROW(b.divide_exact(QPolynomial{0, 0, 1}), DomainError);
  EXPECT_EQ(table().at(4).first.to_string(), "4q^4 + 8q^3 + 2q^2 - 4q - 10");
  EXPECT_EQ(QPolynomial({0, 0, 1}).evaluate(Rational(2, 3)), Rational(4, 9));
}

TEST(QPolynomial, LeadingCoefficientIsNeverZero) {
  const QPolynomial p{3, 0, 0, 0};
  EXPECT_EQ(p.degree(), 0);
  EXPECT_EQ(p.coeffs().back(), 3);
}

TEST(GaussianBinomial, SmallValues) {
  EXPECT_EQ(gaussian_binomial(2, 1, Rational(4)), 5);
  EXPECT_EQ(gaussian_binomial(2, 1).to_string(), "q + 1");
  EXPECT_EQ(gaussian_binomial(3, 1) + gaussian_binomial(3, 2), QPolynomial({2, 2, 2}));
  EXPECT_EQ(gaussian_binomial(5, 0).to_string(), "1");
  EXPECT_EQ(gaussian_binomial(5, 5).to_string(), "1");
}

TEST(GaussianBinomial, MatchesSubspaceCounts) {
  EXPECT_EQ(oracle::count_subspaces(2, 4, 2), 35u);
  EXPECT_EQ(gaussian_binomial(4, 2, Rational(2)), 35);
  for (const auto& [p, n] : std::vector<std::pair<unsigned, unsigned>>{{2, 3}, {3, 3}, {2, 4}}) {
    for (unsigned j = 0; j <= n; ++j) {
      const auto count = oracle::count_subspaces(p, n, j);
      EXPECT_EQ(gaussian_binomial(n, j, Rational(p)), Rational(count)) << "p=" << p << " n=" << n << " j=" << j;
      EXPECT_EQ(gaussian_binomial(n, j).evaluate(BigInt(p)), BigInt(count));
    }
  }
}

TEST(GaussianBinomial, RejectsBadArguments) {
  EXPECT_THROW(gaussian_binomial(0, 0), DomainError);
  EXPECT_THROW(gaussian_binomial(3, 4), DomainError);
  EXPECT_THROW(gaussian_binomial(3, 4, Rational(2)), DomainError);
}

TEST(VertexDegree, TableColumnAndValues) {
  EXPECT_EQ(vertex_degree(2).to_string(), "q + 1");
  EXPECT_EQ(vertex_degree(4).to_string(), "q^4 + 3q^3 + 4q^2 + 3q + 3");
  EXPECT_EQ(vertex_degree(4, Rational(2)), 65);
  EXPECT_THROW(vertex_degree(1), DomainError);
}

TEST(Moves, CountAndInvariants) {
  for (unsigned d = 2; d <= 8; ++d) {
    const auto moves = enumerate_moves(d);
    ASSERT_EQ(moves.size(), (1u << d) - 2);
    const auto weights = r_weights(d);
    for (const auto& m : moves) {
      unsigned inversions = 0;
      for (unsigned i = 0; i < d; ++i) {
        for (unsigned j = i + 1; j < d; ++j) inversions += m.gamma[i] == 1 && m.gamma[j] == 0;
      }
      EXPECT_EQ(m.z_exponent, inversions);
      long r = 0;
      for (unsigned i = 0; i + 1 < d; ++i) {
        EXPECT_EQ(m.gamma_prime[i], m.gamma[i] - m.gamma[i + 1]);
        r += static_cast<long>(i + 1) * (d - 1 - i) * m.gamma_prime[i];
      }
      EXPECT_EQ(m.r_increment, r);
      const int ones = std::accumulate(m.gamma.begin(), m.gamma.end(), 0);
      EXPECT_GT(ones, 0);
      EXPECT_LT(ones, static_cast<int>(d));
    }
  }
}

TEST(Moves, NamedExamples) {
  auto find = [](unsigned d, std::vector<int> gamma) {
    for (const auto& m : enumerate_moves(d)) {
      if (m.gamma == gamma) return m;
    }
    throw std::runtime_error("move not found");
  };
  const auto a = find(3, {1, 0, 0});
  EXPECT_EQ(a.z_exponent, 2u);
  EXPECT_EQ(a.gamma_prime, (std::vector<int>{1, 0}));
  EXPECT_EQ(a.r_increment, 2);
  const auto b = find(2, {0, 1});
  EXPECT_EQ(b.z_exponent, 0u);
  EXPECT_EQ(b.gamma_prime, (std::vector<int>{-1}));
  EXPECT_EQ(b.r_increment, -1);
  const auto c = find(3, {0, 1, 0});
  EXPECT_EQ(c.z_exponent, 1u);
  EXPECT_EQ(c.gamma_prime, (std::vector<int>{-1, 1}));
  EXPECT_EQ(c.r_increment, 0);
}

TEST(Moves, RankThreeWeightExponent) {
  // q^{Z} = q^{dx + dy + 1} for every rank-3 move.
  for (const auto& m : enumerate_moves(3)) {
    EXPECT_EQ(static_cast<int>(m.z_exponent), m.gamma_prime[0] + m.gamma_prime[1] + 1);
  }
}

TEST(RNorm, LinearWithExtremeUnitVectors) {
  for (unsigned d = 2; d <= 9; ++d) {
    const auto w = r_weights(d);
    std::vector<long> e(d - 1, 0);
    e.front() = 1;
    EXPECT_EQ(r_norm(d, e), static_cast<long>(d - 1));
    std::fill(e.begin(), e.end(), 0);
    e.back() = 1;
    EXPECT_EQ(r_norm(d, e), static_cast<long>(d - 1));
    const auto mid = (d - 1 + 1) / 2 - 1;  // 0-based index of ceil((d-1)/2)
    EXPECT_EQ(w[mid], *std::max_element(w.begin(), w.end()));

    std::vector<long> x(d - 1), y(d - 1), sum(d - 1);
    for (unsigned i = 0; i + 1 < d; ++i) {
      x[i] = 3 * i + 1;
      y[i] = 7 - static_cast<long>(i);
      sum[i] = x[i] + y[i];
    }
    EXPECT_EQ(r_norm(d, sum), r_norm(d, x) + r_norm(d, y));
  }
}

TEST(DriftPolynomial, MatchesTable) {
  for (const auto& [d, row] : table()) {
    EXPECT_EQ(drift_polynomial(d), row.first) << "d=" << d;
    EXPECT_EQ(vertex_degree(d), row.second) << "d=" << d;
  }
}

TEST(DriftPolynomial, TotalMassEqualsDegree) {
  for (unsigned d = 2; d <= 9; ++d) {
    QPolynomial mass;
    for (const auto& m : enumerate_moves(d)) mass += QPolynomial::monomial(1, m.z_exponent);
    EXPECT_EQ(mass, vertex_degree(d)) << "d=" << d;
  }
}

TEST(DriftConstants, NamedExamples) {
  const auto c3 = drift_constants(3, Rational(2));
  EXPECT_EQ(c3.drift, Rational(6, 7));
  EXPECT_EQ(c3.degree, 14);
  EXPECT_EQ(c3.cutoff_constant * c3.drift, 1);
  const auto c2 = drift_constants(2, Rational(3));
  EXPECT_EQ(c2.drift, Rational(1, 2));
  EXPECT_EQ(c2.cutoff_constant, 2);
  EXPECT_FALSE(c2.q_not_prime_power);
  EXPECT_TRUE(drift_constants(3, Rational(6)).q_not_prime_power);
  EXPECT_TRUE(drift_constants(3, Rational(5, 2)).q_not_prime_power);
  EXPECT_THROW(drift_constants(3, Rational(3, 2)), DomainError);
  EXPECT_THROW(drift_constants(1, Rational(2)), DomainError);
}

TEST(DriftConstants, RankThreeClosedForms) {
  for (int qi = 2; qi <= 20; ++qi) {
    const Rational q = qi;
    const auto c = drift_constants(3, q);
    const Rational k2 = q * q + q + 1;
    EXPECT_EQ(c.variance, 4 * (q * q * q + 4 * q * q + q) / (k2 * k2));
    EXPECT_EQ(c.drift, 2 * (q * q - 1) / k2);
    EXPECT_EQ(c.cutoff_constant, k2 / (2 * (q * q - 1)));
    EXPECT_EQ(c.drift * table().at(3).second.evaluate(q), table().at(3).first.evaluate(q));
  }
}

TEST(DriftConstants, DriftApproachesCenterWeight) {
  // sup_{2 <= q <= 1024} q |E_d(q) - floor(d/2) ceil(d/2)|, computed once from
  // the table polynomials in exact arithmetic and rounded up.
  const std::map<unsigned, double> fitted = {{2, 2.0}, {3, 2.31}, {4, 4.37}, {5, 5.36}, {6, 7.15}, {7, 7.75}};
  for (const auto& [d, k_d] : fitted) {
    const double center = (d / 2) * ((d + 1) / 2);
    for (int q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 64, 101, 256, 512, 1000, 1024}) {
      const double e = to_double(drift_constants(d, Rational(q)).drift);
      EXPECT_LE(std::abs(e - center), k_d / q) << "d=" << d << " q=" << q;
    }
    const double e1000 = to_double(drift_constants(d, Rational(1000)).drift);
    EXPECT_LT(std::abs(e1000 - center) / center, 0.01);
  }
}

TEST(TwoStepDrift, PositiveWithKnownValue) {
  EXPECT_EQ(two_step_drift_d3(Rational(2)), Rational(27, 196));
  for (int q = 2; q <= 100; ++q) EXPECT_GT(two_step_drift_d3(Rational(q)), 0) << q;
}

TEST(MixingSchedule, RankThreeRenderings) {
  const auto s = mixing_schedule(3, Rational(2), BigInt(1) << 20, 0.0);
  EXPECT_EQ(s.cutoff_constant, Rational(7, 6));
  ASSERT_TRUE(s.rank_three);
  EXPECT_EQ(s.rank_three->rate, Rational(7, 3));
  EXPECT_NEAR(s.rank_three->log_q2_n, 10.0, 1e-12);
  // (7/6) log_2 n = (7/3) log_4 n = 70/3 at n = 2^20.
  EXPECT_NEAR(s.t_cutoff, 70.0 / 3.0, 1e-9);
  EXPECT_NEAR(s.rank_three->t_cutoff, s.t_cutoff, 1e-9);
  EXPECT_LT(s.t_0, s.t_cutoff);
  EXPECT_LT(s.t_cutoff, s.t_1);
  EXPECT_NEAR(s.t_1 - s.t_0, 2.0 * s.window, 1e-9);
  EXPECT_LT(s.r_0, s.log_q_n);
  EXPECT_LT(s.log_q_n, s.r_1);
  EXPECT_FALSE(s.pre_asymptotic);
  EXPECT_TRUE(rank_three_rate_identity());
}

TEST(MixingSchedule, TreeRendering) {
  for (int q : {2, 3, 5, 7}) {
    const auto s = mixing_schedule(2, Rational(q), BigInt(1000000), 1.0);
    ASSERT_TRUE(s.tree);
    EXPECT_EQ(s.tree->k, q + 1);
    EXPECT_EQ(s.tree->rate, Rational(q + 1, q - 1));
    EXPECT_EQ(s.tree->rate, s.cutoff_constant);
    EXPECT_NEAR(s.tree->t_cutoff, (q + 1.0) / (q - 1.0) * std::log(1e6) / std::log(q), 1e-9);
    EXPECT_NEAR(s.t_1 - s.t_0, 4.0 * s.window, 1e-9);
  }
  EXPECT_TRUE(tree_rate_identity());
}

TEST(MixingSchedule, PreAsymptoticAndErrors) {
  const auto small = mixing_schedule(4, Rational(2), BigInt(16), 0.0);
  EXPECT_TRUE(small.pre_asymptotic);
  EXPECT_THROW(mixing_schedule(3, Rational(2), BigInt(3), 0.0), DomainError);
  EXPECT_THROW(mixing_schedule(3, Rational(2), BigInt(100), -1.0), DomainError);
}

TEST(SphereSize, FormulaValues) {
  EXPECT_EQ(sphere_size_d3(Rational(2), 2).value, 98);
  for (int q = 2; q <= 9; ++q) EXPECT_EQ(sphere_size_d3(Rational(q), 1).value, vertex_degree(3, Rational(q)));
  const auto origin = sphere_size_d3(Rational(3), 0);
  EXPECT_EQ(origin.value, 1);
  EXPECT_TRUE(origin.outside_formula_range);
  EXPECT_EQ(ball_bound_d3(Rational(2), 3), 4608);
  Rational ball = 0;
  for (unsigned r = 0; r <= 3; ++r) ball += sphere_size_d3(Rational(2), r).value;
  EXPECT_LE(ball, ball_bound_d3(Rational(2), 3));
}

TEST(FiberBound, NamedExamples) {
  for (int qi = 2; qi <= 7; ++qi) {
    const Rational q = qi;
    const std::vector<long> zero{0, 0};
    EXPECT_EQ(fiber_bound(3, q, zero).product_form, (q + 1) * (q * q + q + 1));
    const std::vector<long> x1{4};
    EXPECT_EQ(fiber_bound(2, q, x1).product_form, (q + 1) * pow(q, 4u));
    const std::vector<long> ones{1, 1, 1};
    const auto b = fiber_bound(4, q, ones);
    EXPECT_EQ(b.r_norm, 10);
    EXPECT_EQ(b.product_form, (q + 1) * (q * q + q + 1) * (q * q * q + q * q + q + 1) * pow(q, 10u));
    EXPECT_LE(b.product_form, b.loose_form);
  }
  const std::vector<long> wrong{1};
  EXPECT_THROW(fiber_bound(3, Rational(2), wrong), DomainError);
}

TEST(FiberBound, ProductNeverExceedsLooseForm) {
  for (unsigned d = 2; d <= 6; ++d) {
    for (int q = 2; q <= 9; ++q) {
      std::vector<long> x(d - 1, 0);
      for (long v = 0; v < 4; ++v) {
        x[v % (d - 1)] = v;
        const auto b = fiber_bound(d, Rational(q), x);
        EXPECT_LE(b.product_form, b.loose_form);
      }
    }
  }
}

TEST(NormBudget, OriginAndDominance) {
  const std::vector<long> origin{0, 0};
  for (int q : {2, 3, 5}) {
    const auto b = l2_norm_budget(3, Rational(q), origin, BigInt(1));
    ASSERT_TRUE(b.rank_three);
    ASSERT_TRUE(b.rank_three->linear);
    EXPECT_NEAR(*b.rank_three->linear, 0.5 * std::pow(q, 4.5), 1e-9 * std::pow(q, 4.5));
  }
  // The general form dominates the sharper rank-3 form for q >= 2, x + y >= 1.
  for (int q = 2; q <= 9; ++q) {
    for (long s = 1; s <= 200; ++s) {
      for (long x : {0L, s / 2, s}) {
        const std::vector<long> v{x, s - x};
        const auto b = l2_norm_budget(3, Rational(q), v, BigInt(1000));
        EXPECT_GE(b.general.log, b.rank_three->log) << "q=" << q << " x=" << x << " y=" << s - x;
      }
    }
  }
}

TEST(NormBudget, EventuallyDecreasing) {
  // The largest sharper bound over splits x + y = s decreases once s clears
  // 9 / ln q plus a margin for the binomial factors.
  for (int q : {2, 3, 4, 5, 7, 9}) {
    auto best = [&](long s) {
      double m = -std::numeric_limits<double>::infinity();
      for (long x = 0; x <= s; ++x) {
        const std::vector<long> v{x, s - x};
        m = std::max(m, l2_norm_budget(3, Rational(q), v, BigInt(1)).rank_three->log);
      }
      return m;
    };
    const long start = static_cast<long>(std::ceil(9.0 / std::log(q))) + 10;
    double previous = best(start);
    for (long s = start + 1; s <= 300; ++s) {
      const double current = best(s);
      EXPECT_LT(current, previous) << "q=" << q << " s=" << s;
      previous = current;
    }
  }
}

TEST(NormBudget, HugeValuesStayInLogSpace) {
  const std::vector<long> far{0, 0, 50};
  const auto b = l2_norm_budget(4, Rational(2), far, BigInt(1) << 2000);
  EXPECT_FALSE(b.general.linear.has_value());
  EXPECT_TRUE(std::isfinite(b.general.log));
  EXPECT_FALSE(b.rank_three.has_value());
}

}  // namespace
}  // namespace ramcut::qcalc
