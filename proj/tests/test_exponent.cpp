#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "pauli_super/exponent.hpp"

using namespace pauli_super;

TEST(Phi, Examples) {
  const std::vector<double> point{1, 0, 0, 0};
  EXPECT_DOUBLE_EQ(phi(point), 1.0);
  const std::vector<double> uniform(7, 1.0 / 7);
  EXPECT_NEAR(phi(uniform), 7.0, 1e-12);
  const std::vector<double> half{0.5, 0.5};
  EXPECT_NEAR(phi(half), 2.0, 1e-15);
  EXPECT_THROW(phi(std::vector<double>{0.5, 0.6}), DomainError);
  EXPECT_THROW(phi(std::vector<double>{1.5, -0.5}), DomainError);
}

TEST(GOfZ, ValuesAndDomain) {
  const double theta2 = 3 + 2 * std::sqrt(3.0);
  EXPECT_NEAR(g_of_z(1 / theta2, 2), -std::log(theta2), 1e-13);
  EXPECT_NEAR(g_of_z(1 / theta2, 2), -1.8663, 1e-4);
  // z -> 0+: cz ln z -> 0, (1-cz) ln(1-cz) -> 0, leaving -1/2 ln(c t^2) = -1/2 ln 12
  EXPECT_NEAR(g_of_z(1e-13, 2), -0.5 * std::log(12.0), 1e-9);
  for (double z : {1e-6, 0.1, 0.3, 1.0 / 3 - 1e-9}) EXPECT_TRUE(std::isfinite(g_of_z(z, 2)));
  EXPECT_THROW(g_of_z(0, 2), DomainError);
  EXPECT_THROW(g_of_z(1.0 / 3, 2), DomainError);
  EXPECT_THROW(g_of_z(0.1, 3), ConfigurationError);
}

TEST(ClosedForm, TheoreticalExponent) {
  EXPECT_NEAR(theoretical_exponent(2), 3 + 2 * std::sqrt(3.0), 1e-14);
  EXPECT_NEAR(theoretical_exponent(2), 6.4641016, 1e-7);
  EXPECT_NEAR(theoretical_exponent(4), 15 + 4 * std::sqrt(15.0), 1e-12);
  EXPECT_NEAR(z_star(2), 1 / (3 + 2 * std::sqrt(3.0)), 1e-16);
  EXPECT_NEAR(z_star(2), 0.1547005, 1e-7);
  EXPECT_THROW(theoretical_exponent(3), ConfigurationError);
  EXPECT_THROW(theoretical_exponent(1), ConfigurationError);
}

TEST(CriticalPoint, PassesForPowersOfTwo) {
  for (long t : {2L, 4L, 8L, 16L}) {
    const auto cp = verify_critical_point(t, 1e-8);
    EXPECT_TRUE(cp.report.passed()) << t;
    EXPECT_LT(std::abs(cp.g_prime_residual), 1e-8);
    EXPECT_GT(cp.g_second, 0);
    // g'' = c/z + c^2/(1 - cz) at z*
    const double c = t * t - 1.0, z = cp.z_star;
    EXPECT_NEAR(cp.g_second, c / z + c * c / (1 - c * z), 1e-4 * cp.g_second);
    EXPECT_NEAR(std::exp(-cp.g_at_z_star), theoretical_exponent(t), 1e-9 * theoretical_exponent(t));
  }
  EXPECT_THROW(verify_critical_point(2, 0), DomainError);
}

TEST(ConstrainedMax, MatchesClosedForm) {
  for (long t : {2L, 4L, 8L, 16L}) {
    const auto s = block_sizes(t);
    const auto m = maximize_phi_constrained(t);
    EXPECT_NEAR(m.value, theoretical_exponent(t), 1e-7 * theoretical_exponent(t)) << t;
    EXPECT_NEAR(m.z, z_star(t), 1e-6 * z_star(t));
    EXPECT_LT(std::abs(s.a * m.x - s.b * m.y), 1e-10);
    EXPECT_LT(std::abs(s.a * m.x + s.b * m.y + s.c * m.z - 1), 1e-10);
    EXPECT_LE(m.value, s.d);
    EXPECT_NEAR(m.value, std::exp(-g_of_z(m.z, t)), 1e-9 * m.value);
  }
}

TEST(ConstrainedMax, RandomFeasiblePointsDoNotExceedIt) {
  for (long t : {2L, 4L}) {
    const double best = maximize_phi_constrained(t).value;
    EXPECT_LE(sample_constrained_phi_max(t, t == 2 ? 10000 : 2000, 77), best + 1e-9);
  }
}

TEST(Stirling, Sandwich) {
  EXPECT_TRUE(stirling_sandwich_check(MultiDegree({9})));
  EXPECT_TRUE(stirling_sandwich_check(MultiDegree({3, 3, 3})));
  EXPECT_EQ(multinomial(MultiDegree({3, 3, 3})), 1680);
  // 9 ln 3 = ln Phi^9; 1680 sits between 3^9 / 9^3 = 27 and 9 * 3^9 = 177147.
  EXPECT_NEAR(9 * log_phi_counts(MultiDegree({3, 3, 3})), 9 * std::log(3.0), 1e-12);
  EXPECT_TRUE(stirling_sandwich_check(MultiDegree({0, 4, 0, 1})));
  EXPECT_THROW(stirling_sandwich_check(MultiDegree::zero(3)), DomainError);

  std::mt19937_64 rng(17);
  for (int k = 0; k < 1000; ++k) {
    const unsigned n = 7 + rng() % 24;
    std::vector<unsigned> c(7, 1);
    for (unsigned extra = n - 7; extra > 0; --extra) ++c[rng() % 7];
    EXPECT_TRUE(stirling_sandwich_check(MultiDegree(c)));
  }
}

TEST(UpperBound, Checks) {
  EXPECT_TRUE(upper_bound_check(1, 7, 2));
  EXPECT_FALSE(upper_bound_check(1, BigInt(1) << 20, 2));  // 2^20 > 2^8 * 6.46
  EXPECT_TRUE(dimension_bound_check(1, 49, 2));
  EXPECT_FALSE(dimension_bound_check(1, 50, 2));
}

TEST(Estimate, BracketsAreOrdered) {
  const std::vector<CodimensionRow> rows = {{1, 7, 7}, {2, 24, 12}, {3, 126, 27}};
  const ExponentReport r = estimate_exponent(2, rows);
  EXPECT_NEAR(r.theoretical, 3 + 2 * std::sqrt(3.0), 1e-14);
  ASSERT_EQ(r.estimates.size(), 3u);
  EXPECT_DOUBLE_EQ(r.estimates[0].lower, 7.0);
  EXPECT_NEAR(r.estimates[1].root, std::sqrt(24.0), 1e-12);
  EXPECT_NEAR(r.estimates[1].lower, std::sqrt(24.0 / 128), 1e-12);
  for (const auto& e : r.estimates) {
    EXPECT_LE(e.lower, e.root);
    EXPECT_LE(e.root, e.upper);
    EXPECT_TRUE(e.upper_bound_ok);
  }
}

TEST(LogBigint, LargeValues) {
  EXPECT_NEAR(static_cast<double>(log_bigint(BigInt(1) << 5000)), 5000 * std::log(2.0), 1e-9);
  EXPECT_NEAR(static_cast<double>(log_bigint(BigInt(1000))), std::log(1000.0), 1e-15);
  EXPECT_TRUE(std::isinf(log_bigint(BigInt(0))));
  EXPECT_THROW(log_bigint(BigInt(-1)), DomainError);
}
