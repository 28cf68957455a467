#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "hcyl/linalg.hpp"
#include "hcyl/quadrature.hpp"
#include "hcyl/real.hpp"

using namespace hcyl;

TEST(Linalg, LuDeterminantAndSolve) {
  const Mat<double> A{{{4, 3, 2, 1}, {3, 4, 3, 2}, {2, 3, 4, 3}, {1, 2, 3, 4}}};
  // symmetric Toeplitz matrix with det 20
  EXPECT_NEAR(determinant(A), 20.0, 1e-12);
  const Vec<double> x{1, -2, 3, -4};
  const auto b = multiply(A, x);
  const auto y = LuFactor<double, 4>(A).solve(b);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(y[i], x[i], 1e-13);
}

TEST(Linalg, LuRejectsSingular) {
  const Mat<double> A{{{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 1, 0, 1}, {1, 0, 1, 0}}};
  EXPECT_THROW((LuFactor<double, 4>(A).solve(Vec<double>{1, 1, 1, 1})), NumericError);
}

TEST(Linalg, EquilibratedQrHandlesBadlyScaledColumns) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double scales[4] = {1e-9, 1.0, 1e6, 1e12};
  Mat<double> A{};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) A[i][j] = u(rng) * scales[j] * (i + 1);
  }
  const Vec<double> x{3e8, -2.0, 5e-6, 1e-12};
  const auto sol = solve_equilibrated_qr<double, 4>(A, multiply(A, x));
  for (std::size_t j = 0; j < 4; ++j) EXPECT_NEAR(sol.x[j] / x[j], 1.0, 1e-10);
  EXPECT_GE(sol.condition, 1.0);
  EXPECT_LT(sol.condition, 1e4);  // equilibration removes the column scaling
}

TEST(Linalg, EquilibratedQrRejectsZeroRow) {
  Mat<double> A{{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 1}}};
  EXPECT_THROW((solve_equilibrated_qr<double, 4>(A, Vec<double>{1, 1, 1, 1})), NumericError);
}

TEST(Quadrature, GaussLegendreIsExactToDegree2nMinus1) {
  const auto& rule = gauss_legendre<double, 16>();
  double wsum = 0;
  for (double w : rule.weights) wsum += w;
  EXPECT_NEAR(wsum, 2.0, 1e-14);
  for (int d = 0; d <= 31; ++d) {
    const double got = gauss_panel<double, double>(rule, 0.0, 1.0, [d](double x) { return std::pow(x, d); });
    EXPECT_NEAR(got, 1.0 / (d + 1), 1e-14) << "degree " << d;
  }
}

TEST(Quadrature, ExtendedRuleMatchesDouble) {
  const auto& e = gauss_legendre<Extended, 16>();
  const auto& d = gauss_legendre<double, 16>();
  for (std::size_t i = 0; i < d.nodes.size(); ++i) {
    EXPECT_NEAR(to_double(e.nodes[i]), d.nodes[i], 1e-15);
    EXPECT_NEAR(to_double(e.weights[i]), d.weights[i], 1e-15);
  }
  const Extended got = gauss_panel<Extended, Extended>(
      e, Extended(0), Extended(1), [](const Extended& x) { return Extended(exp(x)); });
  EXPECT_NEAR(to_double(Extended(got - (exp(Extended(1)) - 1))), 0.0, 1e-30);
}

TEST(Real, CompensatedHornerBeatsCancellation) {
  // (x - 1)^7 expanded, evaluated next to its root
  const std::vector<double> c{-1, 7, -21, 35, -35, 21, -7, 1};
  const double x = 1.0 + 1e-3;
  const double got = horner<double>(c, x);
  EXPECT_NEAR(got / std::pow(1e-3, 7), 1.0, 1e-6);
}

TEST(Real, CompensatedSumRecoversSmallAddends) {
  CompensatedSum<double> s;
  s += 1e16;
  for (int i = 0; i < 1000; ++i) s += 1.0;
  s += -1e16;
  EXPECT_EQ(s.value(), 1000.0);
}
