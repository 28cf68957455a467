#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "hcyl/errors.hpp"
#include "hcyl/homogeneous_series.hpp"

using namespace hcyl;

namespace {

// Explicit 4x4 propagator of one recurrence step, written with lambda and mu:
// (a_{n-2}, b_{n-2}, c_{n-3}, d_{n-3}) -> (a_n, b_n, c_{n-1}, d_{n-1}).
Mat<double> propagator(int n, double lambda, double mu) {
  const double l = lambda / mu;
  const double lp = (lambda + mu) / mu;
  const double l2 = (lambda + 2 * mu) / mu;
  const double np = n + 1.0, nm = n - 1.0;
  return {{{-l / (np * nm), 2 * l * n / (np * np * nm * nm), -lp / (np * nm * nm),
            lp * (3 * n + 1) / (np * np * nm * nm * nm)},
           {0.0, -l / (np * nm), 0.0, -lp / (np * nm * nm)},
           {lp / nm, -lp / (nm * nm), l2 / (nm * nm), -2 * l2 / (nm * nm * nm)},
           {0.0, lp / nm, 0.0, l2 / (nm * nm)}}};
}

Quadruple<double> explicit_step(int n, const Quadruple<double>& p, double lambda, double mu) {
  const auto y = multiply(propagator(n, lambda, mu), Vec<double>{p.a, p.b, p.c, p.d});
  return {y[0], y[1], y[2], y[3]};
}

// Left-hand side of the scaled linear system for step n.
Mat<double> step_matrix(int n, const ScaledCoefficients& sc) {
  const double nm = n - 1.0;
  return {{{n * n - 1.0, 2.0 * n, sc.beta_t * nm, sc.beta_t},
           {0.0, n * n - 1.0, 0.0, sc.beta_t * nm},
           {0.0, 0.0, nm * nm, 2 * nm},
           {0.0, 0.0, 0.0, nm * nm}}};
}

double max_abs(const Quadruple<double>& q) {
  return std::max({std::abs(q.a), std::abs(q.b), std::abs(q.c), std::abs(q.d)});
}

// Residuals of the scaled homogeneous system at t.
template <typename Real>
std::array<double, 2> ode_residual(const StateJet<Real>& j, const Real& t,
                                   const ScaledCoefficientsT<Real>& sc) {
  const auto& s = j.state;
  const Real r1 = j.d2Y + s.dY / t - s.Y / (t * t) - sc.alpha_t * s.Y + sc.beta_t * s.dZ;
  const Real r2 = j.d2Z + s.dZ / t - sc.gamma_t * s.Z - sc.delta_t * (s.dY + s.Y / t);
  using std::abs;
  const Real scale1 = abs(j.d2Y) + abs(s.dY / t) + abs(s.Y / (t * t)) + abs(sc.alpha_t * s.Y) +
                      abs(sc.beta_t * s.dZ);
  const Real scale2 = abs(j.d2Z) + abs(s.dZ / t) + abs(sc.gamma_t * s.Z) +
                      abs(sc.delta_t * s.dY) + abs(sc.delta_t * s.Y / t);
  return {to_double(Real(abs(r1) / scale1)), to_double(Real(abs(r2) / scale2))};
}

}  // namespace

TEST(Recurrence, HandValueAtFirstStep) {
  const auto m = test::concrete();
  const auto sc = scaled_coefficients(m.lambda, m.mu);
  const auto q = recurrence_step<double>(3, {0, 0, 1, 0}, sc);
  EXPECT_NEAR(q.a, -sc.beta_t * sc.gamma_t / 16, 1e-15);
  EXPECT_NEAR(q.a, -0.1041667, 1e-7);
  EXPECT_EQ(q.b, 0.0);
  EXPECT_NEAR(q.c, 0.6666667, 1e-7);
  EXPECT_EQ(q.d, 0.0);
}

TEST(Recurrence, MatchesExplicitInverseAtRandomSteps) {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> pick(1, 100);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_real_distribution<double> pr(0.0, 0.45);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = ElasticMaterial::from_engineering(1e9, pr(rng));
    const auto sc = scaled_coefficients(m.lambda, m.mu);
    const int n = 2 * pick(rng) + 1;
    const Quadruple<double> prev{u(rng), u(rng), u(rng), u(rng)};
    const auto got = recurrence_step<double>(n, prev, sc);
    const auto want = explicit_step(n, prev, m.lambda, m.mu);
    const Quadruple<double> diff{got.a - want.a, got.b - want.b, got.c - want.c, got.d - want.d};
    EXPECT_LE(max_abs(diff), 1e-12 * max_abs(want)) << "n=" << n;
  }
}

TEST(Recurrence, CoefficientMatrixDeterminant) {
  const auto sc = scaled_coefficients(test::concrete().lambda, test::concrete().mu);
  EXPECT_DOUBLE_EQ(determinant(step_matrix(3, sc)), 1024.0);
  for (int n : {5, 11, 41}) {
    const double want = std::pow(n - 1.0, 6) * std::pow(n + 1.0, 2);
    EXPECT_NEAR(determinant(step_matrix(n, sc)) / want, 1.0, 1e-14);
  }
}

TEST(Recurrence, PropagatorSolvesTheLinearSystem) {
  const auto m = test::concrete();
  const auto sc = scaled_coefficients(m.lambda, m.mu);
  const Quadruple<double> p{0.3, -1.2, 0.7, 2.0};
  for (int n : {3, 7, 25}) {
    const auto q = explicit_step(n, p, m.lambda, m.mu);
    const auto lhs = multiply(step_matrix(n, sc), Vec<double>{q.a, q.b, q.c, q.d});
    const double nm = n - 1.0;
    const Vec<double> rhs{sc.alpha_t * p.a, sc.alpha_t * p.b,
                          sc.delta_t * nm * p.a + sc.delta_t * p.b + sc.gamma_t * p.c,
                          sc.delta_t * nm * p.b + sc.gamma_t * p.d};
    for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(lhs[i], rhs[i], 1e-13) << "n=" << n << " row " << i;
  }
}

TEST(Recurrence, ZeroPreviousGivesZero) {
  const auto sc = scaled_coefficients(test::concrete().lambda, test::concrete().mu);
  const auto q = recurrence_step<double>(9, {}, sc);
  EXPECT_EQ(q.a, 0.0);
  EXPECT_EQ(q.b, 0.0);
  EXPECT_EQ(q.c, 0.0);
  EXPECT_EQ(q.d, 0.0);
}

TEST(Recurrence, RejectsEvenOrSmallIndex) {
  const auto sc = scaled_coefficients(test::concrete().lambda, test::concrete().mu);
  EXPECT_THROW(recurrence_step<double>(4, {}, sc), DomainError);
  EXPECT_THROW(recurrence_step<double>(1, {}, sc), DomainError);
  EXPECT_THROW(build_basis<double>(1, 6, sc), DomainError);
  EXPECT_THROW(build_basis<double>(5, 7, sc), DomainError);
}

TEST(Series, SeedsAndLogCoefficient) {
  const auto sc = scaled_coefficients(test::concrete().lambda, test::concrete().mu);
  for (int j = 1; j <= 4; ++j) {
    const auto b = build_basis<double>(j, 9, sc);
    const auto seed = b.seed();
    for (int i = 0; i < 4; ++i) EXPECT_EQ(seed[static_cast<std::size_t>(i)], i + 1 == j ? 1.0 : 0.0);
    const auto& c = b.coeffs();
    EXPECT_NEAR(c.d(0), sc.alpha_t / sc.beta_t * c.a(-1) - 2 / sc.beta_t * c.b(1), 1e-15);
  }
}

TEST(Series, ParityOfCoefficients) {
  const auto sc = scaled_coefficients(test::concrete().lambda, test::concrete().mu);
  for (int j = 1; j <= 4; ++j) {
    const auto b = build_basis<double>(j, 21, sc);
    const auto& c = b.coeffs();
    for (int n = 0; n <= 21; n += 2) {
      EXPECT_EQ(c.a(n), 0.0);
      EXPECT_EQ(c.b(n), 0.0);
    }
    for (int n = 1; n <= 20; n += 2) {
      EXPECT_EQ(c.c(n), 0.0);
      EXPECT_EQ(c.d(n), 0.0);
    }
  }
}

TEST(Series, SatisfiesScaledSystem) {
  const auto sc = scaled_coefficients(test::concrete().lambda, test::concrete().mu);
  for (int j = 1; j <= 4; ++j) {
    const auto b = build_basis<double>(j, 61, sc);
    for (double t : {0.05, 0.3, 1.0, 2.5, 4.0}) {
      const auto r = ode_residual<double>(b.eval_jet(t), t, sc);
      EXPECT_LE(r[0], 1e-12) << "j=" << j << " t=" << t;
      EXPECT_LE(r[1], 1e-12) << "j=" << j << " t=" << t;
    }
  }
}

TEST(Series, ExtendedSatisfiesScaledSystemAtLargeArgument) {
  const auto m = test::concrete();
  const auto sc = scaled_coefficients_as<Extended>(m.lambda, m.mu);
  for (int j = 1; j <= 4; ++j) {
    const auto b = build_basis<Extended>(j, 301, sc);
    for (double t : {1.0, 10.0, 24.0}) {
      const auto r = ode_residual<Extended>(b.eval_jet(Extended(t)), Extended(t), sc);
      EXPECT_LE(r[0], 1e-25) << "j=" << j << " t=" << t;
      EXPECT_LE(r[1], 1e-25) << "j=" << j << " t=" << t;
    }
  }
}

TEST(Series, DerivativesAgreeWithFiniteDifferences) {
  const auto sc = scaled_coefficients(test::concrete().lambda, test::concrete().mu);
  const double dt = 1e-5;
  for (int j = 1; j <= 4; ++j) {
    const auto b = build_basis<double>(j, 41, sc);
    for (double t : {0.2, 1.1, 3.0}) {
      const auto s = b.eval(t);
      const auto sp = b.eval(t + dt), sm = b.eval(t - dt);
      const auto jet = b.eval_jet(t);
      EXPECT_NEAR((sp.Y - sm.Y) / (2 * dt), s.dY, 1e-7 * (1 + std::abs(s.dY)));
      EXPECT_NEAR((sp.Z - sm.Z) / (2 * dt), s.dZ, 1e-7 * (1 + std::abs(s.dZ)));
      EXPECT_NEAR((sp.dY - sm.dY) / (2 * dt), jet.d2Y, 1e-6 * (1 + std::abs(jet.d2Y)));
      EXPECT_NEAR((sp.dZ - sm.dZ) / (2 * dt), jet.d2Z, 1e-6 * (1 + std::abs(jet.d2Z)));
    }
  }
}

TEST(Series, DoubleAgreesWithExtended) {
  const auto m = test::concrete();
  const auto scd = scaled_coefficients(m.lambda, m.mu);
  const auto sce = scaled_coefficients_as<Extended>(m.lambda, m.mu);
  for (int j = 1; j <= 4; ++j) {
    const auto bd = build_basis<double>(j, 81, scd);
    const auto be = build_basis<Extended>(j, 81, sce);
    for (double t : {0.1, 0.5, 2.0, 6.0}) {
      const auto sd = bd.eval(t);
      const auto se = be.eval(Extended(t));
      EXPECT_NEAR(sd.Y, to_double(se.Y), 1e-13 * (1 + std::abs(sd.Y)));
      EXPECT_NEAR(sd.Z, to_double(se.Z), 1e-13 * (1 + std::abs(sd.Z)));
    }
  }
}

TEST(Series, TruncatedEvaluationMatchesDirectSums) {
  const auto sc = scaled_coefficients(test::concrete().lambda, test::concrete().mu);
  const auto b = build_basis<double>(3, 31, sc);
  const auto& c = b.coeffs();
  const double t = 1.7, L = std::log(t);
  for (int N : {3, 9, 31}) {
    double Y = c.a(-1) / t, Z = 0;
    for (int n = 0; n <= N; ++n) Y += (c.a(n) + L * c.b(n)) * std::pow(t, n);
    for (int n = 0; n <= N - 1; ++n) Z += (c.c(n) + L * c.d(n)) * std::pow(t, n);
    const auto got = b.eval_truncated(t, L, N);
    EXPECT_NEAR(got[0], Y, 1e-13 * (1 + std::abs(Y)));
    EXPECT_NEAR(got[1], Z, 1e-13 * (1 + std::abs(Z)));
  }
}

TEST(Series, RejectsNonPositiveArgument) {
  const auto sc = scaled_coefficients(test::concrete().lambda, test::concrete().mu);
  const auto b = build_basis<double>(1, 5, sc);
  EXPECT_THROW(b.eval(0.0), DomainError);
  EXPECT_THROW(b.eval(-1.0), DomainError);
  EXPECT_THROW(b.eval_jet(0.0), DomainError);
}

TEST(Series, UnscalingMultipliesDerivatives) {
  const StateVector<double> s{1.0, 2.0, 3.0, 4.0};
  const double q = wavenumber<double>(3, 3.0);
  EXPECT_NEAR(q, M_PI, 1e-15);
  const auto u = unscale<double>(s, 3, 3.0);
  EXPECT_EQ(u.Y, 1.0);
  EXPECT_NEAR(u.dY, 2 * q, 1e-15);
  EXPECT_EQ(u.Z, 3.0);
  EXPECT_NEAR(u.dZ, 4 * q, 1e-15);
}

TEST(Series, SmallArgumentBehaviour) {
  const auto sc = scaled_coefficients(test::concrete().lambda, test::concrete().mu);
  const double t = 1e-5;
  const double L = std::log(t);
  EXPECT_NEAR(build_basis<double>(1, 21, sc).eval(t).Y * t, 1.0, 1e-8);
  EXPECT_NEAR(build_basis<double>(2, 21, sc).eval(t).Y / t, 1.0, 1e-8);
  EXPECT_NEAR(build_basis<double>(3, 21, sc).eval(t).Y / (t * L), 1.0, 1e-8);
  EXPECT_LT(std::abs(build_basis<double>(4, 21, sc).eval(t).Y / (t * t * L)), 1.0);
}

TEST(Series, SeedOnlyTablesAtLowestOrder) {
  const auto sc = scaled_coefficients(test::concrete().lambda, test::concrete().mu);
  const auto c = build_basis<double>(4, 3, sc).coeffs();
  EXPECT_EQ(c.a(-1), 0.0);
  EXPECT_EQ(c.a(1), 0.0);
  EXPECT_EQ(c.b(1), 0.0);
  EXPECT_EQ(c.c(0), 1.0);
  EXPECT_EQ(c.d(0), 0.0);
  const auto q = recurrence_step<double>(3, {0, 0, 1, 0}, sc);
  EXPECT_EQ(c.a(3), q.a);
  EXPECT_EQ(c.b(3), q.b);
  EXPECT_EQ(c.c(2), q.c);
  EXPECT_EQ(c.d(2), q.d);

  const auto c3 = build_basis<double>(3, 3, sc).coeffs();
  EXPECT_NEAR(c3.d(0), -2 / sc.beta_t, 1e-15);
  EXPECT_EQ(build_basis<double>(2, 3, sc).coeffs().d(0), 0.0);
}

TEST(Series, LogCoefficientsDecaySuperexponentially) {
  // |b_n| 2^n ((n-1)/2)!^2 / (n+1) stays bounded
  const auto m = test::concrete();
  const auto sc = scaled_coefficients_as<Extended>(m.lambda, m.mu);
  const auto c = build_basis<Extended>(1, 201, sc).coeffs();
  double early = 0.0, late = 0.0;
  for (int n = 3; n <= 201; n += 2) {
    const double lb = to_double(Extended(log(abs(c.b(n)))));
    const double v = lb + n * std::log(2.0) + 2 * std::lgamma((n - 1) / 2.0 + 1) - std::log(n + 1.0);
    (n <= 101 ? early : late) = std::max(n <= 101 ? early : late, v);
    EXPECT_TRUE(std::isfinite(v)) << "n=" << n;
  }
  EXPECT_LE(late, early);
}
