#include <gtest/gtest.h>

#include <cmath>

#include "fixtures.hpp"
#include "hcyl/particular.hpp"

using namespace hcyl;

namespace {

ForcingSpec stay_forcing(int k, double p = test::stay_load().p) {
  const auto g = test::blister();
  return {k, p, g.a, g.eps, g.h, test::concrete().mu};
}

template <typename F>
double d4(F&& f, double x, double h) {
  return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h);
}

// Relative residual of the forced radial system at rho, second derivatives by
// a fourth-order difference of the first derivatives.
std::array<double, 2> forced_residual(const ParticularEvaluator<double>& ev, double rho, int k) {
  const auto m = test::concrete();
  const auto sc = scaled_coefficients(m.lambda, m.mu);
  const double q = wavenumber<double>(k, test::blister().h);
  const double dx = 5e-4;
  const auto s = ev.state(rho);
  const double d2Y = d4([&](double r) { return ev.state(r).dY; }, rho, dx);
  const double d2Z = d4([&](double r) { return ev.state(r).dZ; }, rho, dx);
  const double f = -forcing_psi(ev.forcing(), rho) / m.mu;
  const double r1 = d2Y + s.dY / rho - (1 / (rho * rho) + sc.alpha_t * q * q) * s.Y + sc.beta_t * q * s.dZ;
  const double r2 = d2Z + s.dZ / rho - sc.gamma_t * q * q * s.Z - sc.delta_t * q * (s.dY + s.Y / rho) - f;
  const double n1 = std::abs(d2Y) + std::abs(s.dY / rho) + std::abs((1 / (rho * rho) + sc.alpha_t * q * q) * s.Y) +
                    std::abs(sc.beta_t * q * s.dZ);
  const double n2 = std::abs(d2Z) + std::abs(s.dZ / rho) + std::abs(sc.gamma_t * q * q * s.Z) +
                    std::abs(sc.delta_t * q * (s.dY + s.Y / rho)) + std::abs(f);
  return {std::abs(r1) / n1, std::abs(r2) / n2};
}

}  // namespace

TEST(Forcing, FourierCoefficientOfTheEndLoad) {
  const auto g = test::blister();
  const double rho = 0.5 * (g.a + g.eps);
  EXPECT_EQ(forcing_psi(stay_forcing(2), rho), 0.0);
  auto f = stay_forcing(1, 22.80e6);
  EXPECT_NEAR(forcing_psi(f, rho) / 1e6, -30.40, 1e-9);
  f.k = 3;
  EXPECT_NEAR(forcing_psi(f, rho) / 1e6, 30.40, 1e-9);
  EXPECT_EQ(forcing_psi(f, 0.5 * (g.eps + g.b)), 0.0);
}

TEST(Particular, WronskianIsRegularOnTheSection) {
  const auto g = test::blister();
  const auto bases = build_basis_set<double>(41, test::concrete());
  for (int k : {1, 3, 9}) {
    for (int i = 0; i <= 20; ++i) {
      const double rho = g.a + (g.b - g.a) * i / 20.0;
      const auto W = wronskian<double>(*bases, rho, k, g.h);
      EXPECT_FALSE(wronskian_is_singular(W)) << "k=" << k << " rho=" << rho;
      EXPECT_NE(determinant(W), 0.0);
    }
  }
}

TEST(Particular, VanishesAtInnerRadius) {
  const auto bases = build_basis_set<double>(21, test::concrete());
  const ParticularEvaluator<double> ev(bases, stay_forcing(1));
  const auto s = ev.state(test::blister().a);
  EXPECT_EQ(s.Y, 0.0);
  EXPECT_EQ(s.dY, 0.0);
  EXPECT_EQ(s.Z, 0.0);
  EXPECT_EQ(s.dZ, 0.0);
}

TEST(Particular, ZeroLoadGivesZeroState) {
  const auto bases = build_basis_set<double>(21, test::concrete());
  const ParticularEvaluator<double> ev(bases, stay_forcing(3, 0.0));
  for (double rho : {0.15, 0.2, 0.3, 0.4}) {
    const auto s = ev.state(rho);
    EXPECT_EQ(s.Y, 0.0);
    EXPECT_EQ(s.dY, 0.0);
    EXPECT_EQ(s.Z, 0.0);
    EXPECT_EQ(s.dZ, 0.0);
  }
}

TEST(Particular, HomogeneousBeyondTheLoad) {
  const auto g = test::blister();
  const int k = 3;
  const auto bases = build_basis_set<double>(41, test::concrete());
  const ParticularEvaluator<double> ev(bases, stay_forcing(k));
  const auto c = ev.integral_to_eps();
  for (double rho : {0.25, 0.33, g.b}) {
    const auto want = multiply(wronskian<double>(*bases, rho, k, g.h), c);
    const auto s = ev.state(rho);
    EXPECT_NEAR(s.Y, want[0], 1e-12 * std::abs(want[0]));
    EXPECT_NEAR(s.dY, want[1], 1e-12 * std::abs(want[1]));
    EXPECT_NEAR(s.Z, want[2], 1e-12 * std::abs(want[2]));
    EXPECT_NEAR(s.dZ, want[3], 1e-12 * std::abs(want[3]));
  }
}

TEST(Particular, SatisfiesTheForcedSystem) {
  for (int k : {1, 5}) {
    const auto bases = build_basis_set<double>(61, test::concrete());
    const ParticularEvaluator<double> ev(bases, stay_forcing(k));
    EXPECT_LE(ev.achieved_tolerance(), 1e-11);
    for (double rho : {0.15, 0.18, 0.2, 0.23, 0.3, 0.39}) {
      const auto r = forced_residual(ev, rho, k);
      EXPECT_LE(r[0], 1e-8) << "k=" << k << " rho=" << rho;
      EXPECT_LE(r[1], 1e-8) << "k=" << k << " rho=" << rho;
    }
  }
}

TEST(Particular, ExtendedAgreesWithDouble) {
  const auto m = test::concrete();
  const auto bd = build_basis_set<double>(41, m);
  const auto be = build_basis_set<Extended>(41, m);
  const ParticularEvaluator<double> evd(bd, stay_forcing(3));
  const ParticularEvaluator<Extended> eve(be, stay_forcing(3));
  for (double rho : {0.17, 0.3}) {
    const auto sd = evd.state(rho);
    const auto se = eve.state(Extended(rho));
    EXPECT_NEAR(sd.Y, to_double(se.Y), 1e-9 * std::abs(sd.Y));
    EXPECT_NEAR(sd.Z, to_double(se.Z), 1e-9 * std::abs(sd.Z));
  }
}
