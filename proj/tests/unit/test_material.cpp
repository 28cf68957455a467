#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "fixtures.hpp"
#include "hcyl/errors.hpp"
#include "hcyl/material.hpp"

using namespace hcyl;

TEST(Material, LameConstantsOfConcrete) {
  const auto m = test::concrete();
  // lambda = E nu / ((1 + nu)(1 - 2 nu)) = 35000 * 0.2 / (1.2 * 0.6) MPa
  EXPECT_NEAR(m.lambda, 35000e6 * 0.2 / 0.72, 1e-3);
  EXPECT_NEAR(m.mu, 35000e6 / 2.4, 1e-3);
  EXPECT_NEAR(m.lambda / 1e6, 9722.22, 0.01);
  EXPECT_NEAR(m.mu / 1e6, 14583.33, 0.01);
}

TEST(Material, RoundTripThroughLame) {
  const auto m = ElasticMaterial::from_engineering(210e9, 0.3);
  const auto back = ElasticMaterial::from_lame(m.lambda, m.mu);
  EXPECT_NEAR(back.E, 210e9, 1e-3);
  EXPECT_NEAR(back.nu, 0.3, 1e-15);
}

TEST(Material, RejectsNonPhysicalParameters) {
  EXPECT_THROW(lame_from_engineering(-1.0, 0.2), DomainError);
  EXPECT_THROW(lame_from_engineering(1e9, 0.5), DomainError);
  EXPECT_THROW(lame_from_engineering(1e9, -1.0), DomainError);
  EXPECT_THROW(scaled_coefficients(1e9, 0.0), DomainError);
}

TEST(Material, ScaledRatios) {
  const auto m = test::concrete();
  const auto sc = scaled_coefficients(m.lambda, m.mu);
  // nu = 0.2: lambda / mu = 2/3
  EXPECT_NEAR(sc.alpha_t, 3.0 / 8.0, 1e-15);
  EXPECT_NEAR(sc.beta_t, 5.0 / 8.0, 1e-15);
  EXPECT_NEAR(sc.gamma_t, 8.0 / 3.0, 1e-15);
  EXPECT_NEAR(sc.delta_t, 5.0 / 3.0, 1e-15);
  EXPECT_NEAR(sc.alpha_t * sc.gamma_t, 1.0, 1e-15);

  const auto ext = scaled_coefficients_as<Extended>(m.lambda, m.mu);
  EXPECT_NEAR(to_double(ext.beta_t), sc.beta_t, 1e-16);
}

TEST(Geometry, Validation) {
  EXPECT_NO_THROW(test::blister().validate());
  EXPECT_THROW((CylinderGeometry{0.2, 0.1, 3.0, 0.15}.validate()), DomainError);
  EXPECT_THROW((CylinderGeometry{0.1, 0.4, 3.0, 0.05}.validate()), DomainError);
  EXPECT_THROW((CylinderGeometry{0.1, 0.4, 0.0, 0.2}.validate()), DomainError);
  EXPECT_THROW((CylinderGeometry{0.0, 0.4, 3.0, 0.2}.validate()), DomainError);
}

TEST(Load, DistributedPressureOfTheStay) {
  const auto g = test::blister();
  const double p = pressure_from_total_load(1900e3, g);
  EXPECT_NEAR(p / 1e6, 22.80, 0.005);
  EXPECT_NEAR(p, 1900e3 / (std::numbers::pi * (g.eps * g.eps - g.a * g.a)), 1e-6);

  const auto load = AxialLoad::from_pressure(p, g);
  EXPECT_NEAR(load.P, 1900e3, 1e-6);
  EXPECT_THROW(AxialLoad::from_total_force(-1.0, g), DomainError);
}

TEST(Material, TrivialLameCases) {
  const auto zero = lame_from_engineering(1.0, 0.0);
  EXPECT_EQ(zero.lambda, 0.0);
  EXPECT_DOUBLE_EQ(zero.mu, 0.5);
  const auto steel = lame_from_engineering(210000e6, 0.3);
  EXPECT_NEAR(steel.lambda / 1e6, 121153.85, 0.01);
  EXPECT_NEAR(steel.mu / 1e6, 80769.23, 0.01);
}

TEST(Material, ScaledRatiosOfSpecialCases) {
  const auto eq = scaled_coefficients(1.0, 1.0);
  EXPECT_DOUBLE_EQ(eq.alpha_t, 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(eq.beta_t, 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(eq.gamma_t, 3.0);
  EXPECT_DOUBLE_EQ(eq.delta_t, 2.0);
  const auto z = scaled_coefficients(0.0, 7.0);
  EXPECT_DOUBLE_EQ(z.alpha_t, 0.5);
  EXPECT_DOUBLE_EQ(z.beta_t, 0.5);
  EXPECT_DOUBLE_EQ(z.gamma_t, 2.0);
  EXPECT_DOUBLE_EQ(z.delta_t, 1.0);
}

TEST(Material, ScaledRatiosAreScaleInvariant) {
  const double lambda = 9722.22e6, mu = 14583.33e6;
  const auto base = scaled_coefficients(lambda, mu);
  for (double c : {0.25, 2.0, 1024.0}) {
    const auto s = scaled_coefficients(c * lambda, c * mu);
    EXPECT_EQ(s.alpha_t, base.alpha_t);
    EXPECT_EQ(s.beta_t, base.beta_t);
    EXPECT_EQ(s.gamma_t, base.gamma_t);
    EXPECT_EQ(s.delta_t, base.delta_t);
  }
}

TEST(Load, TrivialPressures) {
  EXPECT_EQ(pressure_from_total_load(0.0, test::blister()), 0.0);
  const CylinderGeometry unit{1.0, 2.0, 1.0, std::sqrt(2.0)};
  EXPECT_NEAR(pressure_from_total_load(std::numbers::pi, unit), 1.0, 1e-15);
}
