#include "hcyl/material.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hcyl/errors.hpp"

namespace hcyl {

LamePair lame_from_engineering(double E, double nu) {
  if (!(E > 0.0) || !std::isfinite(E)) {
    throw DomainError("Young modulus must be positive and finite, got " + std::to_string(E));
  }
  if (!(nu > -1.0 && nu < 0.5)) {
    throw DomainError("Poisson ratio must lie in (-1, 0.5), got " + std::to_string(nu));
  }
  const double lambda = E * nu / ((1.0 + nu) * (1.0 - 2.0 * nu));
  const double mu = E / (2.0 * (1.0 + nu));
  return {lambda, mu};
}

ElasticMaterial ElasticMaterial::from_engineering(double E, double nu) {
  const auto [lambda, mu] = lame_from_engineering(E, nu);
  return {E, nu, lambda, mu};
}

ElasticMaterial ElasticMaterial::from_lame(double lambda, double mu) {
  if (!(mu > 0.0) || !(lambda + mu > 0.0)) {
    // lambda + mu > 0 is equivalent to nu < 1/2 together with 3 lambda + 2 mu > 0 for E > 0.
    throw DomainError("Lame pair outside the admissible range");
  }
  const double E = mu * (3.0 * lambda + 2.0 * mu) / (lambda + mu);
  const double nu = lambda / (2.0 * (lambda + mu));
  if (!(E > 0.0) || !(nu > -1.0 && nu < 0.5)) {
    throw DomainError("Lame pair gives a nonphysical material");
  }
  return {E, nu, lambda, mu};
}

void CylinderGeometry::validate() const {
  if (!(a > 0.0)) throw DomainError("inner radius a must be positive");
  if (!(eps > a)) throw DomainError("load radius eps must exceed the inner radius a");
  if (!(b > eps)) throw DomainError("outer radius b must exceed the load radius eps");
  if (!(h > 0.0)) throw DomainError("height h must be positive");
}

double pressure_from_total_load(double P, const CylinderGeometry& geom) {
  geom.validate();
  return P / (std::numbers::pi * (geom.eps * geom.eps - geom.a * geom.a));
}

AxialLoad AxialLoad::from_total_force(double P, const CylinderGeometry& geom) {
  if (!(P >= 0.0)) throw DomainError("axial force must be non-negative");
  return {P, pressure_from_total_load(P, geom)};
}

AxialLoad AxialLoad::from_pressure(double p, const CylinderGeometry& geom) {
  if (!(p >= 0.0)) throw DomainError("pressure must be non-negative");
  geom.validate();
  return {p * std::numbers::pi * (geom.eps * geom.eps - geom.a * geom.a), p};
}

ScaledCoefficients scaled_coefficients(double lambda, double mu) {
  const double stiff = lambda + 2.0 * mu;
  if (!(mu > 0.0) || !(stiff > 0.0)) {
    throw DomainError("scaled coefficients need mu > 0 and lambda + 2 mu > 0");
  }
  return {mu / stiff, (lambda + mu) / stiff, stiff / mu, (lambda + mu) / mu};
}

}  // namespace hcyl
