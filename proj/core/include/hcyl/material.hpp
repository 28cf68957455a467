#pragma once

// Material constants, cylinder geometry and end-face load.
// Everything is stored in SI units (m, N, Pa).

namespace hcyl {

/// Isotropic linear-elastic material. Construct through `ElasticMaterial::from_engineering`
/// or `ElasticMaterial::from_lame` so that both parameter pairs stay consistent.
struct ElasticMaterial {
  double E = 0.0;       // Young modulus [Pa]
  double nu = 0.0;      // Poisson ratio
  double lambda = 0.0;  // first Lame constant [Pa]
  double mu = 0.0;      // shear modulus [Pa]

  static ElasticMaterial from_engineering(double E, double nu);
  static ElasticMaterial from_lame(double lambda, double mu);
};

struct LamePair {
  double lambda;
  double mu;
};

/// (E, nu) -> (lambda, mu). Throws DomainError unless E > 0 and -1 < nu < 1/2.
LamePair lame_from_engineering(double E, double nu);

/// Hollow cylinder a < rho < b, |z| < h/2, loaded on a <= rho < eps of both end faces.
struct CylinderGeometry {
  double a = 0.0;    // inner radius [m]
  double b = 0.0;    // outer radius [m]
  double h = 0.0;    // height [m]
  double eps = 0.0;  // outer radius of the loaded annulus [m]

  /// Throws DomainError unless 0 < a < eps < b and h > 0.
  void validate() const;
};

/// Uniform end-face pressure on the loaded annulus, with the resultant force.
struct AxialLoad {
  double P = 0.0;  // total axial force [N]
  double p = 0.0;  // distributed pressure [Pa]

  static AxialLoad from_total_force(double P, const CylinderGeometry& geom);
  static AxialLoad from_pressure(double p, const CylinderGeometry& geom);
};

/// p = P / (pi (eps^2 - a^2)).
double pressure_from_total_load(double P, const CylinderGeometry& geom);

/// The four k-independent ratios of the scaled radial system.
template <typename Real>
struct ScaledCoefficientsT {
  Real alpha_t{0};  // mu / (lambda + 2 mu)
  Real beta_t{0};   // (lambda + mu) / (lambda + 2 mu)
  Real gamma_t{0};  // (lambda + 2 mu) / mu
  Real delta_t{0};  // (lambda + mu) / mu
};

using ScaledCoefficients = ScaledCoefficientsT<double>;

/// Throws DomainError unless mu > 0 and lambda + 2 mu > 0.
ScaledCoefficients scaled_coefficients(double lambda, double mu);

/// Same ratios, with the divisions carried out in `Real`.
template <typename Real>
ScaledCoefficientsT<Real> scaled_coefficients_as(double lambda, double mu) {
  scaled_coefficients(lambda, mu);  // validation
  const Real l{lambda};
  const Real m{mu};
  const Real stiff = l + 2 * m;
  return {m / stiff, (l + m) / stiff, stiff / m, (l + m) / m};
}

}  // namespace hcyl
