#pragma once

// Particular solution of the forced radial system by variation of parameters:
//
//   state(rho) = W(rho) * integral_a^rho W(r)^{-1} (0, 0, 0, -Psi_k(r)/mu)^T dr
//
// with W the Wronskian of the four series bases in the unscaled variable rho.

#include <array>
#include <memory>
#include <vector>

#include "hcyl/homogeneous_series.hpp"
#include "hcyl/linalg.hpp"

namespace hcyl {

template <typename Real>
using BasisSet = std::array<BasisSolution<Real>, 4>;

/// Builds the four bases of one mode at series order N.
template <typename Real>
std::shared_ptr<const BasisSet<Real>> build_basis_set(int order, const ElasticMaterial& material);

/// Data of the k-th Fourier forcing term.
struct ForcingSpec {
  int k = 1;
  double p = 0.0;    // [Pa]
  double a = 0.0;    // [m]
  double eps = 0.0;  // [m]
  double h = 0.0;    // [m]
  double mu = 0.0;   // [Pa]
};

/// Psi_k(rho) = (-1)^((k+1)/2) (4/h) p on [a, eps), zero beyond eps and for even k.
double forcing_psi(const ForcingSpec& spec, double rho);

/// Columns: unscaled (Y, Y', Z, Z') of basis j at rho.
template <typename Real>
Mat<Real> wronskian(const BasisSet<Real>& bases, const Real& rho, int k, double h);

/// True when |det W| < tol * prod_j ||W e_j||_inf, with tol = 1e-14 in double and
/// scaled by the unit roundoff ratio for wider formats.
template <typename Real>
bool wronskian_is_singular(const Mat<Real>& W);

/// Variation-of-parameters evaluator. The integral over [a, eps] is computed
/// once, on composite 16-point Gauss-Legendre panels refined by bisection until
/// two successive levels agree to `rel_tol`; the panel table is kept so that
/// partial integrals up to any rho in (a, eps) need a single extra panel.
template <typename Real>
class ParticularEvaluator {
 public:
  ParticularEvaluator(std::shared_ptr<const BasisSet<Real>> bases, ForcingSpec spec,
                      double rel_tol = 1e-11, int max_panels = 4096);

  StateVector<Real> state(const Real& rho) const;

  const ForcingSpec& forcing() const { return spec_; }
  int panels() const { return static_cast<int>(edges_.empty() ? 0 : edges_.size() - 1); }
  /// Agreement between the last two refinement levels (scaled as in the stopping test).
  double achieved_tolerance() const { return achieved_; }
  /// Integral of W^{-1} f over [a, eps].
  const Vec<Real>& integral_to_eps() const { return total_; }

 private:
  Vec<Real> integrand(const Real& r) const;
  std::vector<Vec<Real>> panel_integrals(int panels) const;

  std::shared_ptr<const BasisSet<Real>> bases_;
  ForcingSpec spec_;
  Real forcing_{0};  // -Psi_k / mu on [a, eps)
  std::vector<Real> edges_;
  std::vector<Vec<Real>> cumulative_;
  Vec<Real> total_{};
  double achieved_ = 0.0;
};

/// Free-function form of ParticularEvaluator::state.
template <typename Real>
StateVector<Real> particular_state(const ParticularEvaluator<Real>& evaluator, const Real& rho) {
  return evaluator.state(rho);
}

}  // namespace hcyl
