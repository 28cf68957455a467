#pragma once

// Boundary-value solve of one Fourier mode:
//   (Y, Z) = C1 Y^1 + C2 Y^2 + C3 Y^3 + C4 Y^4 + particular,
// with C fixed by the traction-free conditions at rho = a and rho = b.

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "hcyl/homogeneous_series.hpp"
#include "hcyl/linalg.hpp"
#include "hcyl/material.hpp"
#include "hcyl/particular.hpp"

namespace hcyl {

/// Rows: traction at a, traction at b, shear at a, shear at b; one column per basis.
template <typename Real>
Mat<Real> boundary_matrix(const BasisSet<Real>& bases, const CylinderGeometry& geom,
                          const ElasticMaterial& material, int k);

/// The four boundary functionals applied to a state at rho (traction, shear).
template <typename Real>
std::array<Real, 2> boundary_functionals(const StateVector<Real>& state, const Real& rho,
                                         const ElasticMaterial& material, int k, double h);

struct ModeOptions {
  bool extended_precision = false;
  double quadrature_tol = 1e-11;
  double warn_condition = 1e12;
  double max_condition_double = 1e15;
  /// Truncation bound E_{k,N} to record alongside the mode (not used by the solve).
  double bound = 0.0;
};

namespace detail {
class ModeImpl {
 public:
  virtual ~ModeImpl() = default;
  virtual StateVector<double> eval(double rho) const = 0;
  virtual StateJet<double> eval_jet(double rho) const = 0;
};
}  // namespace detail

/// Immutable solution of one odd mode k, evaluable concurrently.
class ModeSolution {
 public:
  ModeSolution(int k, int order, std::array<double, 4> constants, double condition, double bound,
               bool extended, std::vector<std::string> warnings,
               std::shared_ptr<const detail::ModeImpl> impl, CylinderGeometry geom,
               ElasticMaterial material);

  int k() const { return k_; }
  int order() const { return order_; }
  const std::array<double, 4>& constants() const { return constants_; }
  double condition() const { return condition_; }
  double bound() const { return bound_; }
  bool extended_precision() const { return extended_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  /// (Y_k, Y_k', Z_k, Z_k') at rho in [a, b].
  StateVector<double> eval(double rho) const;
  /// State with second derivatives taken from the ODE system itself.
  StateJet<double> eval_jet(double rho) const;

  /// Relative residuals of the four boundary rows (traction a, traction b, shear a, shear b),
  /// each divided by the sum of magnitudes of its terms, maximised over both ends.
  std::array<double, 4> boundary_residuals() const;

 private:
  int k_;
  int order_;
  std::array<double, 4> constants_;
  double condition_;
  double bound_;
  bool extended_;
  std::vector<std::string> warnings_;
  std::shared_ptr<const detail::ModeImpl> impl_;
  CylinderGeometry geom_;
  ElasticMaterial material_;
};

/// Throws DomainError for even k, NumericError when the boundary matrix is too
/// ill-conditioned for the chosen precision.
ModeSolution solve_mode(int k, const ElasticMaterial& material, const CylinderGeometry& geom,
                        const AxialLoad& load, int order, const ModeOptions& options = {});

inline StateVector<double> mode_eval(const ModeSolution& mode, double rho) {
  return mode.eval(rho);
}

}  // namespace hcyl
