#pragma once

// Independent checks of the series solution: a finite-difference solver for
// the radial boundary-value problem of one mode and an end-face traction residual.

#include <vector>

#include "hcyl/field.hpp"
#include "hcyl/material.hpp"
#include "hcyl/mode_bvp.hpp"

namespace hcyl {

struct CollocationSolution {
  int k = 0;
  std::vector<double> mesh;  // a = mesh.front() < ... < mesh.back() = b, node at eps
  std::vector<double> Y, dY, Z, dZ;
  /// max |fine - coarse| / max|.| over Y and Z when Richardson-extrapolated, else 0.
  double convergence_estimate = 0.0;
};

/// Second-order finite differences on a mesh that is uniform on [a, eps] and on
/// [eps, b], with n_mesh intervals in total. Without Richardson the raw solution
/// is returned; with it the solutions on n_mesh and 2 n_mesh intervals are
/// combined as (4 fine - coarse) / 3 at the coarse nodes.
CollocationSolution collocation_solve_mode(int k, const ElasticMaterial& material,
                                           const CylinderGeometry& geom, const AxialLoad& load,
                                           int n_mesh, bool richardson = true);

/// Max over mesh nodes of |Y_series - Y_oracle| / max|Y_series|, likewise for Z; the larger.
double compare_mode(const ModeSolution& mode, const CollocationSolution& oracle);

/// sqrt(2 pi integral_a^b (sigma_z(rho, -h/2) + chi_p(rho))^2 rho drho), with
/// n_rho-point Gauss-Legendre rules on [a, eps] and [eps, b].
double endface_traction_residual(const ModeSet& set, int n_rho);

}  // namespace hcyl
