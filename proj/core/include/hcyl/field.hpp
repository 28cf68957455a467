#pragma once

// Fourier synthesis of displacements and stresses:
//   u_r = sum_m Y_k(rho) cos(k pi z / h),  u_3 = sum_m Z_k(rho) sin(k pi z / h),  k = 2m + 1.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hcyl/material.hpp"
#include "hcyl/mode_bvp.hpp"

namespace hcyl {

/// Modes k = 1, 3, ..., 2M+1 in increasing order, with the data they were solved for.
struct ModeSet {
  std::vector<ModeSolution> modes;
  ElasticMaterial material;
  CylinderGeometry geom;
  AxialLoad load;
};

struct DisplacementState {
  double u_r = 0.0;  // signed radial displacement [m]
  double u_3 = 0.0;  // [m]
};

struct CartesianDisplacement {
  double u_1 = 0.0;
  double u_2 = 0.0;
  double u_3 = 0.0;
};

struct StressState {
  double sigma_z = 0.0;
  double sigma_r = 0.0;
  double sigma_theta = 0.0;
  double tau_rz = 0.0;
};

/// Displacement gradient in the meridian plane.
struct DisplacementJet {
  double u_r = 0.0;
  double u_3 = 0.0;
  double du_r_drho = 0.0;
  double du_r_dz = 0.0;
  double du_3_drho = 0.0;
  double du_3_dz = 0.0;

  double divergence(double rho) const { return du_r_drho + u_r / rho + du_3_dz; }
};

/// Radial states of every mode at one rho, reusable across z.
struct RadialProfile {
  double rho = 0.0;
  std::vector<int> k;
  std::vector<StateVector<double>> states;
};

RadialProfile radial_profile(const ModeSet& set, double rho);

DisplacementJet displacement_jet(const RadialProfile& profile, double h, double z);
StressState stress_from_jet(const DisplacementJet& jet, const ElasticMaterial& material,
                            double rho);

DisplacementState displacement(const ModeSet& set, double rho, double z);
CartesianDisplacement displacement_cartesian(const ModeSet& set, double rho, double theta,
                                             double z);
StressState stress(const ModeSet& set, double rho, double z);

/// 2 pi * integral_a^b sigma_z(rho, z) rho drho, 64-point Gauss-Legendre on [a, eps] and [eps, b].
double axial_force(const ModeSet& set, double z);

struct GridSpec {
  int n_rho = 2;
  int n_z = 2;
  std::vector<double> theta;  // optional slices [rad]
};

/// Uniform abscissae: rho_i = a + (b - a) i / (n - 1), z_i = h (i - (n - 1)/2) / (n - 1).
std::vector<double> rho_grid(const CylinderGeometry& geom, int n);
std::vector<double> z_grid(const CylinderGeometry& geom, int n);

struct FieldRow {
  double theta = 0.0;
  double rho = 0.0;
  double z = 0.0;
  DisplacementState u;
  StressState s;
};

struct FieldTable {
  GridSpec grid;
  int M = 0;
  /// theta-major (when slices are requested), then rho, then z.
  std::vector<FieldRow> rows;
};

/// Evaluates the tensor grid in parallel over rho (threads = 0: default count).
FieldTable grid_sample(const ModeSet& set, const GridSpec& grid, unsigned threads = 0);

/// CSV with header rho_m,z_m,u_r_m,u_3_m,sigma_z_Pa,sigma_r_Pa,sigma_theta_Pa,tau_rz_Pa,
/// prefixed by theta_rad when slices were requested.
void write_field_csv(const FieldTable& table, const std::string& path);

struct Extremum {
  std::string quantity;
  double max_abs = 0.0;
  double value = 0.0;  // signed value at the location
  double rho = 0.0;
  double z = 0.0;
};

/// Largest |value| of u_3, sigma_z, sigma_r, sigma_theta and tau_rz over the table;
/// ties go to the smallest rho, then the smallest |z|, then the smaller z.
std::vector<Extremum> extrema_report(const FieldTable& table);

}  // namespace hcyl
