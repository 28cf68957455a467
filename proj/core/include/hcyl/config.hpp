#pragma once

// Flat `key = value` run configuration. Lines starting with '#' (after optional
// blanks) and trailing "# ..." comments are ignored.

#include <optional>
#include <string>
#include <vector>

#include "hcyl/material.hpp"

namespace hcyl {

struct RunSpec {
  // material
  double E = 0.0;   // [Pa]
  double nu = 0.0;
  // geometry, radii in metres (diameters are halved on ingest)
  CylinderGeometry geom;
  // load: exactly one of P [N] and p [Pa]
  std::optional<double> P;
  std::optional<double> p;
  double epsilon_tol = 1e-3;
  // modes: M (last mode index, k = 1..2M+1) or both L2 targets [m^(5/2)]
  std::optional<int> M;
  std::optional<double> target_l2_u1;
  std::optional<double> target_l2_u3;
  int grid_nrho = 200;
  int grid_nz = 600;
  std::vector<double> grid_theta;  // [rad]
  std::string output_dir = ".";
  bool extended_precision = false;
  bool verify = false;
  int N_ceiling = 401;

  ElasticMaterial material() const;
  AxialLoad load() const;
  /// M, or the smallest count meeting the L2 targets.
  int mode_count() const;

  /// Throws ConfigError naming the first violated requirement.
  void validate() const;
};

/// Parses and validates; errors carry the file name and line number.
RunSpec parse_config(const std::string& path);
RunSpec parse_config_text(const std::string& text, const std::string& origin = "<config>");

/// Parses "200x600" into (n_rho, n_z).
std::pair<int, int> parse_grid(const std::string& text);

}  // namespace hcyl
