#pragma once

// Truncation error of the series bases, choice of the series order per mode
// and L2 tail bounds that fix the number of Fourier modes.

#include <string>
#include <vector>

#include "hcyl/material.hpp"

namespace hcyl {

/// Natural log of C(a,b,k) * 3(2l+5m)(l+m)^2/(16 m^3) * t_b^(N+2) e^(t_b^2)
///   * (N+3)(3N^3+21N^2+42N+32) / (2^N ((N+1)/2)!^2),   t_b = pi k b / h.
/// Defined for every odd k >= 1 (the estimate is proven for k > 1).
double log_error_bound(int k, int order, const ElasticMaterial& material,
                       const CylinderGeometry& geom);

/// exp(log_error_bound); throws NumericError when the value is not representable.
double error_bound(int k, int order, const ElasticMaterial& material,
                   const CylinderGeometry& geom);

/// The constant C(a,b,k) of the estimate.
double bound_constant(int k, const ElasticMaterial& material, const CylinderGeometry& geom);

struct SeriesOrderChoice {
  int k = 0;
  int order = 0;            // N_k
  double log_bound = 0.0;   // ln E_{k,N}
  double denominator = 0.0; // min_j min(max|Y_N^j|, max|Z_N^j|)
  /// E/denominator at the chosen order.
  double ratio() const;
};

struct SeriesOrderOptions {
  int first_order = 5;
  int ceiling = 401;
  int grid = 256;
};

/// Smallest odd N >= first_order with E_{k,N} / D_N < epsilon_tol, where D_N is
/// sampled on a uniform grid over [a, b]. Throws NumericError past the ceiling.
SeriesOrderChoice select_series_order(int k, double epsilon_tol, const ElasticMaterial& material,
                                      const CylinderGeometry& geom,
                                      const SeriesOrderOptions& options = {});

/// D_N for one order, on the same grid as select_series_order.
double truncation_denominator(int k, int order, const ElasticMaterial& material,
                              const CylinderGeometry& geom, int grid = 256);

struct TailBounds {
  double u1 = 0.0;  // also bounds the u2 tail [m^(5/2)]
  double u3 = 0.0;  // [m^(5/2)]
};

/// L2 norms of the Fourier tails after M modes.
TailBounds l2_tail_bounds(int M, const ElasticMaterial& material, const CylinderGeometry& geom,
                          const AxialLoad& load);

/// Smallest M >= 1 whose tail bounds are both within the targets.
int select_mode_count(double target_u1, double target_u3, const ElasticMaterial& material,
                      const CylinderGeometry& geom, const AxialLoad& load);

struct ModeRecord {
  int k = 0;
  int order = 0;
  double bound = 0.0;
  double log_bound = 0.0;
  double denominator = 0.0;
  double condition = 0.0;
  /// The estimate is stated for k > 1; k = 1 applies it outside that range.
  bool outside_hypothesis = false;
};

struct TruncationReport {
  int M = 0;
  double epsilon_tol = 0.0;
  std::vector<ModeRecord> modes;
  double l2_bound_u1 = 0.0;
  double l2_bound_u3 = 0.0;

  int max_order() const;
};

}  // namespace hcyl
