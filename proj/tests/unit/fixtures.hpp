#pragma once

#include <cmath>
#include <memory>

#include "hcyl/material.hpp"
#include "hcyl/pipeline.hpp"

namespace hcyl::test {

inline ElasticMaterial concrete() { return ElasticMaterial::from_engineering(35000e6, 0.2); }

inline CylinderGeometry blister() { return {0.1365, 0.4, 3.0, 0.2125}; }

inline AxialLoad stay_load() { return AxialLoad::from_total_force(1900e3, blister()); }

inline double rel_diff(double x, double ref) {
  return std::abs(x - ref) / std::max(std::abs(ref), 1e-300);
}

/// Modes k = 1..11 of the blister, solved once per test binary (double precision).
inline const SolvedModes& small_case() {
  static const SolvedModes solved = [] {
    PipelineOptions o;
    o.threads = 1;
    return solve_modes(5, concrete(), blister(), stay_load(), o);
  }();
  return solved;
}

}  // namespace hcyl::test
