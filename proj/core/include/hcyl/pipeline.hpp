#pragma once

// Truncation selection and mode solves for a whole mode set.

#include <string>
#include <vector>

#include "hcyl/field.hpp"
#include "hcyl/truncation.hpp"

namespace hcyl {

struct PipelineOptions {
  double epsilon_tol = 1e-3;
  int N_ceiling = 401;
  int truncation_grid = 256;
  bool extended_precision = false;
  unsigned threads = 0;  // 0: default_thread_count()
};

struct SolvedModes {
  ModeSet set;
  TruncationReport report;
  std::vector<std::string> warnings;
};

/// Solves modes k = 1, 3, ..., 2M+1 in parallel; results are gathered in k order.
SolvedModes solve_modes(int M, const ElasticMaterial& material, const CylinderGeometry& geom,
                        const AxialLoad& load, const PipelineOptions& options = {});

}  // namespace hcyl
