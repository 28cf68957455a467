#pragma once

// Batch pipeline: configuration -> truncation selection -> mode solves ->
// field sampling -> field.csv, extrema.json, truncation.json.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hcyl/config.hpp"
#include "hcyl/field.hpp"
#include "hcyl/pipeline.hpp"

namespace hcyl {

struct ModeCheck {
  int k = 0;
  int n_mesh = 0;
  double deviation = 0.0;    // compare_mode against the extrapolated oracle
  double convergence = 0.0;  // oracle mesh-convergence estimate
};

struct VerificationSummary {
  double tolerance = 1e-6;
  std::vector<ModeCheck> modes;
  double max_boundary_residual = 0.0;
  double endface_residual = 0.0;  // [N/m^(1/2)]
  bool passed = true;
};

struct RunResult {
  SolvedModes solved;
  std::vector<Extremum> extrema;
  std::optional<VerificationSummary> verification;
  std::string field_csv;
  std::string extrema_json;
  std::string truncation_json;
};

/// Runs the pipeline and writes the three output files into spec.output_dir.
/// Progress lines go to `log` when given. Throws VerificationError after the
/// outputs are written if the oracle pass is out of tolerance.
RunResult run(const RunSpec& spec, std::ostream* log = nullptr);

/// The oracle pass on its own (modes k = 1, 3, 5 that are present in the set).
VerificationSummary verify_modes(const ModeSet& set, int n_mesh = 4000, double tolerance = 1e-6);

std::string truncation_json(const TruncationReport& report, int indent = 2);
std::string summary_json(const RunSpec& spec, const RunResult& result, int indent = 2);

}  // namespace hcyl
