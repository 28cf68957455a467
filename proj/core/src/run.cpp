#include "hcyl/run.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>

#include <nlohmann/json.hpp>

#include "hcyl/errors.hpp"
#include "hcyl/oracle.hpp"

namespace hcyl {

using nlohmann::ordered_json;

namespace {

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open " + path.string() + " for writing");
  f << text << '\n';
  if (!f) throw Error("write error on " + path.string());
}

// JSON has no infinities; out-of-range bounds are written as null next to their logarithm.
ordered_json finite_or_null(double v) {
  return std::isfinite(v) ? ordered_json(v) : ordered_json(nullptr);
}

}  // namespace

VerificationSummary verify_modes(const ModeSet& set, int n_mesh, double tolerance) {
  VerificationSummary v;
  v.tolerance = tolerance;
  for (const auto& mode : set.modes) {
    if (mode.k() > 5) continue;
    const auto oracle = collocation_solve_mode(mode.k(), set.material, set.geom, set.load, n_mesh);
    const double dev = compare_mode(mode, oracle);
    v.modes.push_back({mode.k(), n_mesh, dev, oracle.convergence_estimate});
    if (!(dev <= tolerance)) v.passed = false;
  }
  for (const auto& mode : set.modes) {
    for (double r : mode.boundary_residuals()) {
      v.max_boundary_residual = std::max(v.max_boundary_residual, r);
    }
  }
  if (!(v.max_boundary_residual <= 1e-8)) v.passed = false;
  v.endface_residual = endface_traction_residual(set, 128);
  return v;
}

std::string truncation_json(const TruncationReport& report, int indent) {
  ordered_json j;
  j["M"] = report.M;
  j["mode_count"] = report.modes.size();
  j["epsilon_tol"] = report.epsilon_tol;
  j["l2_bound_u1"] = report.l2_bound_u1;
  j["l2_bound_u3"] = report.l2_bound_u3;
  ordered_json modes = ordered_json::array();
  const ModeRecord* worst = nullptr;
  for (const auto& m : report.modes) {
    modes.push_back({{"k", m.k},
                     {"N_k", m.order},
                     {"bound", finite_or_null(m.bound)},
                     {"log_bound", m.log_bound},
                     {"denominator", m.denominator},
                     {"ratio", finite_or_null(std::exp(m.log_bound) / m.denominator)},
                     {"condition", m.condition},
                     {"outside_hypothesis", m.outside_hypothesis}});
    if (!worst || m.order > worst->order) worst = &m;
  }
  j["modes"] = std::move(modes);
  if (worst) {
    j["max_N"] = {{"k", worst->k},
                  {"N_k", worst->order},
                  {"bound", finite_or_null(worst->bound)},
                  {"log_bound", worst->log_bound},
                  {"denominator", worst->denominator}};
  }
  return j.dump(indent);
}

std::string summary_json(const RunSpec& spec, const RunResult& result, int indent) {
  const auto material = spec.material();
  const auto load = spec.load();
  ordered_json inputs;
  inputs["E_Pa"] = spec.E;
  inputs["nu"] = spec.nu;
  inputs["h_m"] = spec.geom.h;
  inputs["a_m"] = spec.geom.a;
  inputs["b_m"] = spec.geom.b;
  inputs["eps_m"] = spec.geom.eps;
  inputs["P_N"] = load.P;
  inputs["p_Pa"] = load.p;
  inputs["load_given_as"] = spec.P ? "P" : "p";
  inputs["epsilon_tol"] = spec.epsilon_tol;
  inputs["M"] = result.solved.report.M;
  if (spec.target_l2_u1) inputs["target_l2_u1"] = *spec.target_l2_u1;
  if (spec.target_l2_u3) inputs["target_l2_u3"] = *spec.target_l2_u3;
  inputs["grid_nrho"] = spec.grid_nrho;
  inputs["grid_nz"] = spec.grid_nz;
  if (!spec.grid_theta.empty()) inputs["grid_theta_rad"] = spec.grid_theta;
  inputs["output_dir"] = spec.output_dir;
  inputs["extended_precision"] = spec.extended_precision;
  inputs["verify"] = spec.verify;
  inputs["N_ceiling"] = spec.N_ceiling;

  ordered_json j;
  j["inputs"] = std::move(inputs);
  j["lambda_Pa"] = material.lambda;
  j["mu_Pa"] = material.mu;
  j["p_Pa"] = load.p;
  j["M"] = result.solved.report.M;

  ordered_json extrema = ordered_json::array();
  for (const auto& e : result.extrema) {
    extrema.push_back({{"quantity", e.quantity},
                       {"max_abs", e.max_abs},
                       {"value", e.value},
                       {"rho_m", e.rho},
                       {"z_m", e.z}});
  }
  j["extrema"] = std::move(extrema);

  ordered_json modes = ordered_json::array();
  for (const auto& m : result.solved.report.modes) {
    modes.push_back({{"k", m.k}, {"N_k", m.order}, {"condition", m.condition}});
  }
  j["modes"] = std::move(modes);
  j["warnings"] = result.solved.warnings;

  if (result.verification) {
    const auto& v = *result.verification;
    ordered_json checks = ordered_json::array();
    for (const auto& c : v.modes) {
      checks.push_back({{"k", c.k},
                        {"n_mesh", c.n_mesh},
                        {"deviation", c.deviation},
                        {"convergence", c.convergence}});
    }
    j["verification"] = {{"tolerance", v.tolerance},
                         {"modes", std::move(checks)},
                         {"max_boundary_residual", v.max_boundary_residual},
                         {"endface_residual", v.endface_residual},
                         {"passed", v.passed}};
  }
  return j.dump(indent);
}

RunResult run(const RunSpec& spec, std::ostream* log) {
  spec.validate();
  const auto material = spec.material();
  const auto load = spec.load();
  const int M = spec.mode_count();

  PipelineOptions options;
  options.epsilon_tol = spec.epsilon_tol;
  options.N_ceiling = spec.N_ceiling;
  options.extended_precision = spec.extended_precision;

  if (log) {
    *log << "p = " << load.p / 1e6 << " MPa, lambda = " << material.lambda / 1e6
         << " MPa, mu = " << material.mu / 1e6 << " MPa, M = " << M << " (k <= " << 2 * M + 1
         << ")\n";
  }
  RunResult result;
  result.solved = solve_modes(M, material, spec.geom, load, options);
  if (log) {
    *log << "solved " << result.solved.set.modes.size()
         << " modes, max N_k = " << result.solved.report.max_order() << '\n';
    for (const auto& w : result.solved.warnings) *log << "warning: " << w << '\n';
  }

  GridSpec grid;
  grid.n_rho = spec.grid_nrho;
  grid.n_z = spec.grid_nz;
  grid.theta = spec.grid_theta;
  const auto table = grid_sample(result.solved.set, grid);
  result.extrema = extrema_report(table);

  if (spec.verify) {
    result.verification = verify_modes(result.solved.set);
    if (log) {
      for (const auto& c : result.verification->modes) {
        *log << "oracle k=" << c.k << ": deviation " << c.deviation << '\n';
      }
    }
  }

  const std::filesystem::path dir(spec.output_dir);
  std::filesystem::create_directories(dir);
  result.field_csv = (dir / "field.csv").string();
  result.extrema_json = (dir / "extrema.json").string();
  result.truncation_json = (dir / "truncation.json").string();
  write_field_csv(table, result.field_csv);
  write_text(result.extrema_json, summary_json(spec, result));
  write_text(result.truncation_json, truncation_json(result.solved.report));
  if (log) *log << "wrote " << result.field_csv << ", " << result.extrema_json << ", "
                << result.truncation_json << '\n';

  if (result.verification && !result.verification->passed) {
    throw VerificationError("oracle verification out of tolerance; see " + result.extrema_json);
  }
  return result;
}

}  // namespace hcyl
