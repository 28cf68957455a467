#include "hcyl/field.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <numbers>

#include "hcyl/errors.hpp"
#include "hcyl/parallel.hpp"
#include "hcyl/quadrature.hpp"
#include "hcyl/real.hpp"

namespace hcyl {

RadialProfile radial_profile(const ModeSet& set, double rho) {
  RadialProfile p;
  p.rho = rho;
  p.k.reserve(set.modes.size());
  p.states.reserve(set.modes.size());
  for (const auto& mode : set.modes) {
    p.k.push_back(mode.k());
    p.states.push_back(mode.eval(rho));
  }
  return p;
}

DisplacementJet displacement_jet(const RadialProfile& profile, double h, double z) {
  CompensatedSum<double> ur, u3, ur_rho, ur_z, u3_rho, u3_z;
  for (std::size_t m = 0; m < profile.states.size(); ++m) {
    const double q = std::numbers::pi * profile.k[m] / h;
    const double c = std::cos(q * z);
    const double s = std::sin(q * z);
    const auto& st = profile.states[m];
    ur += st.Y * c;
    ur_rho += st.dY * c;
    ur_z += -q * st.Y * s;
    u3 += st.Z * s;
    u3_rho += st.dZ * s;
    u3_z += q * st.Z * c;
  }
  return {ur.value(), u3.value(), ur_rho.value(), ur_z.value(), u3_rho.value(), u3_z.value()};
}

StressState stress_from_jet(const DisplacementJet& j, const ElasticMaterial& material,
                            double rho) {
  const double nu = material.nu;
  const double pre = 2 * material.mu / (1 - 2 * nu);
  const double hoop = j.u_r / rho;
  StressState s;
  s.sigma_z = pre * ((1 - nu) * j.du_3_dz + nu * (hoop + j.du_r_drho));
  s.sigma_r = pre * ((1 - nu) * j.du_r_drho + nu * (hoop + j.du_3_dz));
  s.sigma_theta = pre * ((1 - nu) * hoop + nu * (j.du_r_drho + j.du_3_dz));
  s.tau_rz = material.mu * (j.du_r_dz + j.du_3_drho);
  return s;
}

DisplacementState displacement(const ModeSet& set, double rho, double z) {
  const auto jet = displacement_jet(radial_profile(set, rho), set.geom.h, z);
  return {jet.u_r, jet.u_3};
}

CartesianDisplacement displacement_cartesian(const ModeSet& set, double rho, double theta,
                                             double z) {
  const auto u = displacement(set, rho, z);
  return {u.u_r * std::cos(theta), u.u_r * std::sin(theta), u.u_3};
}

StressState stress(const ModeSet& set, double rho, double z) {
  const auto jet = displacement_jet(radial_profile(set, rho), set.geom.h, z);
  return stress_from_jet(jet, set.material, rho);
}

double axial_force(const ModeSet& set, double z) {
  const auto& rule = gauss_legendre<double, 64>();
  auto integrand = [&](double rho) { return stress(set, rho, z).sigma_z * rho; };
  const double inner = gauss_panel<double, double>(rule, set.geom.a, set.geom.eps, integrand);
  const double outer = gauss_panel<double, double>(rule, set.geom.eps, set.geom.b, integrand);
  return 2 * std::numbers::pi * (inner + outer);
}

std::vector<double> rho_grid(const CylinderGeometry& geom, int n) {
  if (n < 2) throw DomainError("radial grid needs at least 2 points");
  std::vector<double> r(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) r[static_cast<std::size_t>(i)] = geom.a + (geom.b - geom.a) * i / (n - 1);
  r.back() = geom.b;
  return r;
}

std::vector<double> z_grid(const CylinderGeometry& geom, int n) {
  if (n < 2) throw DomainError("axial grid needs at least 2 points");
  std::vector<double> z(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    z[static_cast<std::size_t>(i)] = geom.h * (i - (n - 1) / 2.0) / (n - 1);
  }
  return z;
}

FieldTable grid_sample(const ModeSet& set, const GridSpec& grid, unsigned threads) {
  const auto rhos = rho_grid(set.geom, grid.n_rho);
  const auto zs = z_grid(set.geom, grid.n_z);
  const std::size_t nr = rhos.size(), nz = zs.size();

  // one block of n_z rows per radius
  std::vector<FieldRow> block(nr * nz);
  parallel_for(
      nr,
      [&](std::size_t i) {
        const auto profile = radial_profile(set, rhos[i]);
        for (std::size_t j = 0; j < nz; ++j) {
          const auto jet = displacement_jet(profile, set.geom.h, zs[j]);
          FieldRow& row = block[i * nz + j];
          row.rho = rhos[i];
          row.z = zs[j];
          row.u = {jet.u_r, jet.u_3};
          row.s = stress_from_jet(jet, set.material, rhos[i]);
        }
      },
      threads);

  FieldTable table;
  table.grid = grid;
  table.M = set.modes.empty() ? 0 : static_cast<int>(set.modes.size()) - 1;
  if (grid.theta.empty()) {
    table.rows = std::move(block);
    return table;
  }
  table.rows.reserve(block.size() * grid.theta.size());
  for (double theta : grid.theta) {
    for (FieldRow row : block) {
      row.theta = theta;
      table.rows.push_back(row);
    }
  }
  return table;
}

void write_field_csv(const FieldTable& table, const std::string& path) {
  std::unique_ptr<std::FILE, int (*)(std::FILE*)> f(std::fopen(path.c_str(), "w"), &std::fclose);
  if (!f) throw Error("cannot open " + path + " for writing");
  const bool slices = !table.grid.theta.empty();
  if (slices) std::fputs("theta_rad,", f.get());
  std::fputs("rho_m,z_m,u_r_m,u_3_m,sigma_z_Pa,sigma_r_Pa,sigma_theta_Pa,tau_rz_Pa\n", f.get());
  for (const auto& r : table.rows) {
    if (slices) std::fprintf(f.get(), "%.17g,", r.theta);
    std::fprintf(f.get(), "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", r.rho, r.z, r.u.u_r,
                 r.u.u_3, r.s.sigma_z, r.s.sigma_r, r.s.sigma_theta, r.s.tau_rz);
  }
  if (std::ferror(f.get())) throw Error("write error on " + path);
}

std::vector<Extremum> extrema_report(const FieldTable& table) {
  if (table.rows.empty()) throw DomainError("extrema of an empty field table");
  struct Quantity {
    const char* name;
    double (*get)(const FieldRow&);
  };
  static const std::array<Quantity, 5> quantities{{
      {"u_3", [](const FieldRow& r) { return r.u.u_3; }},
      {"sigma_z", [](const FieldRow& r) { return r.s.sigma_z; }},
      {"sigma_r", [](const FieldRow& r) { return r.s.sigma_r; }},
      {"sigma_theta", [](const FieldRow& r) { return r.s.sigma_theta; }},
      {"tau_rz", [](const FieldRow& r) { return r.s.tau_rz; }},
  }};

  auto better = [](double v, const FieldRow& r, const Extremum& best) {
    const double av = std::abs(v);
    if (av != best.max_abs) return av > best.max_abs;
    if (r.rho != best.rho) return r.rho < best.rho;
    if (std::abs(r.z) != std::abs(best.z)) return std::abs(r.z) < std::abs(best.z);
    return r.z < best.z;
  };

  std::vector<Extremum> out;
  for (const auto& q : quantities) {
    Extremum best{q.name, -1.0, 0.0, 0.0, 0.0};
    for (const auto& row : table.rows) {
      const double v = q.get(row);
      if (best.max_abs < 0 || better(v, row, best)) {
        best.max_abs = std::abs(v);
        best.value = v;
        best.rho = row.rho;
        best.z = row.z;
      }
    }
    out.push_back(best);
  }
  return out;
}

}  // namespace hcyl
