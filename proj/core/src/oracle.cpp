#include "hcyl/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Sparse>
#include <Eigen/SparseLU>

#include "hcyl/errors.hpp"
#include "hcyl/particular.hpp"
#include "hcyl/quadrature.hpp"

namespace hcyl {

namespace {

std::vector<double> piecewise_mesh(const CylinderGeometry& geom, int n1, int n2) {
  std::vector<double> x(static_cast<std::size_t>(n1 + n2 + 1));
  for (int i = 0; i <= n1; ++i) x[static_cast<std::size_t>(i)] = geom.a + (geom.eps - geom.a) * i / n1;
  for (int i = 1; i <= n2; ++i) {
    x[static_cast<std::size_t>(n1 + i)] = geom.eps + (geom.b - geom.eps) * i / n2;
  }
  x[static_cast<std::size_t>(n1)] = geom.eps;
  x.back() = geom.b;
  return x;
}

// Three-point weights for u' and u'' at a node with spacings hl (left) and hr (right).
struct Stencil {
  double d1[3];
  double d2[3];
};

Stencil central(double hl, double hr) {
  const double s = hl * hr * (hl + hr);
  return {{-hr * hr / s, (hr * hr - hl * hl) / s, hl * hl / s},
          {2 * hr / s, -2 * (hl + hr) / s, 2 * hl / s}};
}

CollocationSolution finite_difference(int k, const ElasticMaterial& material,
                                      const CylinderGeometry& geom, const AxialLoad& load, int n1,
                                      int n2) {
  const auto x = piecewise_mesh(geom, n1, n2);
  const int n = n1 + n2;
  const double q = std::numbers::pi * k / geom.h;
  const auto sc = scaled_coefficients(material.lambda, material.mu);
  const double stiff = material.lambda + 2 * material.mu;
  const ForcingSpec spec{k, load.p, geom.a, geom.eps, geom.h, material.mu};
  const double psi_in = forcing_psi(spec, geom.a) / material.mu;  // Psi/mu on [a, eps)
  const double h1 = (geom.eps - geom.a) / n1;
  const double h2 = (geom.b - geom.eps) / n2;
  // Z'' jumps by Psi/mu across eps; the central first-derivative stencil there
  // picks up hl hr [Z''] / (2 (hl + hr)), removed explicitly.
  const double dz_kink = h1 * h2 * psi_in / (2 * (h1 + h2));

  auto iy = [](int i) { return 2 * i; };
  auto iz = [](int i) { return 2 * i + 1; };
  const int size = 2 * (n + 1);
  std::vector<Eigen::Triplet<double>> entries;
  entries.reserve(static_cast<std::size_t>(size) * 8);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(size);

  // equations at interior nodes: Y equation in row 2i, Z equation in row 2i+1
  for (int i = 1; i < n; ++i) {
    const double r = x[static_cast<std::size_t>(i)];
    const double hl = r - x[static_cast<std::size_t>(i - 1)];
    const double hr = x[static_cast<std::size_t>(i + 1)] - r;
    const auto st = central(hl, hr);
    const int row_y = iy(i), row_z = iz(i);
    for (int m = 0; m < 3; ++m) {
      const int node = i - 1 + m;
      // Y'' + Y'/r - Y/r^2 - alpha q^2 Y + beta q Z' = 0
      entries.emplace_back(row_y, iy(node), st.d2[m] + st.d1[m] / r);
      entries.emplace_back(row_y, iz(node), sc.beta_t * q * st.d1[m]);
      // Z'' + Z'/r - gamma q^2 Z - delta q (Y' + Y/r) = -Psi/mu
      entries.emplace_back(row_z, iz(node), st.d2[m] + st.d1[m] / r);
      entries.emplace_back(row_z, iy(node), -sc.delta_t * q * st.d1[m]);
    }
    entries.emplace_back(row_y, iy(i), -1 / (r * r) - sc.alpha_t * q * q);
    entries.emplace_back(row_z, iz(i), -sc.gamma_t * q * q);
    entries.emplace_back(row_z, iy(i), -sc.delta_t * q / r);
    if (i < n1) {
      rhs[row_z] = -psi_in;
    } else if (i == n1) {
      // the stencil for Z'' sees the one-sided second derivatives weighted by hl, hr
      rhs[row_z] = -psi_in * hl / (hl + hr);
      rhs[row_y] = -sc.beta_t * q * (-dz_kink);
      rhs[row_z] += (1 / r) * dz_kink;
    }
  }

  // one-sided second-order first derivatives at the ends
  auto boundary_rows = [&](int node, int dir, double h, int row_t, int row_s) {
    const double r = x[static_cast<std::size_t>(node)];
    const double w[3] = {-3 * dir / (2 * h), 4.0 * dir / (2 * h), -1.0 * dir / (2 * h)};
    for (int m = 0; m < 3; ++m) {
      const int nd = node + dir * m;
      // traction / (lambda + 2 mu)
      entries.emplace_back(row_t, iy(nd), w[m]);
      entries.emplace_back(row_s, iz(nd), w[m]);
    }
    entries.emplace_back(row_t, iy(node), material.lambda / (r * stiff));
    entries.emplace_back(row_t, iz(node), material.lambda * q / stiff);
    entries.emplace_back(row_s, iy(node), -q);
  };
  boundary_rows(0, +1, h1, iy(0), iz(0));
  boundary_rows(n, -1, h2, iy(n), iz(n));

  Eigen::SparseMatrix<double> A(size, size);
  A.setFromTriplets(entries.begin(), entries.end());
  A.makeCompressed();
  Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
  lu.compute(A);
  if (lu.info() != Eigen::Success) {
    throw NumericError("finite-difference system is singular for mode k=" + std::to_string(k));
  }
  const Eigen::VectorXd sol = lu.solve(rhs);
  if (lu.info() != Eigen::Success) {
    throw NumericError("finite-difference solve failed for mode k=" + std::to_string(k));
  }

  CollocationSolution out;
  out.k = k;
  out.mesh = x;
  const auto nodes = static_cast<std::size_t>(n + 1);
  out.Y.resize(nodes);
  out.Z.resize(nodes);
  out.dY.resize(nodes);
  out.dZ.resize(nodes);
  for (int i = 0; i <= n; ++i) {
    out.Y[static_cast<std::size_t>(i)] = sol[iy(i)];
    out.Z[static_cast<std::size_t>(i)] = sol[iz(i)];
  }
  auto derivative = [&](const std::vector<double>& u, int i) {
    if (i == 0) return (-3 * u[0] + 4 * u[1] - u[2]) / (2 * h1);
    const auto j = static_cast<std::size_t>(i);
    if (i == n) return (3 * u[j] - 4 * u[j - 1] + u[j - 2]) / (2 * h2);
    const auto st = central(x[j] - x[j - 1], x[j + 1] - x[j]);
    return st.d1[0] * u[j - 1] + st.d1[1] * u[j] + st.d1[2] * u[j + 1];
  };
  for (int i = 0; i <= n; ++i) {
    const auto j = static_cast<std::size_t>(i);
    out.dY[j] = derivative(out.Y, i);
    out.dZ[j] = derivative(out.Z, i) - (i == n1 ? dz_kink : 0.0);
  }
  return out;
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

CollocationSolution collocation_solve_mode(int k, const ElasticMaterial& material,
                                           const CylinderGeometry& geom, const AxialLoad& load,
                                           int n_mesh, bool richardson) {
  if (k < 1 || k % 2 == 0) {
    throw DomainError("mode index must be odd and positive, got k=" + std::to_string(k));
  }
  if (n_mesh < 4) throw DomainError("finite-difference mesh needs at least 4 intervals");
  geom.validate();
  int n1 = static_cast<int>(std::lround(n_mesh * (geom.eps - geom.a) / (geom.b - geom.a)));
  n1 = std::clamp(n1, 2, n_mesh - 2);
  const int n2 = n_mesh - n1;
  auto coarse = finite_difference(k, material, geom, load, n1, n2);
  if (!richardson) return coarse;

  const auto fine = finite_difference(k, material, geom, load, 2 * n1, 2 * n2);
  CollocationSolution out = coarse;
  double diff_y = 0.0, diff_z = 0.0;
  for (std::size_t i = 0; i < coarse.mesh.size(); ++i) {
    const std::size_t f = 2 * i;
    diff_y = std::max(diff_y, std::abs(fine.Y[f] - coarse.Y[i]));
    diff_z = std::max(diff_z, std::abs(fine.Z[f] - coarse.Z[i]));
    out.Y[i] = (4 * fine.Y[f] - coarse.Y[i]) / 3;
    out.Z[i] = (4 * fine.Z[f] - coarse.Z[i]) / 3;
    out.dY[i] = (4 * fine.dY[f] - coarse.dY[i]) / 3;
    out.dZ[i] = (4 * fine.dZ[f] - coarse.dZ[i]) / 3;
  }
  const double sy = max_abs(out.Y), sz = max_abs(out.Z);
  out.convergence_estimate = std::max(sy > 0 ? diff_y / sy : diff_y, sz > 0 ? diff_z / sz : diff_z);
  return out;
}

double compare_mode(const ModeSolution& mode, const CollocationSolution& oracle) {
  if (mode.k() != oracle.k) throw DomainError("compare_mode: mode indices differ");
  std::vector<double> ys, zs;
  ys.reserve(oracle.mesh.size());
  zs.reserve(oracle.mesh.size());
  for (double r : oracle.mesh) {
    const auto s = mode.eval(r);
    ys.push_back(s.Y);
    zs.push_back(s.Z);
  }
  const double sy = max_abs(ys), sz = max_abs(zs);
  double dy = 0.0, dz = 0.0;
  for (std::size_t i = 0; i < ys.size(); ++i) {
    dy = std::max(dy, std::abs(ys[i] - oracle.Y[i]));
    dz = std::max(dz, std::abs(zs[i] - oracle.Z[i]));
  }
  return std::max(sy > 0 ? dy / sy : dy, sz > 0 ? dz / sz : dz);
}

double endface_traction_residual(const ModeSet& set, int n_rho) {
  if (n_rho < 2) throw DomainError("end-face quadrature needs at least 2 points");
  const auto rule = make_gauss_legendre<double>(n_rho);
  const double z = -set.geom.h / 2;
  auto integrand = [&](double p_applied) {
    return [&set, z, p_applied](double rho) {
      const double r = stress(set, rho, z).sigma_z + p_applied;
      return r * r * rho;
    };
  };
  const double inner = gauss_panel<double, double>(rule, set.geom.a, set.geom.eps, integrand(set.load.p));
  const double outer = gauss_panel<double, double>(rule, set.geom.eps, set.geom.b, integrand(0.0));
  return std::sqrt(2 * std::numbers::pi * (inner + outer));
}

}  // namespace hcyl
