#include "hcyl/truncation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "hcyl/errors.hpp"
#include "hcyl/homogeneous_series.hpp"
#include "hcyl/particular.hpp"
#include "hcyl/real.hpp"

namespace hcyl {

namespace {

void check_mode(int k) {
  if (k < 1 || k % 2 == 0) {
    throw DomainError("mode index must be odd and positive, got k=" + std::to_string(k));
  }
}

void check_order(int order) {
  if (order < 3 || order % 2 == 0) {
    throw DomainError("series order must be odd and >= 3, got N=" + std::to_string(order));
  }
}

// max|Y_N^j|, max|Z_N^j| over the grid for every odd N in [3, top].
struct GridMaxima {
  int top = 0;
  // index (N - 3) / 2, then basis j
  std::vector<std::array<double, 4>> y, z;

  double denominator(int order) const {
    const auto i = static_cast<std::size_t>((order - 3) / 2);
    double d = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < 4; ++j) d = std::min({d, y[i][j], z[i][j]});
    return d;
  }
};

GridMaxima grid_maxima(int k, int top, const ElasticMaterial& material,
                       const CylinderGeometry& geom, int grid) {
  if (grid < 2) throw DomainError("truncation grid needs at least 2 points");
  using std::abs;
  using std::log;
  const auto bases = build_basis_set<Extended>(top, material);
  const Extended q = wavenumber<Extended>(k, geom.h);
  const std::size_t levels = static_cast<std::size_t>((top - 3) / 2 + 1);
  GridMaxima out;
  out.top = top;
  out.y.assign(levels, {0.0, 0.0, 0.0, 0.0});
  out.z.assign(levels, {0.0, 0.0, 0.0, 0.0});

  for (int i = 0; i < grid; ++i) {
    const double rho = geom.a + (geom.b - geom.a) * i / (grid - 1);
    const Extended t = q * Extended(i + 1 == grid ? geom.b : rho);
    const Extended L = log(t);
    const Extended t2 = t * t;
    for (std::size_t j = 0; j < 4; ++j) {
      const auto& c = (*bases)[j].coeffs();
      // Y_1 and Z_1 (powers up to t^1 and t^0)
      Extended Y = c.a(-1) / t + (c.a(1) + L * c.b(1)) * t;
      Extended Z = c.c(0) + L * c.d(0);
      Extended t_odd = t;     // t^(N)
      Extended t_even{1};     // t^(N-1)
      for (int n = 3; n <= top; n += 2) {
        t_odd *= t2;
        t_even *= t2;
        Y += (c.a(n) + L * c.b(n)) * t_odd;
        Z += (c.c(n - 1) + L * c.d(n - 1)) * t_even;
        const auto level = static_cast<std::size_t>((n - 3) / 2);
        out.y[level][j] = std::max(out.y[level][j], to_double(Extended(abs(Y))));
        out.z[level][j] = std::max(out.z[level][j], to_double(Extended(abs(Z))));
      }
    }
  }
  return out;
}

}  // namespace

double bound_constant(int k, const ElasticMaterial& material, const CylinderGeometry& geom) {
  check_mode(k);
  const double lambda = material.lambda, mu = material.mu;
  const double q = std::numbers::pi * k / geom.h;
  const double c1 = std::max(1.0, 1.0 / (q * geom.b));
  const double c2 = std::max({1.0, std::abs(std::log(q * geom.a)), std::abs(std::log(q * geom.b))});
  const double lq = std::log(q);
  const double c3 = std::max({q, mu / (lambda + mu) * q * lq,
                              2 * (lambda + 2 * mu) / (lambda + mu) / q * lq});
  return c1 * c2 * c3;
}

double log_error_bound(int k, int order, const ElasticMaterial& material,
                       const CylinderGeometry& geom) {
  check_mode(k);
  check_order(order);
  const double lambda = material.lambda, mu = material.mu;
  const double N = order;
  const double tb = std::numbers::pi * k * geom.b / geom.h;
  const double lead = 3 * (2 * lambda + 5 * mu) * (lambda + mu) * (lambda + mu) / (16 * mu * mu * mu);
  const double poly = (N + 3) * (3 * N * N * N + 21 * N * N + 42 * N + 32);
  return std::log(bound_constant(k, material, geom)) + std::log(lead) + (N + 2) * std::log(tb) +
         tb * tb + std::log(poly) - N * std::numbers::ln2 - 2 * std::lgamma((N + 1) / 2 + 1);
}

double error_bound(int k, int order, const ElasticMaterial& material,
                   const CylinderGeometry& geom) {
  const double lb = log_error_bound(k, order, material, geom);
  const double v = std::exp(lb);
  if (!std::isfinite(v) || (v == 0.0 && std::isfinite(lb))) {
    throw NumericError("truncation bound for k=" + std::to_string(k) + ", N=" +
                       std::to_string(order) + " is outside the double range (ln E = " +
                       std::to_string(lb) + ")");
  }
  return v;
}

double SeriesOrderChoice::ratio() const { return std::exp(log_bound - std::log(denominator)); }

SeriesOrderChoice select_series_order(int k, double epsilon_tol, const ElasticMaterial& material,
                                      const CylinderGeometry& geom,
                                      const SeriesOrderOptions& options) {
  check_mode(k);
  if (!(epsilon_tol > 0)) throw DomainError("epsilon_tol must be positive");
  check_order(options.first_order);
  check_order(options.ceiling);
  if (options.ceiling < options.first_order) {
    throw DomainError("series-order ceiling is below the first order tried");
  }
  geom.validate();
  const auto maxima = grid_maxima(k, options.ceiling, material, geom, options.grid);
  const double log_tol = std::log(epsilon_tol);
  for (int N = options.first_order; N <= options.ceiling; N += 2) {
    const double lb = log_error_bound(k, N, material, geom);
    const double den = maxima.denominator(N);
    if (lb - std::log(den) < log_tol) return {k, N, lb, den};
  }
  throw NumericError("no series order up to the ceiling N=" + std::to_string(options.ceiling) +
                     " meets the truncation tolerance for mode k=" + std::to_string(k));
}

double truncation_denominator(int k, int order, const ElasticMaterial& material,
                              const CylinderGeometry& geom, int grid) {
  check_mode(k);
  check_order(order);
  return grid_maxima(k, order, material, geom, grid).denominator(order);
}

TailBounds l2_tail_bounds(int M, const ElasticMaterial& material, const CylinderGeometry& geom,
                          const AxialLoad& load) {
  if (M < 1) throw DomainError("mode count must be >= 1");
  const double a = geom.a, b = geom.b, h = geom.h, p = load.p, mu = material.mu;
  const double pi = std::numbers::pi;
  const double m = M;
  TailBounds t;
  t.u1 = p * b * b / mu * std::sqrt(h * (b - a) / (2 * a * pi)) / std::sqrt(m);
  t.u3 = p / (mu * a * pi * pi) * std::sqrt(h * h * h * b * b * b * (b - a) / 24) / (m * std::sqrt(m));
  return t;
}

int select_mode_count(double target_u1, double target_u3, const ElasticMaterial& material,
                      const CylinderGeometry& geom, const AxialLoad& load) {
  if (!(target_u1 > 0) || !(target_u3 > 0)) throw DomainError("L2 targets must be positive");
  const auto one = l2_tail_bounds(1, material, geom, load);
  // invert the closed forms, then settle rounding by direct checks
  double guess = 1.0;
  if (one.u1 > target_u1) guess = std::max(guess, std::pow(one.u1 / target_u1, 2.0));
  if (one.u3 > target_u3) guess = std::max(guess, std::pow(one.u3 / target_u3, 2.0 / 3.0));
  if (guess > 1e9) throw DomainError("L2 targets need more than 1e9 modes");
  int M = std::max(1, static_cast<int>(std::floor(guess)) - 1);
  auto ok = [&](int m) {
    const auto t = l2_tail_bounds(m, material, geom, load);
    return t.u1 <= target_u1 && t.u3 <= target_u3;
  };
  while (M > 1 && ok(M - 1)) --M;
  while (!ok(M)) ++M;
  return M;
}

int TruncationReport::max_order() const {
  int n = 0;
  for (const auto& m : modes) n = std::max(n, m.order);
  return n;
}

}  // namespace hcyl
