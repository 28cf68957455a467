#pragma once

// Gauss-Legendre rules and composite integration on [lo, hi].

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include <boost/math/constants/constants.hpp>

#include "hcyl/real.hpp"

namespace hcyl {

template <typename Real>
struct GaussRule {
  std::vector<Real> nodes;    // on (-1, 1), ascending
  std::vector<Real> weights;
};

/// n-point Gauss-Legendre rule; roots of P_n polished by Newton iteration in Real.
template <typename Real>
GaussRule<Real> make_gauss_legendre(int n) {
  using std::abs;
  using std::cos;
  GaussRule<Real> rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  const Real pi = boost::math::constants::pi<Real>();
  const Real tol = Real(std::numeric_limits<Real>::epsilon()) * 4;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    Real x = cos(pi * (Real(i) + Real(0.75)) / (Real(n) + Real(0.5)));
    Real dp{0};
    for (int it = 0; it < 100; ++it) {
      Real p0{1}, p1 = x;
      for (int m = 2; m <= n; ++m) {
        const Real p2 = ((2 * m - 1) * x * p1 - (m - 1) * p0) / m;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1);
      const Real dx = p1 / dp;
      x -= dx;
      if (abs(dx) <= tol) break;
    }
    {
      Real p0{1}, p1 = x;
      for (int m = 2; m <= n; ++m) {
        const Real p2 = ((2 * m - 1) * x * p1 - (m - 1) * p0) / m;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1);
    }
    const Real w = 2 / ((1 - x * x) * dp * dp);
    rule.nodes[static_cast<std::size_t>(i)] = -x;
    rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    rule.weights[static_cast<std::size_t>(i)] = w;
    rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  return rule;
}

/// Cached rule; construction is thread-safe (function-local static).
template <typename Real, int Points>
const GaussRule<Real>& gauss_legendre() {
  static const GaussRule<Real> rule = make_gauss_legendre<Real>(Points);
  return rule;
}

template <typename Real>
void accumulate(Real& acc, const Real& w, const Real& v) {
  acc += w * v;
}

template <typename Real, std::size_t N>
void accumulate(std::array<Real, N>& acc, const Real& w, const std::array<Real, N>& v) {
  for (std::size_t i = 0; i < N; ++i) acc[i] += w * v[i];
}

/// Integral of f over [lo, hi] with one application of the rule. `Value` is
/// Real or std::array<Real, N>.
template <typename Real, typename Value, typename F>
Value gauss_panel(const GaussRule<Real>& rule, const Real& lo, const Real& hi, F&& f) {
  const Real half = (hi - lo) / 2;
  const Real mid = (hi + lo) / 2;
  Value acc{};
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    accumulate(acc, Real(rule.weights[i] * half), f(Real(mid + half * rule.nodes[i])));
  }
  return acc;
}

}  // namespace hcyl
