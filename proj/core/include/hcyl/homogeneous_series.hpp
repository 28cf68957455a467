#pragma once

// Frobenius-with-logarithm solutions of the scaled homogeneous radial system
//
//   Y'' + Y'/t - Y/t^2 - alpha_t Y + beta_t Z'      = 0
//   Z'' + Z'/t - gamma_t Z - delta_t (Y' + Y/t)     = 0
//
// in the variable t = pi k rho / h, expanded as
//
//   Y(t) = sum_{n>=-1} a_n t^n + ln t sum_{n>=0} b_n t^n
//   Z(t) = sum_{n>=0}  c_n t^n + ln t sum_{n>=0} d_n t^n.
//
// Only a_n, b_n with odd n and c_n, d_n with even n are nonzero.

#include <array>
#include <span>
#include <vector>

#include "hcyl/material.hpp"

namespace hcyl {

/// (Y, Y', Z, Z') at one abscissa.
template <typename Real>
struct StateVector {
  Real Y{0};
  Real dY{0};
  Real Z{0};
  Real dZ{0};

  StateVector& operator+=(const StateVector& o) {
    Y += o.Y;
    dY += o.dY;
    Z += o.Z;
    dZ += o.dZ;
    return *this;
  }
  friend StateVector operator*(const Real& s, const StateVector& v) {
    return {s * v.Y, s * v.dY, s * v.Z, s * v.dZ};
  }
};

/// State plus second derivatives, from term-wise differentiation of the series.
template <typename Real>
struct StateJet {
  StateVector<Real> state;
  Real d2Y{0};
  Real d2Z{0};
};

/// One step of the coefficient recurrence: (a_n, b_n, c_{n-1}, d_{n-1}).
template <typename Real>
struct Quadruple {
  Real a{0};
  Real b{0};
  Real c{0};
  Real d{0};
};

/// Dense coefficient tables of a scaled expansion truncated at odd order N.
/// Index ranges: a: -1..N, b: 0..N, c and d: 0..N-1.
template <typename Real>
class SeriesCoefficients {
 public:
  SeriesCoefficients() = default;
  explicit SeriesCoefficients(int order);

  int order() const { return order_; }

  Real& a(int n) { return a_[static_cast<std::size_t>(n + 1)]; }
  Real& b(int n) { return b_[static_cast<std::size_t>(n)]; }
  Real& c(int n) { return c_[static_cast<std::size_t>(n)]; }
  Real& d(int n) { return d_[static_cast<std::size_t>(n)]; }
  const Real& a(int n) const { return a_[static_cast<std::size_t>(n + 1)]; }
  const Real& b(int n) const { return b_[static_cast<std::size_t>(n)]; }
  const Real& c(int n) const { return c_[static_cast<std::size_t>(n)]; }
  const Real& d(int n) const { return d_[static_cast<std::size_t>(n)]; }

 private:
  int order_ = 0;
  std::vector<Real> a_, b_, c_, d_;
};

/// A power series sum_m coeffs[m] t^(lowest + 2m) with lowest in {0, 1},
/// evaluated by Horner's rule in t^2.
template <typename Real>
class ParitySeries {
 public:
  ParitySeries() = default;
  ParitySeries(int lowest, std::vector<Real> coeffs);

  int lowest() const { return lowest_; }
  std::size_t size() const { return coeffs_.size(); }

  /// Term-wise derivative, again a parity series.
  ParitySeries derivative() const;

  /// Value from the first `terms` coefficients (all of them when terms is npos).
  Real eval(const Real& t, const Real& t2, std::size_t terms = static_cast<std::size_t>(-1)) const;

 private:
  int lowest_ = 0;
  std::vector<Real> coeffs_;
};

/// One of the four fundamental solutions, selected by its unit seed over
/// (a_{-1}, a_1, b_1, c_0).
template <typename Real>
class BasisSolution {
 public:
  BasisSolution(int j, SeriesCoefficients<Real> coeffs);

  int index() const { return j_; }
  const SeriesCoefficients<Real>& coeffs() const { return coeffs_; }
  std::array<Real, 4> seed() const;

  /// Highest power kept in Y (the series order N).
  int order() const { return coeffs_.order(); }

  StateVector<Real> eval(const Real& t) const;
  StateVector<Real> eval(const Real& t, const Real& log_t) const;
  StateJet<Real> eval_jet(const Real& t) const;

  /// (Y_N, Z_N) using only powers up to `order` in Y and `order - 1` in Z.
  std::array<Real, 2> eval_truncated(const Real& t, const Real& log_t, int order) const;

 private:
  int j_;
  SeriesCoefficients<Real> coeffs_;
  // sum_{n>=1} a_n t^n, sum b_n t^n, sum c_n t^n, sum d_n t^n and their first two derivatives
  std::array<ParitySeries<Real>, 3> sa_, sb_, sc_, sd_;
};

/// Low-order coefficients of basis j in {1,2,3,4}: unit seed plus
/// d_0 = (alpha_t/beta_t) a_{-1} - (2/beta_t) b_1. Populates indices up to n = 2.
template <typename Real>
SeriesCoefficients<Real> seed_basis(int j, const ScaledCoefficientsT<Real>& sc, int order = 3);

/// Solves the 4x4 triangular system for (a_n, b_n, c_{n-1}, d_{n-1}) given
/// prev = (a_{n-2}, b_{n-2}, c_{n-3}, d_{n-3}); n odd, n >= 3.
template <typename Real>
Quadruple<Real> recurrence_step(int n, const Quadruple<Real>& prev,
                                const ScaledCoefficientsT<Real>& sc);

/// Seeds basis j and runs the recurrence up to odd order N >= 3.
template <typename Real>
BasisSolution<Real> build_basis(int j, int order, const ScaledCoefficientsT<Real>& sc);

/// Throws DomainError for t <= 0.
template <typename Real>
StateVector<Real> eval_basis(const BasisSolution<Real>& basis, const Real& t);

/// State in the scaled variable t -> state at rho = t h / (pi k):
/// derivatives pick up the factor pi k / h.
template <typename Real>
StateVector<Real> unscale(const StateVector<Real>& scaled, int k, double h);

/// pi k / h evaluated in Real.
template <typename Real>
Real wavenumber(int k, double h);

}  // namespace hcyl
