#pragma once

// Small dense linear algebra for the 4x4 Wronskian and boundary systems.

#include <array>
#include <cmath>
#include <cstddef>
#include <utility>

#include "hcyl/errors.hpp"
#include "hcyl/real.hpp"

namespace hcyl {

template <typename Real, std::size_t N = 4>
using Vec = std::array<Real, N>;

template <typename Real, std::size_t N = 4>
using Mat = std::array<std::array<Real, N>, N>;

template <typename Real, std::size_t N>
Vec<Real, N> multiply(const Mat<Real, N>& A, const Vec<Real, N>& x) {
  Vec<Real, N> y{};
  for (std::size_t i = 0; i < N; ++i) {
    Real s{0};
    for (std::size_t j = 0; j < N; ++j) s += A[i][j] * x[j];
    y[i] = s;
  }
  return y;
}

/// In-place LU factorization with partial pivoting.
template <typename Real, std::size_t N>
struct LuFactor {
  Mat<Real, N> lu{};
  std::array<std::size_t, N> perm{};
  int sign = 1;
  bool singular = false;

  explicit LuFactor(Mat<Real, N> A) : lu(std::move(A)) {
    using std::abs;
    for (std::size_t i = 0; i < N; ++i) perm[i] = i;
    for (std::size_t k = 0; k < N; ++k) {
      std::size_t p = k;
      Real best = abs(lu[k][k]);
      for (std::size_t i = k + 1; i < N; ++i) {
        if (abs(lu[i][k]) > best) {
          best = abs(lu[i][k]);
          p = i;
        }
      }
      if (best == 0) {
        singular = true;
        continue;
      }
      if (p != k) {
        std::swap(lu[p], lu[k]);
        std::swap(perm[p], perm[k]);
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < N; ++i) {
        lu[i][k] /= lu[k][k];
        for (std::size_t j = k + 1; j < N; ++j) lu[i][j] -= lu[i][k] * lu[k][j];
      }
    }
  }

  Real determinant() const {
    Real d = Real(sign);
    for (std::size_t i = 0; i < N; ++i) d *= lu[i][i];
    return d;
  }

  Vec<Real, N> solve(const Vec<Real, N>& rhs) const {
    if (singular) throw NumericError("singular matrix in LU solve");
    Vec<Real, N> x{};
    for (std::size_t i = 0; i < N; ++i) {
      Real s = rhs[perm[i]];
      for (std::size_t j = 0; j < i; ++j) s -= lu[i][j] * x[j];
      x[i] = s;
    }
    for (std::size_t i = N; i-- > 0;) {
      Real s = x[i];
      for (std::size_t j = i + 1; j < N; ++j) s -= lu[i][j] * x[j];
      x[i] = s / lu[i][i];
    }
    return x;
  }
};

template <typename Real, std::size_t N>
Real determinant(const Mat<Real, N>& A) {
  return LuFactor<Real, N>(A).determinant();
}

template <typename Real, std::size_t N>
struct EquilibratedSolution {
  Vec<Real, N> x{};
  /// max |R_ii| / min |R_ii| of the pivoted triangular factor of the equilibrated matrix.
  double condition = 0.0;
};

/// Solves A x = rhs by Householder QR with column pivoting applied to the
/// row- and column-equilibrated matrix Dr A Dc (each row, then each column,
/// divided by its largest entry in magnitude).
template <typename Real, std::size_t N>
EquilibratedSolution<Real, N> solve_equilibrated_qr(const Mat<Real, N>& A,
                                                    const Vec<Real, N>& rhs) {
  using std::abs;
  using std::sqrt;
  Mat<Real, N> M = A;
  Vec<Real, N> y = rhs;
  Vec<Real, N> col_scale{};
  for (std::size_t i = 0; i < N; ++i) {
    Real m{0};
    for (std::size_t j = 0; j < N; ++j) m = std::max<Real>(m, abs(M[i][j]));
    if (m == 0) throw NumericError("boundary matrix has a zero row");
    for (std::size_t j = 0; j < N; ++j) M[i][j] /= m;
    y[i] /= m;
  }
  for (std::size_t j = 0; j < N; ++j) {
    Real m{0};
    for (std::size_t i = 0; i < N; ++i) m = std::max<Real>(m, abs(M[i][j]));
    if (m == 0) throw NumericError("boundary matrix has a zero column");
    for (std::size_t i = 0; i < N; ++i) M[i][j] /= m;
    col_scale[j] = m;
  }

  std::array<std::size_t, N> piv{};
  for (std::size_t j = 0; j < N; ++j) piv[j] = j;
  for (std::size_t k = 0; k < N; ++k) {
    // pivot: remaining column of largest norm
    std::size_t p = k;
    Real best{-1};
    for (std::size_t j = k; j < N; ++j) {
      Real s{0};
      for (std::size_t i = k; i < N; ++i) s += M[i][j] * M[i][j];
      if (s > best) {
        best = s;
        p = j;
      }
    }
    if (p != k) {
      for (std::size_t i = 0; i < N; ++i) std::swap(M[i][p], M[i][k]);
      std::swap(piv[p], piv[k]);
    }
    Real norm = sqrt(best);
    if (norm == 0) throw NumericError("boundary matrix is exactly singular");
    if (M[k][k] > 0) norm = -norm;
    // Householder vector v = x - norm e_k, H = I - 2 v v^T / (v^T v)
    Vec<Real, N> v{};
    for (std::size_t i = k; i < N; ++i) v[i] = M[i][k];
    v[k] -= norm;
    Real vv{0};
    for (std::size_t i = k; i < N; ++i) vv += v[i] * v[i];
    if (vv != 0) {
      for (std::size_t j = k; j < N; ++j) {
        Real s{0};
        for (std::size_t i = k; i < N; ++i) s += v[i] * M[i][j];
        s = 2 * s / vv;
        for (std::size_t i = k; i < N; ++i) M[i][j] -= s * v[i];
      }
      Real s{0};
      for (std::size_t i = k; i < N; ++i) s += v[i] * y[i];
      s = 2 * s / vv;
      for (std::size_t i = k; i < N; ++i) y[i] -= s * v[i];
    }
  }

  Real rmax{0};
  Real rmin{-1};
  for (std::size_t i = 0; i < N; ++i) {
    const Real r = abs(M[i][i]);
    rmax = std::max<Real>(rmax, r);
    rmin = (rmin < 0) ? r : std::min<Real>(rmin, r);
  }
  if (rmin == 0) throw NumericError("boundary matrix is exactly singular");

  Vec<Real, N> z{};
  for (std::size_t i = N; i-- > 0;) {
    Real s = y[i];
    for (std::size_t j = i + 1; j < N; ++j) s -= M[i][j] * z[j];
    z[i] = s / M[i][i];
  }
  EquilibratedSolution<Real, N> out;
  for (std::size_t j = 0; j < N; ++j) out.x[piv[j]] = z[j] / col_scale[piv[j]];
  out.condition = to_double(Real(rmax / rmin));
  return out;
}

}  // namespace hcyl
