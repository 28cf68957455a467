#include "hcyl/homogeneous_series.hpp"

#include <numbers>
#include <string>

#include <boost/math/constants/constants.hpp>

#include "hcyl/errors.hpp"
#include "hcyl/real.hpp"

namespace hcyl {

using std::log;

template <typename Real>
SeriesCoefficients<Real>::SeriesCoefficients(int order)
    : order_(order),
      a_(static_cast<std::size_t>(order + 2), Real{0}),
      b_(static_cast<std::size_t>(order + 1), Real{0}),
      c_(static_cast<std::size_t>(order), Real{0}),
      d_(static_cast<std::size_t>(order), Real{0}) {}

template <typename Real>
ParitySeries<Real>::ParitySeries(int lowest, std::vector<Real> coeffs)
    : lowest_(lowest), coeffs_(std::move(coeffs)) {}

template <typename Real>
ParitySeries<Real> ParitySeries<Real>::derivative() const {
  std::vector<Real> out;
  if (lowest_ == 1) {
    out.reserve(coeffs_.size());
    for (std::size_t m = 0; m < coeffs_.size(); ++m) out.push_back(Real(2 * m + 1) * coeffs_[m]);
    return ParitySeries(0, std::move(out));
  }
  if (coeffs_.size() > 1) out.reserve(coeffs_.size() - 1);
  for (std::size_t m = 1; m < coeffs_.size(); ++m) out.push_back(Real(2 * m) * coeffs_[m]);
  return ParitySeries(1, std::move(out));
}

template <typename Real>
Real ParitySeries<Real>::eval(const Real& t, const Real& t2, std::size_t terms) const {
  const std::size_t n = std::min(terms, coeffs_.size());
  const Real h = horner<Real>(std::span<const Real>(coeffs_.data(), n), t2);
  return lowest_ == 1 ? Real(t * h) : h;
}

namespace {

template <typename Real>
std::array<ParitySeries<Real>, 3> with_derivatives(ParitySeries<Real> s) {
  auto d1 = s.derivative();
  auto d2 = d1.derivative();
  return {std::move(s), std::move(d1), std::move(d2)};
}

}  // namespace

template <typename Real>
BasisSolution<Real>::BasisSolution(int j, SeriesCoefficients<Real> coeffs)
    : j_(j), coeffs_(std::move(coeffs)) {
  const int N = coeffs_.order();
  std::vector<Real> odd_a, odd_b, even_c, even_d;
  for (int n = 1; n <= N; n += 2) {
    odd_a.push_back(coeffs_.a(n));
    odd_b.push_back(coeffs_.b(n));
  }
  for (int n = 0; n <= N - 1; n += 2) {
    even_c.push_back(coeffs_.c(n));
    even_d.push_back(coeffs_.d(n));
  }
  sa_ = with_derivatives(ParitySeries<Real>(1, std::move(odd_a)));
  sb_ = with_derivatives(ParitySeries<Real>(1, std::move(odd_b)));
  sc_ = with_derivatives(ParitySeries<Real>(0, std::move(even_c)));
  sd_ = with_derivatives(ParitySeries<Real>(0, std::move(even_d)));
}

template <typename Real>
std::array<Real, 4> BasisSolution<Real>::seed() const {
  return {coeffs_.a(-1), coeffs_.a(1), coeffs_.b(1), coeffs_.c(0)};
}

template <typename Real>
StateVector<Real> BasisSolution<Real>::eval(const Real& t) const {
  if (!(t > 0)) throw DomainError("series evaluation needs t > 0");
  return eval(t, Real(log(t)));
}

template <typename Real>
StateVector<Real> BasisSolution<Real>::eval(const Real& t, const Real& log_t) const {
  const Real t2 = t * t;
  const Real inv = 1 / t;
  const Real am1 = coeffs_.a(-1);
  const Real A = sa_[0].eval(t, t2), dA = sa_[1].eval(t, t2);
  const Real B = sb_[0].eval(t, t2), dB = sb_[1].eval(t, t2);
  const Real C = sc_[0].eval(t, t2), dC = sc_[1].eval(t, t2);
  const Real D = sd_[0].eval(t, t2), dD = sd_[1].eval(t, t2);
  StateVector<Real> s;
  s.Y = am1 * inv + A + log_t * B;
  s.dY = -am1 * inv * inv + dA + log_t * dB + B * inv;
  s.Z = C + log_t * D;
  s.dZ = dC + log_t * dD + D * inv;
  return s;
}

template <typename Real>
StateJet<Real> BasisSolution<Real>::eval_jet(const Real& t) const {
  if (!(t > 0)) throw DomainError("series evaluation needs t > 0");
  const Real L = log(t);
  const Real t2 = t * t;
  const Real inv = 1 / t;
  StateJet<Real> jet;
  jet.state = eval(t, L);
  const Real am1 = coeffs_.a(-1);
  const Real B = sb_[0].eval(t, t2), dB = sb_[1].eval(t, t2), d2B = sb_[2].eval(t, t2);
  const Real D = sd_[0].eval(t, t2), dD = sd_[1].eval(t, t2), d2D = sd_[2].eval(t, t2);
  jet.d2Y = 2 * am1 * inv * inv * inv + sa_[2].eval(t, t2) + L * d2B + 2 * dB * inv - B * inv * inv;
  jet.d2Z = sc_[2].eval(t, t2) + L * d2D + 2 * dD * inv - D * inv * inv;
  return jet;
}

template <typename Real>
std::array<Real, 2> BasisSolution<Real>::eval_truncated(const Real& t, const Real& log_t,
                                                        int order) const {
  const auto terms = static_cast<std::size_t>((order + 1) / 2);
  const Real t2 = t * t;
  const Real Y = coeffs_.a(-1) / t + sa_[0].eval(t, t2, terms) + log_t * sb_[0].eval(t, t2, terms);
  const Real Z = sc_[0].eval(t, t2, terms) + log_t * sd_[0].eval(t, t2, terms);
  return {Y, Z};
}

template <typename Real>
SeriesCoefficients<Real> seed_basis(int j, const ScaledCoefficientsT<Real>& sc, int order) {
  if (j < 1 || j > 4) throw DomainError("basis index must be 1..4, got " + std::to_string(j));
  SeriesCoefficients<Real> s(std::max(order, 3));
  switch (j) {
    case 1: s.a(-1) = 1; break;
    case 2: s.a(1) = 1; break;
    case 3: s.b(1) = 1; break;
    default: s.c(0) = 1; break;
  }
  s.d(0) = sc.alpha_t / sc.beta_t * s.a(-1) - 2 / sc.beta_t * s.b(1);
  return s;
}

template <typename Real>
Quadruple<Real> recurrence_step(int n, const Quadruple<Real>& prev,
                                const ScaledCoefficientsT<Real>& sc) {
  if (n < 3 || n % 2 == 0) {
    throw DomainError("recurrence index must be odd and >= 3, got " + std::to_string(n));
  }
  // Upper-triangular system; unknown order d, c, b, a.
  const Real m1 = Real(n - 1);
  const Real np = Real(n * n - 1);
  Quadruple<Real> q;
  q.d = (sc.delta_t * m1 * prev.b + sc.gamma_t * prev.d) / (m1 * m1);
  q.c = (sc.delta_t * m1 * prev.a + sc.delta_t * prev.b + sc.gamma_t * prev.c - 2 * m1 * q.d) /
        (m1 * m1);
  q.b = (sc.alpha_t * prev.b - sc.beta_t * m1 * q.d) / np;
  q.a = (sc.alpha_t * prev.a - Real(2 * n) * q.b - sc.beta_t * m1 * q.c - sc.beta_t * q.d) / np;
  return q;
}

template <typename Real>
BasisSolution<Real> build_basis(int j, int order, const ScaledCoefficientsT<Real>& sc) {
  if (order < 3 || order % 2 == 0) {
    throw DomainError("series order must be odd and >= 3, got " + std::to_string(order));
  }
  auto s = seed_basis<Real>(j, sc, order);
  for (int n = 3; n <= order; n += 2) {
    const Quadruple<Real> prev{s.a(n - 2), s.b(n - 2), s.c(n - 3), s.d(n - 3)};
    const auto q = recurrence_step<Real>(n, prev, sc);
    s.a(n) = q.a;
    s.b(n) = q.b;
    s.c(n - 1) = q.c;
    s.d(n - 1) = q.d;
  }
  return BasisSolution<Real>(j, std::move(s));
}

template <typename Real>
StateVector<Real> eval_basis(const BasisSolution<Real>& basis, const Real& t) {
  return basis.eval(t);
}

template <typename Real>
Real wavenumber(int k, double h) {
  if constexpr (is_native_v<Real>) {
    return std::numbers::pi * k / h;
  } else {
    return boost::math::constants::pi<Real>() * k / Real(h);
  }
}

template <typename Real>
StateVector<Real> unscale(const StateVector<Real>& scaled, int k, double h) {
  const Real q = wavenumber<Real>(k, h);
  return {scaled.Y, q * scaled.dY, scaled.Z, q * scaled.dZ};
}

#define HCYL_INSTANTIATE(R)                                                                      \
  template class SeriesCoefficients<R>;                                                          \
  template class ParitySeries<R>;                                                                \
  template class BasisSolution<R>;                                                               \
  template SeriesCoefficients<R> seed_basis<R>(int, const ScaledCoefficientsT<R>&, int);         \
  template Quadruple<R> recurrence_step<R>(int, const Quadruple<R>&, const ScaledCoefficientsT<R>&); \
  template BasisSolution<R> build_basis<R>(int, int, const ScaledCoefficientsT<R>&);             \
  template StateVector<R> eval_basis<R>(const BasisSolution<R>&, const R&);                      \
  template StateVector<R> unscale<R>(const StateVector<R>&, int, double);                        \
  template R wavenumber<R>(int, double);

HCYL_INSTANTIATE(double)
HCYL_INSTANTIATE(Extended)

#undef HCYL_INSTANTIATE

}  // namespace hcyl
