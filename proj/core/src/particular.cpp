#include "hcyl/particular.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "hcyl/errors.hpp"
#include "hcyl/quadrature.hpp"
#include "hcyl/real.hpp"

namespace hcyl {

template <typename Real>
std::shared_ptr<const BasisSet<Real>> build_basis_set(int order, const ElasticMaterial& material) {
  const auto sc = scaled_coefficients_as<Real>(material.lambda, material.mu);
  return std::make_shared<const BasisSet<Real>>(BasisSet<Real>{
      build_basis<Real>(1, order, sc), build_basis<Real>(2, order, sc),
      build_basis<Real>(3, order, sc), build_basis<Real>(4, order, sc)});
}

double forcing_psi(const ForcingSpec& spec, double rho) {
  if (spec.k % 2 == 0) return 0.0;
  if (rho >= spec.eps) return 0.0;
  const double sign = ((spec.k + 1) / 2) % 2 == 0 ? 1.0 : -1.0;
  return sign * 4.0 / spec.h * spec.p;
}

template <typename Real>
Mat<Real> wronskian(const BasisSet<Real>& bases, const Real& rho, int k, double h) {
  using std::log;
  const Real q = wavenumber<Real>(k, h);
  const Real t = q * rho;
  if (!(t > 0)) throw DomainError("Wronskian needs rho > 0");
  const Real log_t = log(t);
  Mat<Real> W{};
  for (std::size_t j = 0; j < 4; ++j) {
    const auto s = bases[j].eval(t, log_t);
    W[0][j] = s.Y;
    W[1][j] = q * s.dY;
    W[2][j] = s.Z;
    W[3][j] = q * s.dZ;
  }
  return W;
}

template <typename Real>
bool wronskian_is_singular(const Mat<Real>& W) {
  using std::abs;
  const Real tol = Real(1e-14) * Real(std::numeric_limits<Real>::epsilon()) /
                   Real(std::numeric_limits<double>::epsilon());
  Real scale{1};
  for (std::size_t j = 0; j < 4; ++j) {
    Real m{0};
    for (std::size_t i = 0; i < 4; ++i) m = std::max<Real>(m, abs(W[i][j]));
    scale *= m;
  }
  return !(abs(determinant(W)) > tol * scale);
}

template <typename Real>
ParticularEvaluator<Real>::ParticularEvaluator(std::shared_ptr<const BasisSet<Real>> bases,
                                               ForcingSpec spec, double rel_tol, int max_panels)
    : bases_(std::move(bases)), spec_(spec) {
  forcing_ = Real(-forcing_psi(spec_, spec_.a)) / Real(spec_.mu);
  const Real a(spec_.a), eps(spec_.eps);
  if (forcing_ == 0) {
    edges_ = {a, eps};
    cumulative_ = {Vec<Real>{}, Vec<Real>{}};
    return;
  }

  using std::abs;
  const auto W_eps = wronskian(*bases_, eps, spec_.k, spec_.h);
  // |W(eps) (I_new - I_old)|_i <= tol * sum_j |W_ij I_new_j| for every row i
  auto disagreement = [&](const Vec<Real>& fine, const Vec<Real>& coarse) {
    double worst = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
      Real diff{0}, mag{0};
      for (std::size_t j = 0; j < 4; ++j) {
        diff += W_eps[i][j] * (fine[j] - coarse[j]);
        mag += abs(W_eps[i][j] * fine[j]);
      }
      if (mag > 0) worst = std::max(worst, to_double(Real(abs(diff) / mag)));
    }
    return worst;
  };

  auto summed = [](const std::vector<Vec<Real>>& pieces) {
    Vec<Real> sum{};
    for (const auto& piece : pieces) {
      for (std::size_t c = 0; c < 4; ++c) sum[c] += piece[c];
    }
    return sum;
  };

  int panels = 1;
  auto pieces = panel_integrals(panels);
  Vec<Real> previous = summed(pieces);
  for (;;) {
    panels *= 2;
    pieces = panel_integrals(panels);
    const Vec<Real> current = summed(pieces);
    achieved_ = disagreement(current, previous);
    previous = current;
    if (achieved_ <= rel_tol) break;
    if (panels >= max_panels) {
      throw NumericError("particular-solution quadrature did not converge for mode k=" +
                         std::to_string(spec_.k) + " (disagreement " +
                         std::to_string(achieved_) + ")");
    }
  }

  const Real width = (eps - a) / panels;
  edges_.resize(static_cast<std::size_t>(panels) + 1);
  cumulative_.assign(edges_.size(), Vec<Real>{});
  edges_[0] = a;
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    edges_[i] = (i == edges_.size() - 1) ? eps : Real(a + width * static_cast<int>(i));
    for (std::size_t c = 0; c < 4; ++c) cumulative_[i][c] = cumulative_[i - 1][c] + pieces[i - 1][c];
  }
  total_ = cumulative_.back();
}

template <typename Real>
Vec<Real> ParticularEvaluator<Real>::integrand(const Real& r) const {
  const auto W = wronskian(*bases_, r, spec_.k, spec_.h);
  if (wronskian_is_singular(W)) {
    throw NumericError("Wronskian numerically singular at rho=" + std::to_string(to_double(r)) +
                       " for mode k=" + std::to_string(spec_.k) +
                       "; extended precision is required");
  }
  return LuFactor<Real, 4>(W).solve(Vec<Real>{Real{0}, Real{0}, Real{0}, forcing_});
}

template <typename Real>
std::vector<Vec<Real>> ParticularEvaluator<Real>::panel_integrals(int panels) const {
  const auto& rule = gauss_legendre<Real, 16>();
  const Real a(spec_.a), eps(spec_.eps);
  const Real width = (eps - a) / panels;
  std::vector<Vec<Real>> pieces;
  pieces.reserve(static_cast<std::size_t>(panels));
  for (int i = 0; i < panels; ++i) {
    const Real lo = a + width * i;
    const Real hi = (i + 1 == panels) ? eps : Real(a + width * (i + 1));
    pieces.push_back(gauss_panel<Real, Vec<Real>>(rule, lo, hi,
                                                  [this](const Real& r) { return integrand(r); }));
  }
  return pieces;
}

template <typename Real>
StateVector<Real> ParticularEvaluator<Real>::state(const Real& rho) const {
  const Real a(spec_.a), eps(spec_.eps);
  if (forcing_ == 0 || !(rho > a)) return {};
  Vec<Real> coeff;
  if (rho >= eps) {
    coeff = total_;
  } else {
    const auto it = std::upper_bound(edges_.begin(), edges_.end(), rho);
    const auto i = static_cast<std::size_t>(std::distance(edges_.begin(), it) - 1);
    coeff = cumulative_[i];
    if (rho > edges_[i]) {
      const auto piece = gauss_panel<Real, Vec<Real>>(
          gauss_legendre<Real, 16>(), edges_[i], rho, [this](const Real& r) { return integrand(r); });
      for (std::size_t c = 0; c < 4; ++c) coeff[c] += piece[c];
    }
  }
  const auto W = wronskian(*bases_, rho, spec_.k, spec_.h);
  const auto v = multiply(W, coeff);
  return {v[0], v[1], v[2], v[3]};
}

#define HCYL_INSTANTIATE(R)                                                                   \
  template std::shared_ptr<const BasisSet<R>> build_basis_set<R>(int, const ElasticMaterial&); \
  template Mat<R> wronskian<R>(const BasisSet<R>&, const R&, int, double);                    \
  template bool wronskian_is_singular<R>(const Mat<R>&);                                      \
  template class ParticularEvaluator<R>;

HCYL_INSTANTIATE(double)
HCYL_INSTANTIATE(Extended)

#undef HCYL_INSTANTIATE

}  // namespace hcyl
