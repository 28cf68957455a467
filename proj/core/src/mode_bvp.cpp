#include "hcyl/mode_bvp.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hcyl/errors.hpp"
#include "hcyl/real.hpp"

namespace hcyl {

template <typename Real>
std::array<Real, 2> boundary_functionals(const StateVector<Real>& s, const Real& rho,
                                         const ElasticMaterial& material, int k, double h) {
  const Real lambda(material.lambda), mu(material.mu);
  const Real q = wavenumber<Real>(k, h);
  const Real traction = (lambda + 2 * mu) * s.dY + lambda / rho * s.Y + lambda * q * s.Z;
  const Real shear = s.dZ - q * s.Y;
  return {traction, shear};
}

template <typename Real>
Mat<Real> boundary_matrix(const BasisSet<Real>& bases, const CylinderGeometry& geom,
                          const ElasticMaterial& material, int k) {
  const Real a(geom.a), b(geom.b);
  const Real q = wavenumber<Real>(k, geom.h);
  Mat<Real> A{};
  for (std::size_t j = 0; j < 4; ++j) {
    const auto sa = unscale<Real>(bases[j].eval(Real(q * a)), k, geom.h);
    const auto sb = unscale<Real>(bases[j].eval(Real(q * b)), k, geom.h);
    const auto fa = boundary_functionals(sa, a, material, k, geom.h);
    const auto fb = boundary_functionals(sb, b, material, k, geom.h);
    A[0][j] = fa[0];
    A[1][j] = fb[0];
    A[2][j] = fa[1];
    A[3][j] = fb[1];
  }
  return A;
}

namespace {

template <typename Real>
class ModeImplT final : public detail::ModeImpl {
 public:
  ModeImplT(std::shared_ptr<const BasisSet<Real>> bases,
            std::shared_ptr<const ParticularEvaluator<Real>> particular, Vec<Real> constants,
            int k, double h, const ElasticMaterial& material)
      : bases_(std::move(bases)),
        particular_(std::move(particular)),
        C_(constants),
        k_(k),
        h_(h),
        q_(wavenumber<Real>(k, h)),
        sc_(scaled_coefficients_as<Real>(material.lambda, material.mu)),
        forcing_(particular_->forcing()) {}

  StateVector<Real> state(const Real& rho) const {
    const Real t = q_ * rho;
    using std::log;
    const Real log_t = log(t);
    StateVector<Real> s{};
    for (std::size_t j = 0; j < 4; ++j) {
      s += C_[j] * unscale<Real>((*bases_)[j].eval(t, log_t), k_, h_);
    }
    s += particular_->state(rho);
    return s;
  }

  StateVector<double> eval(double rho) const override {
    const auto s = state(Real(rho));
    return {to_double(s.Y), to_double(s.dY), to_double(s.Z), to_double(s.dZ)};
  }

  StateJet<double> eval_jet(double rho) const override {
    const Real r(rho);
    const auto s = state(r);
    const Real q2 = q_ * q_;
    const Real psi_over_mu = Real(forcing_psi(forcing_, rho)) / Real(forcing_.mu);
    const Real d2Y = -s.dY / r + (1 / (r * r) + sc_.alpha_t * q2) * s.Y - sc_.beta_t * q_ * s.dZ;
    const Real d2Z = sc_.delta_t * q_ * (s.Y / r + s.dY) + sc_.gamma_t * q2 * s.Z - s.dZ / r -
                     psi_over_mu;
    StateJet<double> jet;
    jet.state = {to_double(s.Y), to_double(s.dY), to_double(s.Z), to_double(s.dZ)};
    jet.d2Y = to_double(d2Y);
    jet.d2Z = to_double(d2Z);
    return jet;
  }

 private:
  std::shared_ptr<const BasisSet<Real>> bases_;
  std::shared_ptr<const ParticularEvaluator<Real>> particular_;
  Vec<Real> C_;
  int k_;
  double h_;
  Real q_;
  ScaledCoefficientsT<Real> sc_;
  ForcingSpec forcing_;
};

std::string format_condition(double c) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << c;
  return os.str();
}

template <typename Real>
ModeSolution solve_in(int k, const ElasticMaterial& material, const CylinderGeometry& geom,
                      const AxialLoad& load, int order, const ModeOptions& options) {
  auto bases = build_basis_set<Real>(order, material);
  const ForcingSpec spec{k, load.p, geom.a, geom.eps, geom.h, material.mu};
  auto particular = std::make_shared<const ParticularEvaluator<Real>>(bases, spec,
                                                                      options.quadrature_tol);
  const auto A = boundary_matrix<Real>(*bases, geom, material, k);

  // the particular state vanishes at a, so only the rows at b carry a right-hand side
  const Real b(geom.b);
  const auto fb = boundary_functionals(particular->state(b), b, material, k, geom.h);
  const Vec<Real> rhs{Real{0}, Real(-fb[0]), Real{0}, Real(-fb[1])};

  const auto sol = solve_equilibrated_qr<Real, 4>(A, rhs);
  std::vector<std::string> warnings;
  const double limit = is_native_v<Real> ? options.max_condition_double
                                         : options.max_condition_double * 1e15;
  if (!(sol.condition <= limit)) {
    throw NumericError("boundary system of mode k=" + std::to_string(k) +
                       " has condition estimate " + format_condition(sol.condition) +
                       (is_native_v<Real> ? "; enable extended precision" : ""));
  }
  if (sol.condition > options.warn_condition) {
    warnings.push_back("mode k=" + std::to_string(k) + ": boundary system condition estimate " +
                       format_condition(sol.condition));
  }

  std::array<double, 4> constants{};
  for (std::size_t j = 0; j < 4; ++j) constants[j] = to_double(sol.x[j]);
  auto impl = std::make_shared<const ModeImplT<Real>>(bases, particular, sol.x, k, geom.h,
                                                      material);
  return ModeSolution(k, order, constants, sol.condition, options.bound, !is_native_v<Real>,
                      std::move(warnings), std::move(impl), geom, material);
}

}  // namespace

ModeSolution::ModeSolution(int k, int order, std::array<double, 4> constants, double condition,
                           double bound, bool extended, std::vector<std::string> warnings,
                           std::shared_ptr<const detail::ModeImpl> impl, CylinderGeometry geom,
                           ElasticMaterial material)
    : k_(k),
      order_(order),
      constants_(constants),
      condition_(condition),
      bound_(bound),
      extended_(extended),
      warnings_(std::move(warnings)),
      impl_(std::move(impl)),
      geom_(geom),
      material_(material) {}

StateVector<double> ModeSolution::eval(double rho) const {
  if (!(rho >= geom_.a && rho <= geom_.b)) {
    throw DomainError("mode evaluation outside [a, b]: rho=" + std::to_string(rho));
  }
  return impl_->eval(rho);
}

StateJet<double> ModeSolution::eval_jet(double rho) const {
  if (!(rho >= geom_.a && rho <= geom_.b)) {
    throw DomainError("mode evaluation outside [a, b]: rho=" + std::to_string(rho));
  }
  return impl_->eval_jet(rho);
}

std::array<double, 4> ModeSolution::boundary_residuals() const {
  const double lambda = material_.lambda, mu = material_.mu;
  const double q = wavenumber<double>(k_, geom_.h);
  const auto sa = eval(geom_.a);
  const auto sb = eval(geom_.b);
  auto traction_scale = [&](const StateVector<double>& s, double rho) {
    return (lambda + 2 * mu) * std::abs(s.dY) + lambda * std::abs(s.Y) / rho +
           lambda * q * std::abs(s.Z);
  };
  auto shear_scale = [&](const StateVector<double>& s) {
    return std::abs(s.dZ) + q * std::abs(s.Y);
  };
  const double ts = std::max(traction_scale(sa, geom_.a), traction_scale(sb, geom_.b));
  const double ss = std::max(shear_scale(sa), shear_scale(sb));
  const auto fa = boundary_functionals<double>(sa, geom_.a, material_, k_, geom_.h);
  const auto fb = boundary_functionals<double>(sb, geom_.b, material_, k_, geom_.h);
  auto rel = [](double v, double scale) { return scale > 0 ? std::abs(v) / scale : std::abs(v); };
  return {rel(fa[0], ts), rel(fb[0], ts), rel(fa[1], ss), rel(fb[1], ss)};
}

ModeSolution solve_mode(int k, const ElasticMaterial& material, const CylinderGeometry& geom,
                        const AxialLoad& load, int order, const ModeOptions& options) {
  if (k < 1 || k % 2 == 0) {
    throw DomainError("mode index must be odd and positive (even modes vanish), got k=" +
                      std::to_string(k));
  }
  if (order < 3 || order % 2 == 0) {
    throw DomainError("series order must be odd and >= 3, got N=" + std::to_string(order));
  }
  geom.validate();
  if (options.extended_precision) return solve_in<Extended>(k, material, geom, load, order, options);
  return solve_in<double>(k, material, geom, load, order, options);
}

#define HCYL_INSTANTIATE(R)                                                                  \
  template Mat<R> boundary_matrix<R>(const BasisSet<R>&, const CylinderGeometry&,           \
                                     const ElasticMaterial&, int);                          \
  template std::array<R, 2> boundary_functionals<R>(const StateVector<R>&, const R&,        \
                                                    const ElasticMaterial&, int, double);

HCYL_INSTANTIATE(double)
HCYL_INSTANTIATE(Extended)

#undef HCYL_INSTANTIATE

}  // namespace hcyl
