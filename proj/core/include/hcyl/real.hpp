#pragma once

// Floating-point formats and error-free transformations used by the series evaluators.

#include <cmath>
#include <cstdint>
#include <span>
#include <type_traits>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace hcyl {

/// Software-emulated binary float with a 128-bit significand (about 38 decimal digits).
using Extended = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<128, boost::multiprecision::digit_base_2, void,
                                         std::int32_t, -16382, 16383>,
    boost::multiprecision::et_off>;

template <typename Real>
inline constexpr bool is_native_v = std::is_floating_point_v<Real>;

template <typename Real>
double to_double(const Real& x) {
  if constexpr (is_native_v<Real>) {
    return static_cast<double>(x);
  } else {
    return x.template convert_to<double>();
  }
}

/// Knuth's TwoSum: a + b = s + err exactly.
inline void two_sum(double a, double b, double& s, double& err) {
  s = a + b;
  const double bb = s - a;
  err = (a - (s - bb)) + (b - bb);
}

/// a * b = p + err exactly (needs a correctly rounded fma).
inline void two_prod(double a, double b, double& p, double& err) {
  p = a * b;
  err = std::fma(a, b, -p);
}

/// Neumaier's variant of Kahan summation; robust when addends exceed the running sum.
template <typename Real>
class CompensatedSum {
 public:
  CompensatedSum& operator+=(const Real& x) {
    if constexpr (is_native_v<Real>) {
      double s, e;
      two_sum(sum_, x, s, e);
      sum_ = s;
      comp_ += e;
    } else {
      sum_ += x;
    }
    return *this;
  }
  Real value() const { return sum_ + comp_; }

 private:
  Real sum_{0};
  Real comp_{0};
};

/// Evaluates sum_{i} coeffs[i] * x^i by Horner's rule. For double the compensated
/// Horner scheme (Graillat, Langlois, Louvet) is used, which behaves as if the
/// evaluation were carried out in twice the working precision.
template <typename Real>
Real horner(std::span<const Real> coeffs, const Real& x) {
  if (coeffs.empty()) return Real{0};
  const std::size_t n = coeffs.size();
  if constexpr (is_native_v<Real>) {
    double r = coeffs[n - 1];
    double c = 0.0;
    for (std::size_t i = n - 1; i-- > 0;) {
      double p, pe, s, se;
      two_prod(r, x, p, pe);
      two_sum(p, coeffs[i], s, se);
      r = s;
      c = std::fma(c, x, pe + se);
    }
    return r + c;
  } else {
    Real r = coeffs[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) r = r * x + coeffs[i];
    return r;
  }
}

}  // namespace hcyl
