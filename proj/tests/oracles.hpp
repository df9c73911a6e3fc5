#pragma once

// Independent reference computations for the tests. Nothing here calls into
// the library's AGM, Bessel, or Gauss-Legendre code paths.

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace oracle {

using Kronrod = boost::math::quadrature::gauss_kronrod<double, 61>;

/// K(k) = int_0^{pi/2} (1 - k^2 sin^2 t)^{-1/2} dt by adaptive Gauss-Kronrod.
inline double elliptic_k(double k) {
  auto f = [k](double t) {
    const double s = std::sin(t);
    return 1.0 / std::sqrt(1.0 - k * k * s * s);
  };
  return Kronrod::integrate(f, 0.0, std::numbers::pi / 2, 15, 1e-14);
}

/// K1(x) = int_0^inf exp(-x cosh t) cosh t dt, integrated with the e^{-x}
/// factor pulled out and truncated where the scaled integrand drops below
/// e^{-60}.
inline double bessel_k1(double x) {
  const double upper = std::acosh(1.0 + 60.0 / x);
  auto f = [x](double t) {
    const double c = std::cosh(t);
    return std::exp(-x * (c - 1.0)) * c;
  };
  // Split at the integrand's peak region for tiny x.
  const double mid = std::min(upper, std::max(1.0, std::log(2.0 / x)));
  const double a = Kronrod::integrate(f, 0.0, mid, 18, 1e-14);
  const double b = mid < upper ? Kronrod::integrate(f, mid, upper, 18, 1e-14) : 0.0;
  return std::exp(-x) * (a + b);
}

/// (1/4pi^2) int_{[-pi,pi]^2} dw / (1 - 2z cos w1 - 2z cos w2), with the inner
/// integral in closed form int_0^pi dw / (a - b cos w) = pi / sqrt(a^2 - b^2)
/// and the outer one adaptive.
inline double spectral_normalization(double zeta) {
  auto inner = [zeta](double w1) {
    const double a = 1.0 - 2.0 * zeta * std::cos(w1);
    const double b = 2.0 * zeta;
    return std::numbers::pi / std::sqrt((a - b) * (a + b));
  };
  const double quarter = Kronrod::integrate(inner, 0.0, std::numbers::pi, 18, 1e-14);
  return quarter / (std::numbers::pi * std::numbers::pi);
}

/// (1/pi^2) int_{[0,pi]^2} f(w1, w2) dw by nested adaptive Gauss-Kronrod;
/// the average over the full square for integrands even in each argument.
template <typename F>
double quarter_square_average(F f, double tol = 1e-12) {
  auto outer = [&](double w1) {
    return Kronrod::integrate([&](double w2) { return f(w1, w2); }, 0.0, std::numbers::pi, 10, tol);
  };
  return Kronrod::integrate(outer, 0.0, std::numbers::pi, 10, tol) /
         (std::numbers::pi * std::numbers::pi);
}

/// Sum of |i| + |j| over [-n, n]^2 by enumeration.
inline std::int64_t hop_count(int n) {
  std::int64_t total = 0;
  for (int i = -n; i <= n; ++i) {
    for (int j = -n; j <= n; ++j) total += std::abs(i) + std::abs(j);
  }
  return total;
}

inline double relative_error(double value, double reference) {
  return std::abs(value - reference) / std::abs(reference);
}

}  // namespace oracle
