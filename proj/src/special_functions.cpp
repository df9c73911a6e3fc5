#include "gmrfd/special_functions.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "gmrfd/errors.hpp"

namespace gmrfd {

namespace {

constexpr double kAgmTol = 1e-15;
constexpr int kAgmMaxIter = 64;

// Ascending series (A&S 9.6.11 with n = 1); accurate for 0 < x <= 2.
double bessel_k1_series(double x) {
  const double y = 0.25 * x * x;
  double term = 1.0;  // y^k / (k! (k+1)!)
  double psi_k1 = -std::numbers::egamma_v<double>;  // psi(k+1)
  double psi_k2 = 1.0 - std::numbers::egamma_v<double>;  // psi(k+2)
  double i1_sum = 0.0;
  double psi_sum = 0.0;
  for (int k = 0; k < 60; ++k) {
    i1_sum += term;
    psi_sum += (psi_k1 + psi_k2) * term;
    if (term < 1e-18 * i1_sum) break;
    term *= y / ((k + 1.0) * (k + 2.0));
    psi_k1 += 1.0 / (k + 1.0);
    psi_k2 += 1.0 / (k + 2.0);
  }
  const double i1 = 0.5 * x * i1_sum;
  return 1.0 / x + std::log(0.5 * x) * i1 - 0.25 * x * psi_sum;
}

// Steed's continued fraction (Temme's CF2) for K0 and K1, x >= 2. The result
// carries the e^{-x} sqrt(pi / 2x) asymptotic prefactor explicitly.
double bessel_k1_large(double x) {
  constexpr double a1 = 0.25;  // 1/4 - nu^2 with nu = 0
  double b = 2.0 * (1.0 + x);
  double d = 1.0 / b;
  double delh = d;
  double h = d;
  double q1 = 0.0;
  double q2 = 1.0;
  double q = a1;
  double c = a1;
  double a = -a1;
  double s = 1.0 + q * delh;
  for (int i = 1; i < 10000; ++i) {
    a -= 2 * i;
    c = -a * c / (i + 1.0);
    const double qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0;
    d = 1.0 / (b + a * d);
    delh = (b * d - 1.0) * delh;
    h += delh;
    const double dels = q * delh;
    s += dels;
    if (std::abs(dels / s) < 1e-17) break;
  }
  h *= a1;
  const double k0 = std::sqrt(std::numbers::pi / (2.0 * x)) * std::exp(-x) / s;
  return k0 * (x + 0.5 - h) / x;
}

}  // namespace

double complete_elliptic_k(double k) {
  if (!(k >= 0.0 && k < 1.0)) {
    throw DomainError("complete_elliptic_k: modulus must lie in [0, 1), got " + std::to_string(k));
  }
  double a = 1.0;
  double g = std::sqrt((1.0 - k) * (1.0 + k));
  for (int i = 0; i < kAgmMaxIter && std::abs(a - g) > kAgmTol * a; ++i) {
    const double next = 0.5 * (a + g);
    g = std::sqrt(a * g);
    a = next;
  }
  return std::numbers::pi / (a + g);
}

double bessel_k1(double x) {
  if (!(x > 0.0)) {
    throw DomainError("bessel_k1: argument must be positive, got " + std::to_string(x));
  }
  if (std::isinf(x)) return 0.0;
  return x <= 2.0 ? bessel_k1_series(x) : bessel_k1_large(x);
}

}  // namespace gmrfd
