#include "gmrfd/correlation_map.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gmrfd/errors.hpp"
#include "gmrfd/spectral_model.hpp"
#include "gmrfd/special_functions.hpp"

namespace gmrfd {

namespace {

constexpr double kTinyZeta = 1e-8;
constexpr double kSeriesModulus = 0.5;
constexpr double kNegativeClamp = 1e-13;
constexpr int kBisectionMaxIter = 80;
constexpr double kBisectionWidth = 1e-14;
constexpr double kRhoBracket = 1e-13;

// (2/pi)K(k) - 1 = sum_{m>=1} [(2m-1)!!/(2m)!!]^2 k^{2m}, free of the
// cancellation in forming K first.
double elliptic_excess(double k) {
  const double k2 = k * k;
  double a = 1.0;
  double power = 1.0;
  double sum = 0.0;
  for (int m = 1; m < 200; ++m) {
    a *= (2.0 * m - 1.0) / (2.0 * m);
    power *= k2;
    const double term = a * a * power;
    sum += term;
    if (term <= 1e-17 * sum) break;
  }
  return sum;
}

}  // namespace

PhysicalEnvironment::PhysicalEnvironment(double alpha) : alpha_(alpha) {
  if (!(alpha > 0.0) || std::isinf(alpha)) {
    throw DomainError("PhysicalEnvironment: alpha must be positive, got " + std::to_string(alpha));
  }
}

EdgeCorrelation::EdgeCorrelation(double rho) : rho_(rho) {
  if (!(rho >= 0.0 && rho <= 1.0)) {
    throw DomainError("EdgeCorrelation: rho must lie in [0, 1], got " + std::to_string(rho));
  }
}

EdgeCorrelation edge_correlation(const PhysicalEnvironment& env, double spacing) {
  if (!(spacing > 0.0)) {
    throw DomainError("edge_correlation: spacing must be positive, got " + std::to_string(spacing));
  }
  const double x = env.alpha() * spacing;
  return EdgeCorrelation(std::clamp(x * bessel_k1(x), 0.0, 1.0));
}

EdgeCorrelation rho_of_zeta(double zeta) {
  if (!(zeta >= 0.0 && zeta <= 0.25)) {
    throw DomainError("rho_of_zeta: zeta must lie in [0, 1/4], got " + std::to_string(zeta));
  }
  if (zeta == 0.25) return EdgeCorrelation(1.0);
  // (2/pi)K(4z) = 1 + 4z^2 + 36z^4 + ..., so rho = z + 5z^3 + O(z^5).
  if (zeta < kTinyZeta) return EdgeCorrelation(zeta * (1.0 + 5.0 * zeta * zeta));

  const double k = 4.0 * zeta;
  double rho;
  if (k <= kSeriesModulus) {
    const double excess = elliptic_excess(k);
    rho = excess / ((1.0 + excess) * k);
  } else {
    const double c = normalized_signal_power(zeta);
    rho = (1.0 - 1.0 / c) / k;
  }
  if (rho < 0.0 && rho > -kNegativeClamp) rho = 0.0;
  return EdgeCorrelation(std::min(rho, 1.0));
}

double zeta_of_rho(EdgeCorrelation rho) {
  const double target = rho.value();
  if (target == 0.0) return 0.0;
  if (target == 1.0) return 0.25;
  // Inverse of rho = z + 5z^3.
  if (target < kTinyZeta) return target * (1.0 - 5.0 * target * target);

  // Near 1/4 rho varies by ~1e-2 across a zeta width of 1e-14, so the width
  // test alone is not enough: the rho bracket must close as well.
  double lo = 0.0;
  double hi = 0.25;
  double rho_lo = 0.0;
  double rho_hi = 1.0;
  for (int i = 0; i < kBisectionMaxIter; ++i) {
    if (hi - lo < kBisectionWidth && rho_hi - rho_lo < kRhoBracket) break;
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double rho_mid = rho_of_zeta(mid).value();
    if (rho_mid < target) {
      lo = mid;
      rho_lo = rho_mid;
    } else {
      hi = mid;
      rho_hi = rho_mid;
    }
  }
  return target - rho_lo <= rho_hi - target ? lo : hi;
}

double zeta_of_spacing(const PhysicalEnvironment& env, double spacing) {
  return zeta_of_rho(edge_correlation(env, spacing));
}

}  // namespace gmrfd
