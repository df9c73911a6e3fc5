#include "gmrfd/spectral_model.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "gmrfd/errors.hpp"
#include "gmrfd/special_functions.hpp"

namespace gmrfd {

SfcarParams::SfcarParams(double kappa, double zeta) : kappa_(kappa), zeta_(zeta) {
  if (!(kappa > 0.0) || std::isinf(kappa)) {
    throw DomainError("SfcarParams: kappa must be positive, got " + std::to_string(kappa));
  }
  if (!(zeta >= 0.0 && zeta <= 0.25)) {
    throw DomainError("SfcarParams: zeta must lie in [0, 1/4], got " + std::to_string(zeta));
  }
}

NoiseModel::NoiseModel(double sigma2) : sigma2_(sigma2) {
  if (!(sigma2 > 0.0) || std::isinf(sigma2)) {
    throw DomainError("NoiseModel: sigma2 must be positive, got " + std::to_string(sigma2));
  }
}

double normalized_signal_power(double zeta) {
  if (!(zeta >= 0.0 && zeta <= 0.25)) {
    throw DomainError("normalized_signal_power: zeta must lie in [0, 1/4]");
  }
  if (zeta == 0.25) {
    throw DivergenceError("signal power diverges at zeta = 1/4");
  }
  return 2.0 / std::numbers::pi * complete_elliptic_k(4.0 * zeta);
}

double spectral_density(const SfcarParams& p, double omega1, double omega2) {
  const double denom = 1.0 - 2.0 * p.zeta() * (std::cos(omega1) + std::cos(omega2));
  // Only reachable at zeta = 1/4 with omega at (or rounding to) the origin.
  if (!(denom > 0.0)) {
    throw SingularityError("spectral_density: pole at zeta = 1/4, omega = (0, 0)");
  }
  constexpr double four_pi2 = 4.0 * std::numbers::pi * std::numbers::pi;
  return 1.0 / (four_pi2 * p.kappa() * denom);
}

double signal_power(const SfcarParams& p) {
  return normalized_signal_power(p.zeta()) / p.kappa();
}

double measurement_snr(const SfcarParams& p, const NoiseModel& noise) {
  return signal_power(p) / noise.sigma2();
}

}  // namespace gmrfd
