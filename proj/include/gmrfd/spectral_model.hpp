#pragma once

namespace gmrfd {

/// Symmetric first-order conditional autoregression on the 2-D lattice:
/// conditional precision kappa and edge dependence factor zeta = lambda/kappa.
class SfcarParams {
 public:
  /// Throws DomainError unless kappa > 0 and 0 <= zeta <= 1/4.
  SfcarParams(double kappa, double zeta);

  double kappa() const noexcept { return kappa_; }
  double zeta() const noexcept { return zeta_; }
  double lambda() const noexcept { return zeta_ * kappa_; }

 private:
  double kappa_;
  double zeta_;
};

/// i.i.d. Gaussian measurement noise.
class NoiseModel {
 public:
  explicit NoiseModel(double sigma2);
  double sigma2() const noexcept { return sigma2_; }

 private:
  double sigma2_;
};

/// (2/pi) K(4 zeta): the spectral normalization kappa * P. Equals 1 at
/// zeta = 0 and diverges at zeta = 1/4 (DivergenceError).
double normalized_signal_power(double zeta);

/// f(w1, w2) = 1 / (4 pi^2 kappa (1 - 2 zeta cos w1 - 2 zeta cos w2)).
/// Throws SingularityError at the pole zeta = 1/4, w = (0, 0).
double spectral_density(const SfcarParams& p, double omega1, double omega2);

/// P = 2 K(4 zeta) / (pi kappa). Throws DivergenceError at zeta = 1/4.
double signal_power(const SfcarParams& p);

/// P / sigma^2.
double measurement_snr(const SfcarParams& p, const NoiseModel& noise);

}  // namespace gmrfd
