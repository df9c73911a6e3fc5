#pragma once

namespace gmrfd {

/// Asymptotic per-node information, nats per node.
struct InfoRates {
  double kli = 0.0;
  double mi = 0.0;
};

/// Controls the tensor-product Gauss-Legendre integration of the rate
/// integrands over the frequency square.
struct QuadratureConfig {
  /// Minimum number of dyadically graded panels per axis on [0, pi]. More are
  /// added automatically as zeta approaches 1/4.
  int panels_per_axis = 8;
  int points_per_panel = 16;
  double target_tol = 1e-9;
  /// Integrate [0, pi]^2 and multiply by 4 (true) or the full square.
  bool fold_quadrants = true;
  /// Panel-halving refinements attempted before giving up.
  int max_refinements = 5;

  /// Throws DomainError on invalid settings.
  void validate() const;
};

/// s(w) = SNR / ((2/pi) K(4 zeta) (1 - 2 zeta cos w1 - 2 zeta cos w2)).
/// Its average over the frequency square is SNR. Throws DomainError for
/// zeta outside [0, 1/4) or snr < 0.
double snr_spectral_ratio(double zeta, double snr, double omega1, double omega2);

/// 1/2 log(1+s) + 1/2 (1/(1+s)) - 1/2, accurate for small s.
double kli_integrand(double s);

/// 1/2 log(1+s).
double mi_integrand(double s);

/// Both per-node rates from one quadrature pass. zeta = 1/4 yields zero
/// rates without integrating; snr = 0 yields exact zeros. Throws
/// ConvergenceError if refinement does not reach target_tol.
InfoRates info_rates(double zeta, double snr, const QuadratureConfig& q = {});

/// Per-node Kullback-Leibler information between noise-only and
/// signal-plus-noise observations.
double kli_rate(double zeta, double snr, const QuadratureConfig& q = {});

/// Per-node mutual information between field and observations.
double mi_rate(double zeta, double snr, const QuadratureConfig& q = {});

}  // namespace gmrfd
