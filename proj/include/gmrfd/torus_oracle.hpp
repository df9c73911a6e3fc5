#pragma once

#include "gmrfd/info_rates.hpp"

namespace gmrfd {

/// Frequency grid used on the N x N torus.
enum class GridConvention {
  zero_based,  ///< w_k = 2 pi k / N, k = 0..N-1
  centered,    ///< w_k mapped into (-pi, pi]
};

/// Periodic N x N lattice whose covariance is block circulant.
class TorusSpec {
 public:
  explicit TorusSpec(int n_per_axis, GridConvention grid = GridConvention::zero_based);

  int n_per_axis() const noexcept { return n_; }
  GridConvention grid() const noexcept { return grid_; }

  /// Frequency of grid index k under this convention.
  double frequency(int k) const noexcept;

 private:
  int n_;
  GridConvention grid_;
};

/// Exact per-node rates on the torus with unit noise variance, summed over
/// the DFT eigenvalues s_kl = snr_spectral_ratio(zeta, snr, w_k, w_l).
InfoRates torus_rates(double zeta, double snr, const TorusSpec& spec);

/// Largest lattice the dense route accepts.
inline constexpr int kMaxDenseLattice = 12;

/// Same quantity from first principles: builds the N^2 x N^2 circulant signal
/// covariance, then evaluates the Gaussian KL divergence and mutual
/// information through a Cholesky factorization of Sigma_X + I. Throws
/// SizeError for N > 12.
InfoRates dense_gaussian_rates(double zeta, double snr, const TorusSpec& spec);

}  // namespace gmrfd
