#pragma once

namespace gmrfd {

/// Diffusion rate of the continuous field (inverse length).
class PhysicalEnvironment {
 public:
  explicit PhysicalEnvironment(double alpha);
  double alpha() const noexcept { return alpha_; }

 private:
  double alpha_;
};

/// Normalized covariance between axially adjacent lattice samples, in [0, 1].
class EdgeCorrelation {
 public:
  explicit EdgeCorrelation(double rho);
  double value() const noexcept { return rho_; }

 private:
  double rho_;
};

/// rho = alpha d K1(alpha d) for sensor spacing d > 0.
EdgeCorrelation edge_correlation(const PhysicalEnvironment& env, double spacing);

/// Edge correlation of the SFCAR field with dependence factor zeta,
///   rho = ((2/pi)K(4 zeta) - 1) / (4 zeta (2/pi) K(4 zeta)),
/// extended continuously by rho(0) = 0 and rho(1/4) = 1.
EdgeCorrelation rho_of_zeta(double zeta);

/// Inverse of rho_of_zeta by bisection on [0, 1/4].
///
/// rho_of_zeta approaches 1 only logarithmically, so correlations above
/// rho_of_zeta(nextafter(0.25, 0)) ~ 0.92 have no double-precision preimage
/// below 1/4. Those map to whichever of the two top representable values
/// reproduces rho more closely.
double zeta_of_rho(EdgeCorrelation rho);

/// zeta_of_rho(edge_correlation(env, spacing)).
double zeta_of_spacing(const PhysicalEnvironment& env, double spacing);

}  // namespace gmrfd
