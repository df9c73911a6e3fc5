#pragma once

namespace gmrfd {

/// Complete elliptic integral of the first kind in the modulus convention,
///   K(k) = int_0^{pi/2} (1 - k^2 sin^2 t)^{-1/2} dt,  0 <= k < 1,
/// evaluated with the arithmetic-geometric mean. Throws DomainError outside
/// [0, 1).
double complete_elliptic_k(double k);

/// Modified Bessel function of the second kind, order one, for x > 0.
/// Underflows to 0 for x beyond roughly 745. Throws DomainError for x <= 0.
double bessel_k1(double x);

}  // namespace gmrfd
