#pragma once

#include <span>
#include <vector>

namespace gmrfd {

/// Nodes and weights of a composite one-dimensional rule.
struct AxisRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Legendre rule of the given order on [-1, 1].
AxisRule gauss_legendre(int order);

/// Composite Gauss-Legendre rule over [lo, hi] with the given breakpoints
/// (ascending, including both ends).
AxisRule composite_rule(std::span<const double> breakpoints, int points_per_panel);

/// Breakpoints on [0, pi] graded dyadically toward 0:
///   0, pi 2^-levels, ..., pi/4, pi/2, pi,
/// with each of the resulting (levels + 1) panels split into `split` equal
/// sub-panels.
std::vector<double> dyadic_breakpoints(int levels, int split);

}  // namespace gmrfd
