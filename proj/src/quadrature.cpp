#include "gmrfd/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "gmrfd/errors.hpp"

namespace gmrfd {

namespace {

// P_n(x) and P_n'(x) by the three-term recurrence, n >= 1, |x| < 1.
std::pair<double, double> legendre_with_derivative(int n, double x) {
  double p0 = 1.0;
  double p1 = x;
  for (int k = 2; k <= n; ++k) {
    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  return {p1, n * (x * p1 - p0) / (x * x - 1.0)};
}

}  // namespace

AxisRule gauss_legendre(int order) {
  if (order < 1) throw DomainError("gauss_legendre: order must be positive");
  AxisRule rule;
  rule.nodes.assign(order, 0.0);
  rule.weights.assign(order, 0.0);
  if (order == 1) {
    rule.weights[0] = 2.0;
    return rule;
  }
  for (int i = 0; i < (order + 1) / 2; ++i) {
    // Tricomi's initial guess, then Newton.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    for (int iter = 0; iter < 100; ++iter) {
      const auto [p, dp] = legendre_with_derivative(order, x);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double dp = legendre_with_derivative(order, x).second;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.weights[i] = w;
    rule.nodes[order - 1 - i] = x;
    rule.weights[order - 1 - i] = w;
  }
  if (order % 2 == 1) rule.nodes[order / 2] = 0.0;
  return rule;
}

AxisRule composite_rule(std::span<const double> breakpoints, int points_per_panel) {
  if (breakpoints.size() < 2) {
    throw DomainError("composite_rule: need at least two breakpoints");
  }
  const AxisRule base = gauss_legendre(points_per_panel);
  AxisRule rule;
  const std::size_t panels = breakpoints.size() - 1;
  rule.nodes.reserve(panels * base.nodes.size());
  rule.weights.reserve(panels * base.nodes.size());
  for (std::size_t p = 0; p < panels; ++p) {
    const double a = breakpoints[p];
    const double b = breakpoints[p + 1];
    if (!(b > a)) throw DomainError("composite_rule: breakpoints must increase");
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    for (std::size_t i = 0; i < base.nodes.size(); ++i) {
      rule.nodes.push_back(mid + half * base.nodes[i]);
      rule.weights.push_back(half * base.weights[i]);
    }
  }
  return rule;
}

std::vector<double> dyadic_breakpoints(int levels, int split) {
  if (levels < 0 || split < 1) throw DomainError("dyadic_breakpoints: invalid grading");
  std::vector<double> coarse;
  coarse.reserve(levels + 2);
  coarse.push_back(0.0);
  for (int j = levels; j >= 0; --j) coarse.push_back(std::ldexp(std::numbers::pi, -j));

  std::vector<double> out;
  out.reserve((coarse.size() - 1) * split + 1);
  out.push_back(0.0);
  for (std::size_t p = 0; p + 1 < coarse.size(); ++p) {
    const double a = coarse[p];
    const double b = coarse[p + 1];
    for (int s = 1; s < split; ++s) out.push_back(a + (b - a) * s / split);
    out.push_back(b);
  }
  return out;
}

}  // namespace gmrfd
