#include "gmrfd/info_rates.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "gmrfd/errors.hpp"
#include "gmrfd/quadrature.hpp"
#include "gmrfd/spectral_model.hpp"

namespace gmrfd {

namespace {

constexpr double kSmallRatio = 1e-3;
constexpr int kMaxGradingLevels = 60;

// Sample of one axis: weight and 2 sin^2(w/2) = 1 - cos w.
struct AxisSample {
  double weight;
  double versine;
};

void check_zeta_snr(double zeta, double snr, const char* who) {
  if (!(zeta >= 0.0 && zeta <= 0.25)) {
    throw DomainError(std::string(who) + ": zeta must lie in [0, 1/4], got " + std::to_string(zeta));
  }
  if (!(snr >= 0.0) || std::isinf(snr)) {
    throw DomainError(std::string(who) + ": snr must be finite and nonnegative, got " +
                      std::to_string(snr));
  }
}

// Dyadic levels so the innermost panel resolves the peak width
// sqrt((1 - 4 zeta) / zeta) around the origin.
int grading_levels(double zeta, int panels_per_axis) {
  int levels = panels_per_axis - 1;
  if (zeta > 0.0) {
    const double width = std::sqrt((1.0 - 4.0 * zeta) / zeta);
    if (width > 0.0) {
      const double needed = std::ceil(std::log2(4.0 * std::numbers::pi / width));
      if (needed > levels) levels = static_cast<int>(std::min<double>(needed, kMaxGradingLevels));
    } else {
      levels = kMaxGradingLevels;
    }
  }
  return levels;
}

std::vector<AxisSample> axis_samples(int levels, int split, int points, bool full_square) {
  const std::vector<double> breaks = dyadic_breakpoints(levels, split);
  const AxisRule rule = composite_rule(breaks, points);
  std::vector<AxisSample> out;
  out.reserve(rule.nodes.size() * (full_square ? 2 : 1));
  auto sample = [](double w, double omega) {
    const double s = std::sin(0.5 * omega);
    return AxisSample{w, 2.0 * s * s};
  };
  if (full_square) {
    for (std::size_t i = rule.nodes.size(); i-- > 0;) {
      out.push_back(sample(rule.weights[i], -rule.nodes[i]));
    }
  }
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    out.push_back(sample(rule.weights[i], rule.nodes[i]));
  }
  return out;
}

InfoRates integrate(double zeta, double snr, double norm, std::span<const AxisSample> axis,
                    double scale) {
  const double gap = 1.0 - 4.0 * zeta;
  const double two_zeta = 2.0 * zeta;
  const double snr_over_norm = snr / norm;
  double kli = 0.0;
  double mi = 0.0;
  for (const AxisSample& a : axis) {
    double row_kli = 0.0;
    double row_mi = 0.0;
    for (const AxisSample& b : axis) {
      const double s = snr_over_norm / (gap + two_zeta * (a.versine + b.versine));
      row_kli += b.weight * kli_integrand(s);
      row_mi += b.weight * mi_integrand(s);
    }
    kli += a.weight * row_kli;
    mi += a.weight * row_mi;
  }
  return {kli * scale, mi * scale};
}

bool agrees(double current, double previous, double tol) {
  return std::abs(current - previous) <= tol * std::abs(current);
}

}  // namespace

void QuadratureConfig::validate() const {
  if (panels_per_axis < 1) throw DomainError("QuadratureConfig: panels_per_axis must be >= 1");
  if (points_per_panel < 2) throw DomainError("QuadratureConfig: points_per_panel must be >= 2");
  if (!(target_tol > 0.0)) throw DomainError("QuadratureConfig: target_tol must be positive");
  if (max_refinements < 1) throw DomainError("QuadratureConfig: max_refinements must be >= 1");
}

double snr_spectral_ratio(double zeta, double snr, double omega1, double omega2) {
  check_zeta_snr(zeta, snr, "snr_spectral_ratio");
  if (zeta == 0.25) throw DomainError("snr_spectral_ratio: zeta must be below 1/4");
  const double s1 = std::sin(0.5 * omega1);
  const double s2 = std::sin(0.5 * omega2);
  // 1 - 2z cos w1 - 2z cos w2 written without cancellation near the origin.
  const double denom = (1.0 - 4.0 * zeta) + 4.0 * zeta * (s1 * s1 + s2 * s2);
  return snr / (normalized_signal_power(zeta) * denom);
}

double kli_integrand(double s) {
  if (s < kSmallRatio) {
    // 1/2 [log(1+s) - s/(1+s)] = 1/2 sum_{k>=2} (-1)^k (k-1)/k s^k
    double term = s * s;
    double sum = 0.0;
    for (int k = 2; k <= 9; ++k) {
      const double c = static_cast<double>(k - 1) / k;
      sum += (k % 2 == 0 ? c : -c) * term;
      term *= s;
    }
    return 0.5 * sum;
  }
  return 0.5 * (std::log1p(s) - s / (1.0 + s));
}

double mi_integrand(double s) { return 0.5 * std::log1p(s); }

InfoRates info_rates(double zeta, double snr, const QuadratureConfig& q) {
  check_zeta_snr(zeta, snr, "info_rates");
  q.validate();
  if (snr == 0.0 || zeta == 0.25) return {};
  // Flat spectrum: the integrand is constant.
  if (zeta == 0.0) return {kli_integrand(snr), mi_integrand(snr)};

  const double norm = normalized_signal_power(zeta);
  // Quarter square carries 1/4 of the mass; the average divides by 4 pi^2.
  const double scale = q.fold_quadrants ? 1.0 / (std::numbers::pi * std::numbers::pi)
                                        : 1.0 / (4.0 * std::numbers::pi * std::numbers::pi);
  const int levels = grading_levels(zeta, q.panels_per_axis);

  InfoRates previous{};
  for (int refinement = 0; refinement <= q.max_refinements; ++refinement) {
    const auto axis =
        axis_samples(levels, 1 << refinement, q.points_per_panel, !q.fold_quadrants);
    const InfoRates current = integrate(zeta, snr, norm, axis, scale);
    if (refinement > 0 && agrees(current.kli, previous.kli, q.target_tol) &&
        agrees(current.mi, previous.mi, q.target_tol)) {
      return current;
    }
    previous = current;
  }
  throw ConvergenceError("info_rates: quadrature did not reach tolerance " +
                         std::to_string(q.target_tol) + " at zeta = " + std::to_string(zeta) +
                         ", snr = " + std::to_string(snr));
}

double kli_rate(double zeta, double snr, const QuadratureConfig& q) {
  return info_rates(zeta, snr, q).kli;
}

double mi_rate(double zeta, double snr, const QuadratureConfig& q) {
  return info_rates(zeta, snr, q).mi;
}

}  // namespace gmrfd
