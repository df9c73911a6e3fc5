#include "gmrfd/torus_oracle.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include <Eigen/Cholesky>
#include <Eigen/Core>

#include "gmrfd/errors.hpp"

namespace gmrfd {

namespace {

// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

std::vector<double> grid_frequencies(const TorusSpec& spec) {
  std::vector<double> w(spec.n_per_axis());
  for (int k = 0; k < spec.n_per_axis(); ++k) w[k] = spec.frequency(k);
  return w;
}

// Eigenvalues s_kl of the signal covariance, row-major over (k, l).
std::vector<double> torus_eigenvalues(double zeta, double snr, const TorusSpec& spec) {
  const int n = spec.n_per_axis();
  const std::vector<double> w = grid_frequencies(spec);
  std::vector<double> eig(static_cast<std::size_t>(n) * n);
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < n; ++l) eig[static_cast<std::size_t>(k) * n + l] = snr_spectral_ratio(zeta, snr, w[k], w[l]);
  }
  return eig;
}

}  // namespace

TorusSpec::TorusSpec(int n_per_axis, GridConvention grid) : n_(n_per_axis), grid_(grid) {
  if (n_per_axis < 2) {
    throw DomainError("TorusSpec: need at least 2 nodes per axis, got " + std::to_string(n_per_axis));
  }
}

double TorusSpec::frequency(int k) const noexcept {
  const int shifted = (grid_ == GridConvention::centered && 2 * k > n_) ? k - n_ : k;
  return 2.0 * std::numbers::pi * shifted / n_;
}

InfoRates torus_rates(double zeta, double snr, const TorusSpec& spec) {
  if (zeta == 0.0) {
    // Every eigenvalue equals snr.
    const double s = snr_spectral_ratio(0.0, snr, 0.0, 0.0);
    return {kli_integrand(s), mi_integrand(s)};
  }
  const std::vector<double> eig = torus_eigenvalues(zeta, snr, spec);
  CompensatedSum kli;
  CompensatedSum mi;
  for (const double s : eig) {
    kli.add(kli_integrand(s));
    mi.add(mi_integrand(s));
  }
  const double count = static_cast<double>(eig.size());
  return {kli.value() / count, mi.value() / count};
}

InfoRates dense_gaussian_rates(double zeta, double snr, const TorusSpec& spec) {
  const int n = spec.n_per_axis();
  if (n > kMaxDenseLattice) {
    throw SizeError("dense_gaussian_rates: N = " + std::to_string(n) + " exceeds " +
                    std::to_string(kMaxDenseLattice));
  }
  const std::vector<double> eig = torus_eigenvalues(zeta, snr, spec);
  const std::vector<double> w = grid_frequencies(spec);
  const int nodes = n * n;

  // Covariance at lag (u, v) by inverse 2-D DFT of the eigenvalues; the
  // spectrum is even, so only the cosine part survives.
  Eigen::MatrixXd lag(n, n);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      double acc = 0.0;
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          acc += eig[static_cast<std::size_t>(k) * n + l] * std::cos(w[k] * u + w[l] * v);
        }
      }
      lag(u, v) = acc / nodes;
    }
  }

  Eigen::MatrixXd cov(nodes, nodes);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        for (int d = 0; d < n; ++d) {
          const int du = ((a - c) % n + n) % n;
          const int dv = ((b - d) % n + n) % n;
          cov(a * n + b, c * n + d) = lag(du, dv);
        }
      }
    }
  }
  cov.diagonal().array() += 1.0;

  const Eigen::LLT<Eigen::MatrixXd> llt(cov);
  if (llt.info() != Eigen::Success) {
    throw ConvergenceError("dense_gaussian_rates: covariance is not positive definite");
  }
  const Eigen::MatrixXd lower = llt.matrixL();
  const double log_det = 2.0 * lower.diagonal().array().log().sum();
  const Eigen::MatrixXd lower_inv =
      lower.triangularView<Eigen::Lower>().solve(Eigen::MatrixXd::Identity(nodes, nodes));
  const double trace_inv = lower_inv.squaredNorm();

  const double per_node = 1.0 / (2.0 * nodes);
  return {per_node * (trace_inv - nodes + log_det), per_node * log_det};
}

}  // namespace gmrfd
