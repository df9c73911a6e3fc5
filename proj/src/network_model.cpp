#include "gmrfd/network_model.hpp"

#include <cmath>
#include <string>

#include "gmrfd/errors.hpp"

namespace gmrfd {

Deployment::Deployment(double half_width, int n) : half_width_(half_width), n_(n) {
  if (!(half_width > 0.0) || std::isinf(half_width)) {
    throw DomainError("Deployment: half width must be positive, got " + std::to_string(half_width));
  }
  if (n < 1) throw DomainError("Deployment: lattice index must be >= 1, got " + std::to_string(n));
}

std::int64_t Deployment::node_count() const noexcept {
  const std::int64_t side = 2 * static_cast<std::int64_t>(n_) + 1;
  return side * side;
}

double Deployment::spacing() const noexcept { return half_width_ / n_; }

double Deployment::density() const noexcept {
  const double side = 2.0 * half_width_;
  return static_cast<double>(node_count()) / (side * side);
}

EnergyModel::EnergyModel(double total, double e0, double nu, double beta)
    : total_(total), e0_(e0), nu_(nu), beta_(beta) {
  if (!(total > 0.0) || std::isinf(total)) {
    throw DomainError("EnergyModel: total energy must be positive, got " + std::to_string(total));
  }
  if (!(e0 >= 0.0) || std::isinf(e0)) {
    throw DomainError("EnergyModel: E0 must be nonnegative, got " + std::to_string(e0));
  }
  if (!(nu >= 2.0) || std::isinf(nu)) {
    throw DomainError("EnergyModel: attenuation exponent must be >= 2, got " + std::to_string(nu));
  }
  if (!(beta > 0.0) || std::isinf(beta)) {
    throw DomainError("EnergyModel: beta must be positive, got " + std::to_string(beta));
  }
}

double comm_energy_per_edge(const EnergyModel& em, double spacing) {
  if (!(spacing > 0.0)) {
    throw DomainError("comm_energy_per_edge: spacing must be positive, got " + std::to_string(spacing));
  }
  return em.e0() * std::pow(spacing, em.nu());
}

std::int64_t hop_count_sum(int n) {
  if (n < 0) throw DomainError("hop_count_sum: n must be nonnegative");
  const std::int64_t m = n;
  return 2 * m * (m + 1) * (2 * m + 1);
}

double total_comm_energy(const EnergyModel& em, const Deployment& dep) {
  return static_cast<double>(hop_count_sum(dep.n())) * comm_energy_per_edge(em, dep.spacing());
}

double sensing_energy_per_node(const EnergyModel& em, const Deployment& dep) {
  const double remaining = em.total() - total_comm_energy(em, dep);
  if (!(remaining > 0.0)) {
    throw InfeasibleDensityError("lattice index " + std::to_string(dep.n()) +
                                 " spends the whole energy budget on communication");
  }
  return remaining / static_cast<double>(dep.node_count());
}

double node_snr(const EnergyModel& em, double sensing_energy) {
  if (!(sensing_energy >= 0.0)) {
    throw DomainError("node_snr: sensing energy must be nonnegative");
  }
  return em.beta() * sensing_energy;
}

TotalInformation total_information(const Deployment& dep, const InfoRates& rates) {
  const double nodes = static_cast<double>(dep.node_count());
  return {nodes * rates.kli, nodes * rates.mi};
}

}  // namespace gmrfd
