#pragma once

#include <cstdint>

#include "gmrfd/info_rates.hpp"

namespace gmrfd {

/// (2n+1) x (2n+1) sensors on a square lattice covering [-L, L]^2 with the
/// fusion center at the origin.
class Deployment {
 public:
  /// Throws DomainError unless half_width > 0 and n >= 1.
  Deployment(double half_width, int n);

  double half_width() const noexcept { return half_width_; }
  int n() const noexcept { return n_; }
  std::int64_t node_count() const noexcept;
  /// d_n = L / n.
  double spacing() const noexcept;
  /// mu_n = (2n+1)^2 / (2L)^2.
  double density() const noexcept;

 private:
  double half_width_;
  int n_;
};

/// Energy budget and per-operation costs.
class EnergyModel {
 public:
  /// Throws DomainError unless total > 0, e0 >= 0, nu >= 2, beta > 0.
  EnergyModel(double total, double e0, double nu, double beta);

  double total() const noexcept { return total_; }
  double e0() const noexcept { return e0_; }
  double nu() const noexcept { return nu_; }
  double beta() const noexcept { return beta_; }

 private:
  double total_;
  double e0_;
  double nu_;
  double beta_;
};

/// E0 d^nu.
double comm_energy_per_edge(const EnergyModel& em, double spacing);

/// Sum of |i| + |j| over the (2n+1)^2 lattice = 2n(n+1)(2n+1).
std::int64_t hop_count_sum(int n);

/// hop_count_sum(n) * comm_energy_per_edge(d_n).
double total_comm_energy(const EnergyModel& em, const Deployment& dep);

/// Budget-saturating uniform sensing energy per node. Throws
/// InfeasibleDensityError when nothing is left for sensing.
double sensing_energy_per_node(const EnergyModel& em, const Deployment& dep);

/// SNR = beta E_s.
double node_snr(const EnergyModel& em, double sensing_energy);

struct TotalInformation {
  double kli = 0.0;
  double mi = 0.0;
};

/// (2n+1)^2 times each per-node rate.
TotalInformation total_information(const Deployment& dep, const InfoRates& rates);

}  // namespace gmrfd
