#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "gmrfd/correlation_map.hpp"
#include "gmrfd/info_rates.hpp"
#include "gmrfd/network_model.hpp"

namespace gmrfd {

enum class Objective { kli, mi };

std::string_view to_string(Objective objective) noexcept;
/// Accepts "kli" or "mi" (case-insensitive); throws DomainError otherwise.
Objective parse_objective(std::string_view text);

/// Upper bound applied to the automatic lattice-size limit.
inline constexpr int kDefaultNMaxCap = 500;

struct ScenarioConfig {
  double half_width = 1.0;
  EnergyModel energy;
  PhysicalEnvironment environment;
  int n_min = 1;
  int n_max = 1;
  Objective objective = Objective::kli;
  QuadratureConfig quadrature{};

  void validate() const;
};

/// One density candidate with every quantity in its evaluation chain.
/// Energy-dependent fields are empty when the candidate is infeasible.
struct SweepRow {
  int n = 0;
  double mu_n = 0.0;
  double d_n = 0.0;
  double rho = 0.0;
  double zeta = 0.0;
  std::optional<double> sensing_energy;
  std::optional<double> snr;
  std::optional<double> kli_rate;
  std::optional<double> mi_rate;
  std::optional<double> total_kli;
  std::optional<double> total_mi;
  bool feasible = false;

  /// Objective total, or nullopt when infeasible.
  std::optional<double> total(Objective objective) const;
};

/// First n whose communication energy exhausts the budget, capped at `cap`.
int default_n_max(double half_width, const EnergyModel& energy, int cap = kDefaultNMaxCap);

/// Evaluates geometry -> energy split -> SNR -> correlation -> rates ->
/// totals for lattice index n. Infeasibility is recorded in the row.
SweepRow evaluate_density(const ScenarioConfig& cfg, int n);

/// One row per n in [n_min, n_max], ascending.
std::vector<SweepRow> sweep(const ScenarioConfig& cfg);

/// Feasible row maximizing the objective total; ties go to the smaller n.
/// Throws NoFeasibleDensityError when no row is feasible.
SweepRow select_optimum(std::span<const SweepRow> rows, Objective objective);

/// select_optimum(sweep(cfg), cfg.objective).
SweepRow optimize(const ScenarioConfig& cfg);

}  // namespace gmrfd
