#include "gmrfd/optimizer.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "gmrfd/errors.hpp"

namespace gmrfd {

std::string_view to_string(Objective objective) noexcept {
  return objective == Objective::kli ? "kli" : "mi";
}

Objective parse_objective(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "kli") return Objective::kli;
  if (lower == "mi") return Objective::mi;
  throw DomainError("unknown objective '" + std::string(text) + "' (expected kli or mi)");
}

void ScenarioConfig::validate() const {
  if (!(half_width > 0.0)) throw DomainError("scenario: half width must be positive");
  if (n_min < 1) throw DomainError("scenario: n_min must be >= 1");
  if (n_max < n_min) throw DomainError("scenario: n_max must be >= n_min");
  quadrature.validate();
}

std::optional<double> SweepRow::total(Objective objective) const {
  return objective == Objective::kli ? total_kli : total_mi;
}

int default_n_max(double half_width, const EnergyModel& energy, int cap) {
  for (int n = 1; n < cap; ++n) {
    if (total_comm_energy(energy, Deployment(half_width, n)) >= energy.total()) return n;
  }
  return cap;
}

SweepRow evaluate_density(const ScenarioConfig& cfg, int n) {
  cfg.validate();
  if (n < cfg.n_min || n > cfg.n_max) {
    throw DomainError("evaluate_density: n = " + std::to_string(n) + " outside [" +
                      std::to_string(cfg.n_min) + ", " + std::to_string(cfg.n_max) + "]");
  }
  const Deployment dep(cfg.half_width, n);
  SweepRow row;
  row.n = n;
  row.mu_n = dep.density();
  row.d_n = dep.spacing();
  const EdgeCorrelation rho = edge_correlation(cfg.environment, row.d_n);
  row.rho = rho.value();
  row.zeta = zeta_of_rho(rho);

  if (total_comm_energy(cfg.energy, dep) >= cfg.energy.total()) return row;

  const double es = sensing_energy_per_node(cfg.energy, dep);
  const double snr = node_snr(cfg.energy, es);
  const InfoRates rates = info_rates(row.zeta, snr, cfg.quadrature);
  const TotalInformation totals = total_information(dep, rates);
  row.sensing_energy = es;
  row.snr = snr;
  row.kli_rate = rates.kli;
  row.mi_rate = rates.mi;
  row.total_kli = totals.kli;
  row.total_mi = totals.mi;
  row.feasible = true;
  return row;
}

std::vector<SweepRow> sweep(const ScenarioConfig& cfg) {
  cfg.validate();
  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(cfg.n_max - cfg.n_min + 1));
  for (int n = cfg.n_min; n <= cfg.n_max; ++n) rows.push_back(evaluate_density(cfg, n));
  return rows;
}

SweepRow select_optimum(std::span<const SweepRow> rows, Objective objective) {
  const SweepRow* best = nullptr;
  for (const SweepRow& row : rows) {
    const auto value = row.total(objective);
    if (!row.feasible || !value) continue;
    if (best == nullptr || *value > *best->total(objective) ||
        (*value == *best->total(objective) && row.n < best->n)) {
      best = &row;
    }
  }
  if (best == nullptr) throw NoFeasibleDensityError("no feasible density in the candidate range");
  return *best;
}

SweepRow optimize(const ScenarioConfig& cfg) {
  const std::vector<SweepRow> rows = sweep(cfg);
  return select_optimum(rows, cfg.objective);
}

}  // namespace gmrfd
