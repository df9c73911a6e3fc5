#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gmrfd/correlation_map.hpp"
#include "gmrfd/errors.hpp"
#include "gmrfd/info_rates.hpp"
#include "gmrfd/network_model.hpp"
#include "gmrfd/optimizer.hpp"
#include "gmrfd/table.hpp"
#include "gmrfd/torus_oracle.hpp"

namespace gmrfd::cli {

namespace {

using nlohmann::json;

/// Bad user input; reported with exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Paper scenario used when neither a flag nor the config file sets a value.
constexpr double kDefaultHalfWidth = 1.0;
constexpr double kDefaultEnergy = 50.0;
constexpr double kDefaultAlpha = 100.0;
constexpr double kDefaultBeta = 1.0;
constexpr double kDefaultE0 = 0.1;
constexpr double kDefaultNu = 2.0;
constexpr double kValidateTol = 1e-12;

const std::vector<int> kDefaultValidateSizes = {64, 256, 1024};

const std::vector<std::string> kSweepColumns = {
    "n",       "mu_n",    "d_n",       "rho",      "zeta",     "E_s",
    "snr",     "kli_rate", "mi_rate",  "total_kli", "total_mi", "feasible"};

struct Flags {
  std::string format;
  std::string output;
  std::string config;
  std::optional<double> zeta, snr_db, alpha, spacing;
  std::optional<double> half_width, energy, beta, e0, nu, mu_min, mu_max;
  std::optional<int> n_min, n_max;
  std::optional<std::string> objective;
  std::vector<int> sizes;
};

// Flag value if given, else config-file value, else nullopt.
template <typename T>
std::optional<T> resolve(const std::optional<T>& flag, const json& config, const char* key) {
  if (flag) return flag;
  if (config.contains(key) && !config[key].is_null()) {
    try {
      return config[key].get<T>();
    } catch (const json::exception&) {
      throw InputError(std::string("config key '") + key + "' has the wrong type");
    }
  }
  return std::nullopt;
}

template <typename T>
T require(const std::optional<T>& value, const char* name) {
  if (!value) throw InputError(std::string("missing required value --") + name);
  return *value;
}

json load_config(const std::string& path) {
  if (path.empty()) return json::object();
  std::ifstream in(path);
  if (!in) throw InputError("cannot open config file " + path);
  json config;
  try {
    in >> config;
  } catch (const json::exception& e) {
    throw InputError("config file " + path + " is not valid JSON: " + e.what());
  }
  if (!config.is_object()) throw InputError("config file must hold a JSON object");
  return config;
}

void emit(const Table& table, const std::string& format, const std::string& output,
          std::ostream& out) {
  std::ofstream file;
  std::ostream* dest = &out;
  if (!output.empty()) {
    file.open(output);
    if (!file) throw InputError("cannot open output file " + output);
    dest = &file;
  }
  if (format == "json") {
    table.write_json(*dest);
  } else {
    table.write_csv(*dest);
  }
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

std::vector<Cell> sweep_cells(const SweepRow& row) {
  return {static_cast<std::int64_t>(row.n),
          row.mu_n,
          row.d_n,
          row.rho,
          row.zeta,
          optional_cell(row.sensing_energy),
          optional_cell(row.snr),
          optional_cell(row.kli_rate),
          optional_cell(row.mi_rate),
          optional_cell(row.total_kli),
          optional_cell(row.total_mi),
          row.feasible};
}

// Lattice index whose density is mu: (2n+1)^2 = mu (2L)^2.
double lattice_index_for_density(double mu, double half_width) {
  if (!(mu > 0.0)) throw InputError("density bounds must be positive");
  return (2.0 * half_width * std::sqrt(mu) - 1.0) / 2.0;
}

ScenarioConfig scenario_from(const Flags& f, const json& config) {
  const double half_width =
      resolve(f.half_width, config, "L").value_or(kDefaultHalfWidth);
  const EnergyModel energy(resolve(f.energy, config, "E").value_or(kDefaultEnergy),
                           resolve(f.e0, config, "E0").value_or(kDefaultE0),
                           resolve(f.nu, config, "nu").value_or(kDefaultNu),
                           resolve(f.beta, config, "beta").value_or(kDefaultBeta));
  const PhysicalEnvironment env(resolve(f.alpha, config, "alpha").value_or(kDefaultAlpha));
  if (!(half_width > 0.0)) throw InputError("--L must be positive");

  const auto n_min = resolve(f.n_min, config, "n_min");
  const auto n_max = resolve(f.n_max, config, "n_max");
  const auto mu_min = resolve(f.mu_min, config, "mu_min");
  const auto mu_max = resolve(f.mu_max, config, "mu_max");
  if (n_min && mu_min) throw InputError("give either --n-min or --mu-min, not both");
  if (n_max && mu_max) throw InputError("give either --n-max or --mu-max, not both");

  // Density bounds round inward to lattice indices.
  int lo = 1;
  if (n_min) lo = *n_min;
  if (mu_min) lo = std::max(1, static_cast<int>(std::ceil(lattice_index_for_density(*mu_min, half_width))));
  int hi = std::max(lo, default_n_max(half_width, energy));
  if (n_max) hi = *n_max;
  if (mu_max) hi = static_cast<int>(std::floor(lattice_index_for_density(*mu_max, half_width)));
  if (lo < 1) throw InputError("--n-min must be >= 1");
  if (hi < lo) throw InputError("empty lattice range: n_max < n_min");

  const Objective objective = parse_objective(resolve(f.objective, config, "objective").value_or("kli"));
  ScenarioConfig cfg{.half_width = half_width,
                     .energy = energy,
                     .environment = env,
                     .n_min = lo,
                     .n_max = hi,
                     .objective = objective};
  cfg.validate();
  return cfg;
}

Table cmd_rates(const Flags& f, const json& config) {
  const double zeta = require(resolve(f.zeta, config, "zeta"), "zeta");
  const double snr_db = require(resolve(f.snr_db, config, "snr_db"), "snr-db");
  const double snr = db_to_linear(snr_db);
  const InfoRates r = info_rates(zeta, snr);
  Table t({"zeta", "snr_db", "snr_linear", "kli_rate", "mi_rate"});
  t.add_row({zeta, snr_db, snr, r.kli, r.mi});
  return t;
}

Table cmd_map(const Flags& f, const json& config) {
  const PhysicalEnvironment env(require(resolve(f.alpha, config, "alpha"), "alpha"));
  const double spacing = require(resolve(f.spacing, config, "spacing"), "spacing");
  const EdgeCorrelation rho = edge_correlation(env, spacing);
  Table t({"alpha", "spacing", "rho", "zeta"});
  t.add_row({env.alpha(), spacing, rho.value(), zeta_of_rho(rho)});
  return t;
}

Table cmd_sweep(const Flags& f, const json& config) {
  const std::vector<SweepRow> rows = sweep(scenario_from(f, config));
  Table t(kSweepColumns);
  const bool any_feasible =
      std::any_of(rows.begin(), rows.end(), [](const SweepRow& r) { return r.feasible; });
  if (any_feasible) {
    for (const SweepRow& row : rows) t.add_row(sweep_cells(row));
  }
  return t;
}

Table cmd_optimize(const Flags& f, const json& config) {
  const ScenarioConfig cfg = scenario_from(f, config);
  const SweepRow best = optimize(cfg);
  std::vector<std::string> columns = {"objective"};
  columns.insert(columns.end(), kSweepColumns.begin(), kSweepColumns.end());
  Table t(std::move(columns));
  std::vector<Cell> cells = {std::string(to_string(cfg.objective))};
  for (Cell& c : sweep_cells(best)) cells.push_back(std::move(c));
  t.add_row(std::move(cells));
  return t;
}

Table cmd_validate(const Flags& f, const json& config) {
  const double zeta = require(resolve(f.zeta, config, "zeta"), "zeta");
  const double snr = db_to_linear(require(resolve(f.snr_db, config, "snr_db"), "snr-db"));
  std::vector<int> sizes = f.sizes;
  if (sizes.empty()) sizes = resolve(std::optional<std::vector<int>>{}, config, "N").value_or(kDefaultValidateSizes);

  QuadratureConfig q;
  q.target_tol = kValidateTol;
  const InfoRates quad = info_rates(zeta, snr, q);
  Table t({"N", "kli_torus", "mi_torus", "kli_quad", "mi_quad", "abs_gap_kli", "abs_gap_mi"});
  for (const int n : sizes) {
    const InfoRates torus = torus_rates(zeta, snr, TorusSpec(n));
    t.add_row({static_cast<std::int64_t>(n), torus.kli, torus.mi, quad.kli, quad.mi,
               std::abs(torus.kli - quad.kli), std::abs(torus.mi - quad.mi)});
  }
  return t;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Information rates and optimal sensor density for 2-D Gauss-Markov fields"};
  app.require_subcommand(1);
  app.fallthrough();

  Flags f;
  auto* format_opt = app.add_option("--format", f.format, "Output format")
                         ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--output", f.output, "Write the table to this file instead of stdout");
  app.add_option("--config", f.config, "JSON file with option values; flags override it");

  auto* rates = app.add_subcommand("rates", "Per-node KLI and MI rates for (zeta, SNR)");
  rates->add_option("--zeta", f.zeta, "Edge dependence factor in [0, 1/4]");
  rates->add_option("--snr-db", f.snr_db, "Measurement SNR in dB");

  auto* map = app.add_subcommand("map", "Sensor spacing -> edge correlation -> zeta");
  map->add_option("--alpha", f.alpha, "Diffusion rate");
  map->add_option("--spacing", f.spacing, "Sensor spacing");

  auto add_scenario = [&f](CLI::App* sub) {
    sub->add_option("--L", f.half_width, "Half width of the square coverage area");
    sub->add_option("--E", f.energy, "Total energy budget");
    sub->add_option("--alpha", f.alpha, "Diffusion rate");
    sub->add_option("--beta", f.beta, "SNR per unit sensing energy");
    sub->add_option("--E0", f.e0, "Per-edge communication energy coefficient");
    sub->add_option("--nu", f.nu, "Path-loss exponent (>= 2)");
    sub->add_option("--n-min", f.n_min, "Smallest lattice index");
    sub->add_option("--n-max", f.n_max, "Largest lattice index");
    sub->add_option("--mu-min", f.mu_min, "Smallest density (rounded inward to a lattice index)");
    sub->add_option("--mu-max", f.mu_max, "Largest density (rounded inward to a lattice index)");
    sub->add_option("--objective", f.objective, "kli or mi");
  };
  auto* sweep_cmd = app.add_subcommand("sweep", "Evaluate every lattice size in range");
  add_scenario(sweep_cmd);
  auto* optimize_cmd = app.add_subcommand("optimize", "Information-maximizing lattice size");
  add_scenario(optimize_cmd);

  auto* validate = app.add_subcommand("validate", "Compare torus rates with the quadrature");
  validate->add_option("--zeta", f.zeta, "Edge dependence factor in [0, 1/4)");
  validate->add_option("--snr-db", f.snr_db, "Measurement SNR in dB");
  validate->add_option("--N", f.sizes, "Torus sizes")->delimiter(',');

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }

  try {
    const json config = load_config(f.config);
    std::string format = f.format;
    if (format_opt->count() == 0) {
      format = resolve(std::optional<std::string>{}, config, "format").value_or("csv");
    }
    if (format != "csv" && format != "json") throw InputError("unknown format '" + format + "'");
    std::string output = f.output;
    if (output.empty()) output = resolve(std::optional<std::string>{}, config, "output").value_or("");

    std::optional<Table> table;
    if (rates->parsed()) table = cmd_rates(f, config);
    if (map->parsed()) table = cmd_map(f, config);
    if (sweep_cmd->parsed()) table = cmd_sweep(f, config);
    if (optimize_cmd->parsed()) table = cmd_optimize(f, config);
    if (validate->parsed()) table = cmd_validate(f, config);
    emit(*table, format, output, out);
    return kExitOk;
  } catch (const NoFeasibleDensityError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNoFeasible;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace gmrfd::cli
