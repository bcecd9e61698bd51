#pragma once

// Scenario packages (conservative / baseline / aggressive), the assumptions
// that turn a package into a full model configuration, named reference
// configurations and the climate-band parameterization.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wtecool/core_model.hpp"
#include "wtecool/economics.hpp"

namespace wtecool {

enum class PackageKind { conservative, baseline, aggressive, custom };

/// One scenario column in its natural units (t/day, MJ/kg, degC, W/m, MW_th,
/// kWh_e/MWh_th, currency/kWh, currency/m). Fractions are stored as fractions,
/// not percent.
struct ScenarioPackage {
  std::string name = "custom";
  PackageKind kind = PackageKind::custom;
  double lhv = 0.0;            // MJ/kg
  double throughput = 0.0;     // t/day
  double eta_th_export = 0.0;  // exportable heat / chemical input
  double t_drive = 0.0;        // degC, metadata for the COP band
  double cop_abs = 0.0;
  double t_cw = 0.0;           // degC cooling-water sink
  double q_pipe_loss = 0.0;    // W/m
  double q_trunk = 0.0;        // MW_th
  double beta = 0.0;           // 1/km
  double e_pump = 0.0;         // kWh_e/MWh_th
  double alpha_aux = 0.0;      // fraction of Q_cool
  double pue_base = 1.0;
  double p_e = 0.0;            // currency/kWh
  double r = 0.0;              // real discount rate
  double c_pipe = 0.0;         // currency/m

  // Reference steam conditions, documentation only.
  double steam_bar = 40.0;
  double steam_celsius = 400.0;
};

/// Table row metadata: key, owning group, member and the three column values.
struct PackageRow {
  std::string_view key;
  std::string_view group;
  std::string_view unit;
  double ScenarioPackage::*member;
  double conservative;
  double baseline;
  double aggressive;
};

std::span<const PackageRow> package_rows();

/// beta ~= q_l [W/m] * 1000 [m/km] / (Q_trunk [MW] * 1e6 [W/MW]), 1/km.
/// Throws InvalidParameter for q_trunk <= 0.
double beta_from_pipe_loss(double q_pipe_loss_w_per_m, double q_trunk_mw);

/// conservative | baseline | aggressive. Throws UnknownName otherwise.
ScenarioPackage builtin_package(std::string_view name);
std::vector<std::string> builtin_package_names();

/// Throws InvalidParameter on physically invalid values and, for non-custom
/// packages, on values outside the conservative-aggressive envelope.
/// Returns advisory warnings.
std::vector<std::string> validate_package(const ScenarioPackage& package);

/// Everything the package does not pin down. Empty optionals are derived
/// during resolve():
///   alpha_h     = eta_th_export / (eta_c (1 - eta_e))
///   gamma       = (pue_base - 1 - W_aux/W_IT) COP_m
///   w_aux       = aux_fraction W_IT
///   kappa0      = (e_pump + alpha_aux COP_abs) Q_h
///   t0          = t_cw in kelvin
///   w_cool_base = cool_share W_IT
struct ModelAssumptions {
  double eta_c = 0.9;
  double eta_e = 0.25;
  std::optional<double> alpha_h;
  double length_km = 0.0;
  std::optional<double> kappa0;
  double kappa1 = 0.0;
  double kappa2 = 0.0;
  double p_it_max = 40.0;
  double rho = 1.0;
  double aux_fraction = 0.08;
  std::optional<double> w_aux;
  std::optional<double> gamma;
  double cop_m = 5.0;
  double cop_e = 5.0;
  std::optional<double> t0_k;
  double tc_k = 280.15;
  double cool_share = 0.2;
  std::optional<double> w_cool_base;
};

struct ScenarioSpec {
  ScenarioPackage package;
  ModelAssumptions assumptions;
};

/// Built-in packages plus the named reference configurations
/// "representative", "pue-reference" and "distance-reference".
ScenarioSpec named_scenario(std::string_view name);
std::vector<std::string> named_scenario_names();

struct ResolvedScenario {
  ScenarioPackage package;
  ModelAssumptions assumptions;
  SystemConfig system;
  ScreeningInputs screening;
  std::vector<std::string> warnings;
};

/// Builds validated model objects; invalid values surface as InvalidParameter
/// naming the field.
ResolvedScenario resolve(const ScenarioSpec& spec);

struct RepresentativeConfig {
  ScreeningInputs screening;
  DataCenter dc;
};

/// Mid-point plant (1500 t/day, 10 MJ/kg, 45% export) feeding a 40 MW campus.
RepresentativeConfig representative_config();

/// Reference set with W_aux/W_IT = 0.02, W_par/W_IT = 0.01, gamma = 1.35,
/// COP_m = 5 and full coverage at every utilization: PUE 1.29 standalone,
/// 1.03 coupled. A calibration, not published ground truth.
SystemConfig pue_reference_config();

/// Reference set whose coverage ratio and exergy ratio at L = 0 are 1.110 and
/// 1.286 with beta = 0.005 /km (thresholds near 20.9 km and 50.3 km).
SystemConfig distance_reference_config();

/// Linear climate response around a reference wet-bulb temperature.
class ClimateBand {
 public:
  ClimateBand(double t_wb_ref, double gamma0, double gamma1, double c0, double c1,
              double t_wb_min, double t_wb_max);

  double t_wb_ref() const noexcept { return t_wb_ref_; }
  double gamma0() const noexcept { return gamma0_; }
  double gamma1() const noexcept { return gamma1_; }
  double c0() const noexcept { return c0_; }
  double c1() const noexcept { return c1_; }
  double t_wb_min() const noexcept { return t_wb_min_; }
  double t_wb_max() const noexcept { return t_wb_max_; }

 private:
  double t_wb_ref_;
  double gamma0_;
  double gamma1_;
  double c0_;
  double c1_;
  double t_wb_min_;
  double t_wb_max_;
};

struct ClimateResponse {
  double gamma = 0.0;
  double cop_m = 0.0;
};

/// gamma = gamma0 + gamma1 (T - Tref); COP_m = c0 - c1 (T - Tref).
/// Throws InvalidParameter outside [t_wb_min, t_wb_max].
ClimateResponse climate_eval(const ClimateBand& band, double t_wb);

/// Illustrative coefficients (gamma0 1.2, gamma1 0.02, c0 5, c1 0.08 around
/// 20 degC, valid 0-35 degC). Not tied to a published band.
ClimateBand default_climate_band();

}  // namespace wtecool
