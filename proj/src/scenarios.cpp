#include "wtecool/scenarios.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>

#include "wtecool/errors.hpp"
#include "wtecool/metrics.hpp"
#include "wtecool/units.hpp"

namespace wtecool {

namespace {

using P = ScenarioPackage;

// Conservative / baseline / aggressive columns.
constexpr std::array<PackageRow, 15> kRows{{
    {"lhv", "plant", "MJ/kg", &P::lhv, 8.0, 10.0, 12.0},
    {"throughput", "plant", "t/day", &P::throughput, 500.0, 1500.0, 3000.0},
    {"eta_th_export", "plant", "-", &P::eta_th_export, 0.30, 0.45, 0.60},
    {"t_drive", "link", "degC", &P::t_drive, 80.0, 90.0, 110.0},
    {"cop_abs", "link", "-", &P::cop_abs, 0.65, 0.75, 0.85},
    {"t_cw", "link", "degC", &P::t_cw, 30.0, 27.0, 24.0},
    {"q_pipe_loss", "corridor", "W/m", &P::q_pipe_loss, 40.0, 25.0, 10.0},
    {"q_trunk", "corridor", "MW_th", &P::q_trunk, 2.0, 5.0, 10.0},
    {"beta", "corridor", "1/km", &P::beta, 0.020, 0.005, 0.001},
    {"e_pump", "screening", "kWh_e/MWh_th", &P::e_pump, 10.0, 6.0, 2.0},
    {"alpha_aux", "screening", "-", &P::alpha_aux, 0.06, 0.04, 0.02},
    {"pue_base", "dc", "-", &P::pue_base, 1.50, 1.35, 1.20},
    {"p_e", "econ", "currency/kWh", &P::p_e, 0.06, 0.12, 0.18},
    {"r", "econ", "-", &P::r, 0.10, 0.07, 0.05},
    {"c_pipe", "econ", "currency/m", &P::c_pipe, 1200.0, 750.0, 500.0},
}};

constexpr double kCoverageRatioReference = 1.110;
constexpr double kExergyRatioReference = 1.286;

std::string field_name(const PackageRow& row) {
  return std::string(row.group) + "." + std::string(row.key);
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

void check_physical(const ScenarioPackage& p) {
  auto require = [](bool ok, const char* field, const char* message) {
    if (!ok) throw InvalidParameter(field, message);
  };
  require(p.lhv >= 0.0, "plant.lhv", "must be >= 0");
  require(p.throughput >= 0.0, "plant.throughput", "must be >= 0");
  require(p.eta_th_export >= 0.0 && p.eta_th_export <= 1.0, "plant.eta_th_export",
          "must lie in [0, 1]");
  require(p.cop_abs > 0.0, "link.cop_abs", "must be > 0");
  require(p.q_pipe_loss >= 0.0, "corridor.q_pipe_loss", "must be >= 0");
  require(p.q_trunk > 0.0, "corridor.q_trunk", "must be > 0");
  require(p.beta >= 0.0, "corridor.beta", "must be >= 0");
  require(p.e_pump >= 0.0, "screening.e_pump", "must be >= 0");
  require(p.alpha_aux >= 0.0 && p.alpha_aux < 1.0, "screening.alpha_aux", "must lie in [0, 1)");
  require(p.pue_base >= 1.0, "dc.pue_base", "must be >= 1");
  require(p.p_e >= 0.0, "econ.p_e", "must be >= 0");
  require(p.r > -1.0, "econ.r", "must be > -1");
  require(p.c_pipe >= 0.0, "econ.c_pipe", "must be >= 0");
  for (const PackageRow& row : kRows) {
    if (!std::isfinite(p.*row.member)) {
      throw InvalidParameter(field_name(row), "must be finite");
    }
  }
}

}  // namespace

std::span<const PackageRow> package_rows() { return kRows; }

double beta_from_pipe_loss(double q_pipe_loss_w_per_m, double q_trunk_mw) {
  if (!(q_trunk_mw > 0.0)) {
    throw InvalidParameter("corridor.q_trunk", "must be > 0");
  }
  if (!(q_pipe_loss_w_per_m >= 0.0)) {
    throw InvalidParameter("corridor.q_pipe_loss", "must be >= 0");
  }
  return q_pipe_loss_w_per_m * 1000.0 / (q_trunk_mw * 1e6);
}

ScenarioPackage builtin_package(std::string_view name) {
  ScenarioPackage p;
  double PackageRow::*column = nullptr;
  if (name == "conservative") {
    p.kind = PackageKind::conservative;
    column = &PackageRow::conservative;
  } else if (name == "baseline") {
    p.kind = PackageKind::baseline;
    column = &PackageRow::baseline;
  } else if (name == "aggressive") {
    p.kind = PackageKind::aggressive;
    column = &PackageRow::aggressive;
  } else {
    throw UnknownName("unknown scenario package '" + std::string(name) + "'");
  }
  p.name = std::string(name);
  for (const PackageRow& row : kRows) {
    p.*row.member = row.*column;
  }
  return p;
}

std::vector<std::string> builtin_package_names() {
  return {"conservative", "baseline", "aggressive"};
}

std::vector<std::string> validate_package(const ScenarioPackage& p) {
  check_physical(p);
  std::vector<std::string> warnings;

  if (p.kind != PackageKind::custom) {
    for (const PackageRow& row : kRows) {
      const double lo = std::min(row.conservative, row.aggressive);
      const double hi = std::max(row.conservative, row.aggressive);
      const double v = p.*row.member;
      if (v < lo || v > hi) {
        throw InvalidParameter(field_name(row), "outside the scenario envelope [" +
                                                    format_number(lo) + ", " +
                                                    format_number(hi) + "]");
      }
    }
  }

  const double derived = beta_from_pipe_loss(p.q_pipe_loss, p.q_trunk);
  if (derived > 0.0 && std::abs(p.beta - derived) > 0.05 * derived) {
    const std::string msg = "beta " + format_number(p.beta) +
                            " differs from the pipe-loss mapping " + format_number(derived) +
                            " by more than 5%";
    if (p.kind != PackageKind::custom) {
      throw InvalidParameter("corridor.beta", msg);
    }
    warnings.push_back(msg);
  }
  if (p.cop_abs > 0.85 && p.t_drive < 100.0) {
    warnings.push_back("cop_abs " + format_number(p.cop_abs) +
                       " exceeds the single-effect band for a drive temperature below 100 degC");
  }
  return warnings;
}

ScenarioSpec named_scenario(std::string_view name) {
  if (name == "representative") {
    ScenarioSpec spec{builtin_package("baseline"), {}};
    spec.package.name = "representative";
    return spec;
  }
  if (name == "pue-reference") {
    ScenarioSpec spec{builtin_package("baseline"), {}};
    spec.package.name = "pue-reference";
    spec.assumptions.aux_fraction = 0.02;
    spec.assumptions.gamma = 1.35;
    spec.assumptions.cop_m = 5.0;
    spec.assumptions.kappa0 = 0.0;
    spec.assumptions.kappa1 = 0.01;
    return spec;
  }
  if (name == "distance-reference") {
    ScenarioSpec spec{builtin_package("baseline"), {}};
    spec.package.name = "distance-reference";
    // Back-solve gamma and a constant parasitic load from the two target ratios.
    const ResolvedScenario base = resolve(spec);
    const double q_cool0 = base.system.link.cop_abs() * recoverable_heat(base.system.plant);
    const double w_it = base.system.dc.w_it();
    spec.assumptions.gamma = q_cool0 / (kCoverageRatioReference * w_it);
    spec.assumptions.kappa0 = exergy_factor(base.system.link) * q_cool0 / kExergyRatioReference;
    return spec;
  }
  return ScenarioSpec{builtin_package(name), {}};
}

std::vector<std::string> named_scenario_names() {
  auto names = builtin_package_names();
  names.insert(names.end(), {"representative", "pue-reference", "distance-reference"});
  return names;
}

ResolvedScenario resolve(const ScenarioSpec& spec) {
  const ScenarioPackage& p = spec.package;
  const ModelAssumptions& a = spec.assumptions;
  std::vector<std::string> warnings = validate_package(p);

  if (!(a.aux_fraction >= 0.0)) {
    throw InvalidParameter("dc.aux_fraction", "must be >= 0");
  }
  if (!(a.cool_share >= 0.0)) {
    throw InvalidParameter("screening.cool_share", "must be >= 0");
  }

  double alpha_h = 0.0;
  if (a.alpha_h) {
    alpha_h = *a.alpha_h;
  } else {
    const double useful_non_electric = a.eta_c * (1.0 - a.eta_e);
    if (!(useful_non_electric > 0.0)) {
      throw InvalidParameter("plant.eta_c",
                             "cannot derive alpha_h: eta_c (1 - eta_e) must be > 0");
    }
    alpha_h = p.eta_th_export / useful_non_electric;
  }
  const WtePlant plant = WtePlant::from_throughput(p.throughput, p.lhv, a.eta_c, a.eta_e, alpha_h);
  const double q_h = recoverable_heat(plant);

  // Validate rho and capacity before deriving loads from them.
  const DataCenter probe(a.p_it_max, a.rho, 0.0, 0.0, a.cop_m);
  const double w_it = probe.w_it();
  const double w_aux = a.w_aux.value_or(a.aux_fraction * w_it);
  const double aux_ratio = w_it > 0.0 ? w_aux / w_it : a.aux_fraction;
  double gamma = 0.0;
  if (a.gamma) {
    gamma = *a.gamma;
  } else {
    gamma = (p.pue_base - 1.0 - aux_ratio) * a.cop_m;
    if (gamma < 0.0) {
      throw InvalidParameter("dc.gamma", "derived cooling coefficient is negative: pue_base " +
                                             format_number(p.pue_base) +
                                             " is below 1 + auxiliary fraction");
    }
  }
  const DataCenter dc(a.p_it_max, a.rho, gamma, w_aux, a.cop_m);

  const double e_pump_ratio = units::kwh_per_mwh_to_ratio(p.e_pump);
  const double kappa0 = a.kappa0.value_or((e_pump_ratio + p.alpha_aux * p.cop_abs) * q_h);
  const Corridor corridor(a.length_km, p.beta, ParasiticModel(kappa0, a.kappa1, a.kappa2));
  const CouplingLink link(p.cop_abs, a.t0_k.value_or(units::celsius_to_kelvin(p.t_cw)), a.tc_k);

  const ScreeningInputs screening = ScreeningInputs::from_natural_units(
      q_h, p.cop_abs, a.cop_e, p.e_pump, p.alpha_aux, p.beta,
      a.w_cool_base.value_or(a.cool_share * w_it));

  return ResolvedScenario{p, a, SystemConfig{plant, corridor, link, dc}, screening,
                          std::move(warnings)};
}

RepresentativeConfig representative_config() {
  const ResolvedScenario r = resolve(named_scenario("representative"));
  return RepresentativeConfig{r.screening, r.system.dc};
}

SystemConfig pue_reference_config() { return resolve(named_scenario("pue-reference")).system; }

SystemConfig distance_reference_config() {
  return resolve(named_scenario("distance-reference")).system;
}

ClimateBand::ClimateBand(double t_wb_ref, double gamma0, double gamma1, double c0, double c1,
                         double t_wb_min, double t_wb_max)
    : t_wb_ref_(t_wb_ref),
      gamma0_(gamma0),
      gamma1_(gamma1),
      c0_(c0),
      c1_(c1),
      t_wb_min_(t_wb_min),
      t_wb_max_(t_wb_max) {
  if (!(t_wb_min_ < t_wb_max_)) {
    throw InvalidParameter("climate.t_wb_min", "domain must satisfy t_wb_min < t_wb_max");
  }
  if (!(gamma1_ >= 0.0)) {
    throw InvalidParameter("climate.gamma1", "must be >= 0");
  }
  if (!(c1_ >= 0.0)) {
    throw InvalidParameter("climate.c1", "must be >= 0");
  }
  // Both responses are affine, so checking the domain ends suffices.
  if (!(gamma0_ + gamma1_ * (t_wb_min_ - t_wb_ref_) >= 0.0)) {
    throw InvalidParameter("climate.gamma0", "gamma becomes negative inside the domain");
  }
  if (!(c0_ - c1_ * (t_wb_max_ - t_wb_ref_) > 0.0)) {
    throw InvalidParameter("climate.c0", "COP_m becomes non-positive inside the domain");
  }
}

ClimateResponse climate_eval(const ClimateBand& band, double t_wb) {
  if (!(t_wb >= band.t_wb_min() && t_wb <= band.t_wb_max())) {
    throw InvalidParameter("t_wb", "outside the climate band domain [" +
                                       format_number(band.t_wb_min()) + ", " +
                                       format_number(band.t_wb_max()) + "]");
  }
  const double dt = t_wb - band.t_wb_ref();
  return ClimateResponse{band.gamma0() + band.gamma1() * dt, band.c0() - band.c1() * dt};
}

ClimateBand default_climate_band() { return ClimateBand(20.0, 1.2, 0.02, 5.0, 0.08, 0.0, 35.0); }

}  // namespace wtecool
