#pragma once

// Comparative-statics series over utilization, heating value, corridor
// distance or wet-bulb temperature. Every metric is computed through the
// core_model / metrics / thresholds functions.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wtecool/core_model.hpp"
#include "wtecool/economics.hpp"
#include "wtecool/scenarios.hpp"
#include "wtecool/thresholds_types.hpp"

namespace wtecool {

enum class SweepVariable { rho, lhv, distance, t_wb };

std::string_view to_string(SweepVariable v) noexcept;
/// Throws UnknownName.
SweepVariable parse_sweep_variable(std::string_view name);

enum class Regime { full_coverage, partial, infeasible };

std::string_view to_string(Regime r) noexcept;

struct SecondaryLevels {
  SweepVariable variable;
  std::vector<double> values;
};

struct SweepSpec {
  SweepVariable variable = SweepVariable::distance;
  double lo = 0.0;
  double hi = 1.0;
  int steps = 101;
  SystemConfig fixed;
  std::optional<ScreeningInputs> screening;  // adds the net avoided electricity column
  std::optional<ClimateBand> climate;        // required for t_wb sweeps or levels
  std::optional<SecondaryLevels> secondary;
  /// Utilization sweeps keep W_aux / W_IT and W_par / W_IT fixed by scaling
  /// w_aux, kappa0 and kappa2 with rho.
  bool hold_load_ratios = true;
};

/// Throws InvalidParameter when lo >= hi, steps < 2, the secondary variable
/// repeats the swept one, or a t_wb sweep has no climate band.
void validate(const SweepSpec& spec);

struct SweepPoint {
  double x = 0.0;
  std::string series_label;
  double pue_standalone = 0.0;
  double pue_coupled = 0.0;
  double delta_pue = 0.0;
  double f = 0.0;
  double eta_ex = 0.0;
  double eta_ex_net = 0.0;
  double delta_ex_net = 0.0;  // phi_c q_cool - W_par, MW
  std::optional<double> avoided_net;  // screening path, MW_e
  Regime regime = Regime::infeasible;
  std::string infeasible_reason;  // violated field, or "exergy_margin" when the margin is negative
};

/// Evenly spaced inclusive grid; `steps` points per series, series ordered by
/// secondary level. Invalid configurations produce infeasible points rather
/// than being skipped. Regime: full_coverage iff f == 1; otherwise partial
/// while the exergy margin is non-negative, infeasible beyond that.
std::vector<SweepPoint> sweep(const SweepSpec& spec);

/// Inclusive linear grid.
std::vector<double> linear_grid(double lo, double hi, int steps);

struct ThresholdMarker {
  DistanceResult distance;
  bool numeric = false;   // bisection with distance-dependent parasitics
  bool in_range = false;  // finite and inside the swept range
};

struct AnnotatedSeries {
  std::vector<SweepPoint> points;
  ThresholdMarker l_cov;
  ThresholdMarker l_ex;
  std::optional<ThresholdMarker> l_star;  // net-electric break-even
};

/// Attaches the coverage and exergy thresholds (and the net-electric
/// break-even when screening inputs are present) to a distance series.
/// Throws InvalidParameter for non-distance sweeps.
AnnotatedSeries annotate_thresholds(std::vector<SweepPoint> series, const SweepSpec& spec);

}  // namespace wtecool
