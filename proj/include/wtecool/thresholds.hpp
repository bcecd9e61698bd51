#pragma once

// Break-even and feasibility conditions: exergy superiority of coupling, full
// thermal coverage, the utilization ceiling, the two distance thresholds and
// the LHV at which coverage saturates. Closed forms assume parasitic load
// independent of distance; the bisection solver handles the general case.

#include <functional>

#include "wtecool/core_model.hpp"
#include "wtecool/economics.hpp"
#include "wtecool/thresholds_types.hpp"

namespace wtecool {

struct SuperiorityVerdict {
  double margin = 0.0;  // phi_c q_cool - W_par, MW
  bool holds = false;   // margin >= 0
};

/// The exergy margin equals the coupled-minus-standalone net exergy output.
SuperiorityVerdict superiority_check(const EnergyFlows& flows, const CouplingLink& link);

/// COP_abs eta_tr(L) Q_h >= gamma W_IT.
bool full_coverage_holds(const SystemConfig& config);

struct UtilizationCeiling {
  double value = 0.0;  // largest rho with full coverage, unclamped
  /// True when the ceiling exceeds 1, i.e. any utilization is fully covered.
  bool unbounded() const noexcept { return value > 1.0; }
};

/// Throws InvalidParameter when gamma or P_IT^max is zero.
UtilizationCeiling utilization_ceiling(const SystemConfig& config);

/// Largest distance with full coverage, (1/beta) ln(COP_abs Q_h / (gamma W_IT)).
/// The configured corridor length is ignored. Throws InvalidParameter when the
/// cooling requirement is zero.
DistanceResult coverage_distance(const SystemConfig& config);

/// Largest distance where phi_c q_cool(L) >= w_par_const.
/// Throws InvalidParameter when w_par_const <= 0.
DistanceResult thermoeconomic_distance(const WtePlant& plant, const Corridor& corridor,
                                       const CouplingLink& link, double w_par_const);

struct BisectionOptions {
  double tolerance_km = 1e-6;
  double initial_upper_km = 1.0;
  double max_upper_km = 1e4;
};

/// Root of a continuous objective that is positive at short range and turns
/// negative with distance. The upper bracket doubles from
/// `initial_upper_km` until the sign changes or `max_upper_km` is reached.
/// g(0) < 0 yields infeasible_at_zero; no sign change yields unbounded.
DistanceResult bisect_breakeven(const std::function<double(double)>& objective,
                                const BisectionOptions& options = {});

enum class BreakevenObjective { coverage, exergy };

/// Numeric threshold with the full parasitic model W_par(L), including kappa2 L.
DistanceResult solve_breakeven_distance(const SystemConfig& config, BreakevenObjective objective,
                                        const BisectionOptions& options = {});

/// Distance where net avoided electricity meets the baseline cooling electricity.
DistanceResult solve_net_electric_breakeven(const ScreeningInputs& screening,
                                            const BisectionOptions& options = {});

/// Heating value at which the configured plant exactly covers the cooling
/// requirement; the plant's own lhv is ignored. Throws InvalidParameter when any
/// factor of the denominator is zero.
double lhv_threshold(const SystemConfig& config);

/// f gamma / COP_m >= W_par / W_IT. Throws InvalidParameter for zero IT load.
bool pue_improvement_holds(double f, const DataCenter& dc, double w_par);

/// The three independent screening conditions at the configured distance.
struct ScreeningConditions {
  bool full_coverage = false;
  bool pue_improves = false;
  bool exergy_superior = false;
};

ScreeningConditions screening_conditions(const SystemConfig& config);

}  // namespace wtecool
