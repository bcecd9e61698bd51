#pragma once

// Screening-level avoided-electricity arithmetic for a representative plant
// and the levelized cost of computing (LCOC).
//
// The screening path converts cooling into electricity through a baseline
// chiller COP (COP_e). It is deliberately separate from the coverage-based
// accounting in core_model/metrics; the two are not expected to agree.

#include <span>
#include <vector>

#include "wtecool/thresholds_types.hpp"

namespace wtecool {

class ScreeningInputs {
 public:
  /// `e_pump` is the dimensionless MW_e/MW_th ratio; see from_natural_units
  /// for the kWh_e/MWh_th form.
  ScreeningInputs(double q_drive0, double cop_abs, double cop_e, double e_pump,
                  double alpha_aux, double beta, double w_cool_base);

  static ScreeningInputs from_natural_units(double q_drive0, double cop_abs, double cop_e,
                                            double e_pump_kwh_per_mwh, double alpha_aux,
                                            double beta, double w_cool_base);

  double q_drive0() const noexcept { return q_drive0_; }
  double cop_abs() const noexcept { return cop_abs_; }
  double cop_e() const noexcept { return cop_e_; }
  double e_pump() const noexcept { return e_pump_; }
  double alpha_aux() const noexcept { return alpha_aux_; }
  double beta() const noexcept { return beta_; }
  double w_cool_base() const noexcept { return w_cool_base_; }

 private:
  double q_drive0_;
  double cop_abs_;
  double cop_e_;
  double e_pump_;
  double alpha_aux_;
  double beta_;
  double w_cool_base_;
};

/// (COP_abs Q_drive0 / COP_e) exp(-beta L), MW_e.
double avoided_electricity_gross(const ScreeningInputs& s, double length_km);

/// Bracketed net at L = 0 (gross minus pumping minus auxiliaries), before decay.
double avoided_electricity_net_at_source(const ScreeningInputs& s);

/// Net avoided electricity; the whole bracket decays with exp(-beta L).
/// Throws Infeasible when the net is already negative at the source.
double avoided_electricity_net(const ScreeningInputs& s, double length_km);

/// Distance at which net avoided electricity falls to w_cool_base.
DistanceResult breakeven_corridor(const ScreeningInputs& s);

struct GridAccounting {
  double e_it = 0.0;          // MWh
  double e_aux = 0.0;         // MWh
  double q_req = 0.0;         // MWh thermal cooling requirement
  double f = 0.0;             // coverage share
  double cop_m = 1.0;
  double w_par_energy = 0.0;  // MWh
  double e_onsite = 0.0;      // MWh credited from the WtE plant

  /// Residual mechanical-cooling electricity (1 - f) q_req / COP_m.
  double residual_cooling() const;
};

struct GridBalance {
  double e_grid = 0.0;          // purchased, floored at 0
  double export_surplus = 0.0;  // on-site electricity beyond the load
};

GridBalance grid_electricity(const GridAccounting& acct);

enum class ServiceUnit { mwh_it, accelerator_hours };

struct CostPeriod {
  int t = 0;
  double capex_it = 0.0;
  double capex_couple = 0.0;
  double opex_it = 0.0;
  double p_e = 0.0;        // currency per kWh
  double e_grid = 0.0;     // MWh
  double p_w = 0.0;        // currency per tonne
  double w_waste = 0.0;    // tonnes
  double rev_elec = 0.0;
  double k_service = 0.0;  // compute-service quantity
};

/// Throws InvalidParameter on negative prices, quantities or period index.
void validate(const CostPeriod& period);

struct CostBreakdown {
  double capex_it = 0.0;
  double capex_couple = 0.0;
  double opex_it = 0.0;
  double electricity = 0.0;  // p_e * E_grid, with the kWh/MWh conversion
  double waste = 0.0;        // p_w * W
  double revenue = 0.0;      // subtracted
  double total = 0.0;
};

CostBreakdown period_breakdown(const CostPeriod& period);
double period_cost(const CostPeriod& period);

/// Discounted cost over discounted service, discounting each period by
/// (1 + r)^-t. Throws InvalidParameter when the list is empty, r <= -1, or the
/// discounted service sum is not positive.
double lcoc(std::span<const CostPeriod> periods, double r);

}  // namespace wtecool
