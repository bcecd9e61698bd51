#include "wtecool/economics.hpp"

#include <cmath>
#include <string>

#include "wtecool/errors.hpp"
#include "wtecool/units.hpp"

namespace wtecool {

namespace {

void require(bool ok, const char* field, const char* message) {
  if (!ok) {
    throw InvalidParameter(field, message);
  }
}

}  // namespace

ScreeningInputs::ScreeningInputs(double q_drive0, double cop_abs, double cop_e, double e_pump,
                                 double alpha_aux, double beta, double w_cool_base)
    : q_drive0_(q_drive0),
      cop_abs_(cop_abs),
      cop_e_(cop_e),
      e_pump_(e_pump),
      alpha_aux_(alpha_aux),
      beta_(beta),
      w_cool_base_(w_cool_base) {
  require(std::isfinite(q_drive0_) && q_drive0_ >= 0.0, "screening.q_drive0", "must be >= 0");
  require(std::isfinite(cop_abs_) && cop_abs_ > 0.0, "screening.cop_abs", "must be > 0");
  require(cop_e_ > 0.0, "screening.cop_e", "must be > 0");
  require(std::isfinite(e_pump_) && e_pump_ >= 0.0, "screening.e_pump", "must be >= 0");
  require(alpha_aux_ >= 0.0 && alpha_aux_ < 1.0, "screening.alpha_aux", "must lie in [0, 1)");
  require(std::isfinite(beta_) && beta_ >= 0.0, "corridor.beta", "must be >= 0");
  require(std::isfinite(w_cool_base_) && w_cool_base_ >= 0.0, "screening.w_cool_base",
          "must be >= 0");
}

ScreeningInputs ScreeningInputs::from_natural_units(double q_drive0, double cop_abs,
                                                    double cop_e, double e_pump_kwh_per_mwh,
                                                    double alpha_aux, double beta,
                                                    double w_cool_base) {
  return ScreeningInputs(q_drive0, cop_abs, cop_e, units::kwh_per_mwh_to_ratio(e_pump_kwh_per_mwh),
                         alpha_aux, beta, w_cool_base);
}

double avoided_electricity_gross(const ScreeningInputs& s, double length_km) {
  return s.cop_abs() * s.q_drive0() / s.cop_e() * std::exp(-s.beta() * length_km);
}

double avoided_electricity_net_at_source(const ScreeningInputs& s) {
  const double q_cool0 = s.cop_abs() * s.q_drive0();
  const double gross = q_cool0 / s.cop_e();
  const double pumping = s.e_pump() * s.q_drive0();
  const double auxiliaries = s.alpha_aux() * q_cool0;
  return gross - pumping - auxiliaries;
}

double avoided_electricity_net(const ScreeningInputs& s, double length_km) {
  const double net0 = avoided_electricity_net_at_source(s);
  if (net0 < 0.0) {
    throw Infeasible("net avoided electricity is negative before transport (" +
                     std::to_string(net0) + " MW_e)");
  }
  // Pumping and auxiliaries decay together with the gross term.
  return net0 * std::exp(-s.beta() * length_km);
}

DistanceResult breakeven_corridor(const ScreeningInputs& s) {
  const double net0 = avoided_electricity_net_at_source(s);
  const double target = s.w_cool_base();
  if (net0 < target) {
    return {DistanceKind::infeasible_at_zero, 0.0};
  }
  if (net0 == target) {
    return {DistanceKind::finite, 0.0};
  }
  if (s.beta() == 0.0 || target == 0.0) {
    return {DistanceKind::unbounded, 0.0};
  }
  return {DistanceKind::finite, -std::log(target / net0) / s.beta()};
}

double GridAccounting::residual_cooling() const { return (1.0 - f) * q_req / cop_m; }

GridBalance grid_electricity(const GridAccounting& acct) {
  require(acct.e_it >= 0.0, "grid.e_it", "must be >= 0");
  require(acct.e_aux >= 0.0, "grid.e_aux", "must be >= 0");
  require(acct.q_req >= 0.0, "grid.q_req", "must be >= 0");
  require(acct.f >= 0.0 && acct.f <= 1.0, "grid.f", "must lie in [0, 1]");
  require(acct.cop_m > 0.0, "grid.cop_m", "must be > 0");
  require(acct.w_par_energy >= 0.0, "grid.w_par_energy", "must be >= 0");
  require(acct.e_onsite >= 0.0, "grid.e_onsite", "must be >= 0");

  const double load = acct.e_it + acct.e_aux + acct.residual_cooling() + acct.w_par_energy;
  const double net = load - acct.e_onsite;
  if (net >= 0.0) {
    return {net, 0.0};
  }
  return {0.0, -net};
}

void validate(const CostPeriod& p) {
  require(p.t >= 0, "period.t", "must be >= 0");
  require(p.p_e >= 0.0, "period.p_e", "must be >= 0");
  require(p.p_w >= 0.0, "period.p_w", "must be >= 0");
  require(p.e_grid >= 0.0, "period.e_grid", "must be >= 0");
  require(p.w_waste >= 0.0, "period.w_waste", "must be >= 0");
  require(p.k_service >= 0.0, "period.k_service", "must be >= 0");
}

CostBreakdown period_breakdown(const CostPeriod& p) {
  CostBreakdown b;
  b.capex_it = p.capex_it;
  b.capex_couple = p.capex_couple;
  b.opex_it = p.opex_it;
  b.electricity = units::energy_cost(p.p_e, p.e_grid);
  b.waste = p.p_w * p.w_waste;
  b.revenue = p.rev_elec;
  b.total = b.capex_it + b.capex_couple + b.opex_it + b.electricity + b.waste - b.revenue;
  return b;
}

double period_cost(const CostPeriod& p) { return period_breakdown(p).total; }

double lcoc(std::span<const CostPeriod> periods, double r) {
  if (periods.empty()) {
    throw InvalidParameter("periods", "at least one cost period is required");
  }
  require(r > -1.0, "econ.r", "discount rate must be > -1");
  double cost = 0.0;
  double service = 0.0;
  for (const CostPeriod& p : periods) {
    validate(p);
    const double discount = std::pow(1.0 + r, -static_cast<double>(p.t));
    cost += period_cost(p) * discount;
    service += p.k_service * discount;
  }
  if (!(service > 0.0)) {
    throw InvalidParameter("periods.k_service", "discounted service sum must be > 0");
  }
  return cost / service;
}

}  // namespace wtecool
