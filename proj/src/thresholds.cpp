#include "wtecool/thresholds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "wtecool/errors.hpp"
#include "wtecool/metrics.hpp"

namespace wtecool {

std::string DistanceResult::describe() const {
  switch (kind) {
    case DistanceKind::finite: {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.3f km", km);
      return buf;
    }
    case DistanceKind::unbounded:
      return "unbounded (holds at every distance)";
    case DistanceKind::infeasible_at_zero:
      return "none (fails at any distance, including 0 km)";
  }
  return {};
}

namespace {

// (1/beta) ln(ratio) with the ratio < 1, == 1 and beta == 0 cases separated.
DistanceResult log_threshold(double ratio, double beta) {
  if (ratio < 1.0) {
    return {DistanceKind::infeasible_at_zero, 0.0};
  }
  if (ratio == 1.0) {
    return {DistanceKind::finite, 0.0};
  }
  if (beta == 0.0 || std::isinf(ratio)) {
    return {DistanceKind::unbounded, 0.0};
  }
  return {DistanceKind::finite, std::log(ratio) / beta};
}

}  // namespace

SuperiorityVerdict superiority_check(const EnergyFlows& flows, const CouplingLink& link) {
  SuperiorityVerdict verdict;
  verdict.margin = exergy_factor(link) * flows.q_cool - flows.w_par;
  verdict.holds = verdict.margin >= 0.0;
  return verdict;
}

bool full_coverage_holds(const SystemConfig& config) {
  return delivered_cooling(config.plant, config.corridor, config.link) >=
         cooling_requirement(config.dc);
}

UtilizationCeiling utilization_ceiling(const SystemConfig& config) {
  const DataCenter& dc = config.dc;
  if (dc.gamma() == 0.0) {
    throw InvalidParameter("dc.gamma", "utilization ceiling is undefined for gamma = 0");
  }
  if (dc.p_it_max() == 0.0) {
    throw InvalidParameter("dc.p_it_max", "utilization ceiling is undefined for zero capacity");
  }
  const double q_cool = delivered_cooling(config.plant, config.corridor, config.link);
  return UtilizationCeiling{q_cool / (dc.gamma() * dc.p_it_max())};
}

DistanceResult coverage_distance(const SystemConfig& config) {
  const double q_req = cooling_requirement(config.dc);
  if (q_req <= 0.0) {
    throw InvalidParameter("dc.gamma", "coverage distance needs a positive cooling requirement");
  }
  const double ratio = config.link.cop_abs() * recoverable_heat(config.plant) / q_req;
  return log_threshold(ratio, config.corridor.beta());
}

DistanceResult thermoeconomic_distance(const WtePlant& plant, const Corridor& corridor,
                                       const CouplingLink& link, double w_par_const) {
  if (!(w_par_const > 0.0)) {
    throw InvalidParameter("w_par", "thermoeconomic distance needs a positive parasitic load");
  }
  const double ratio = exergy_factor(link) * link.cop_abs() * recoverable_heat(plant) / w_par_const;
  return log_threshold(ratio, corridor.beta());
}

DistanceResult bisect_breakeven(const std::function<double(double)>& objective,
                                const BisectionOptions& options) {
  const double at_zero = objective(0.0);
  if (at_zero < 0.0) {
    return {DistanceKind::infeasible_at_zero, 0.0};
  }
  if (at_zero == 0.0) {
    return {DistanceKind::finite, 0.0};
  }

  double lo = 0.0;
  double hi = std::min(options.initial_upper_km, options.max_upper_km);
  while (objective(hi) > 0.0) {
    if (hi >= options.max_upper_km) {
      return {DistanceKind::unbounded, 0.0};
    }
    lo = hi;
    hi = std::min(2.0 * hi, options.max_upper_km);
  }
  // Invariant: objective(lo) > 0 >= objective(hi).
  while (hi - lo > options.tolerance_km) {
    const double mid = 0.5 * (lo + hi);
    if (objective(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {DistanceKind::finite, 0.5 * (lo + hi)};
}

DistanceResult solve_breakeven_distance(const SystemConfig& config, BreakevenObjective objective,
                                        const BisectionOptions& options) {
  const double q_h = recoverable_heat(config.plant);
  const double cop = config.link.cop_abs();
  const double beta = config.corridor.beta();

  if (objective == BreakevenObjective::coverage) {
    const double q_req = cooling_requirement(config.dc);
    if (q_req <= 0.0) {
      throw InvalidParameter("dc.gamma", "coverage distance needs a positive cooling requirement");
    }
    // f(L) = 1 is a plateau, so solve on the surplus q_cool(L) - q_req instead.
    return bisect_breakeven(
        [=](double km) { return cop * std::exp(-beta * km) * q_h - q_req; }, options);
  }

  const double phi = exergy_factor(config.link);
  const ParasiticModel parasitic = config.corridor.parasitic();
  const double w_it = config.dc.w_it();
  return bisect_breakeven(
      [=](double km) {
        return phi * cop * std::exp(-beta * km) * q_h - parasitic_power(parasitic, w_it, km);
      },
      options);
}

DistanceResult solve_net_electric_breakeven(const ScreeningInputs& screening,
                                            const BisectionOptions& options) {
  const double net0 = avoided_electricity_net_at_source(screening);
  const double beta = screening.beta();
  const double target = screening.w_cool_base();
  return bisect_breakeven([=](double km) { return net0 * std::exp(-beta * km) - target; },
                          options);
}

double lhv_threshold(const SystemConfig& config) {
  const WtePlant& plant = config.plant;
  const double denominator = config.link.cop_abs() * delivery_factor(config.corridor) *
                             plant.alpha_h() * plant.eta_c() * (1.0 - plant.eta_e()) *
                             plant.m_dot_w();
  if (!(denominator > 0.0)) {
    throw InvalidParameter("plant", "LHV threshold is undefined: no heat reaches the chillers");
  }
  return cooling_requirement(config.dc) / denominator;
}

bool pue_improvement_holds(double f, const DataCenter& dc, double w_par) {
  const double w_it = dc.w_it();
  if (w_it <= 0.0) {
    throw InvalidParameter("dc.p_it_max", "PUE is undefined for zero IT load");
  }
  return f * dc.gamma() / dc.cop_m() >= w_par / w_it;
}

ScreeningConditions screening_conditions(const SystemConfig& config) {
  const EnergyFlows flows = evaluate_flows(config, Mode::coupled);
  ScreeningConditions c;
  c.full_coverage = full_coverage_holds(config);
  c.pue_improves = pue_improvement_holds(flows.f, config.dc, flows.w_par);
  c.exergy_superior = superiority_check(flows, config.link).holds;
  return c;
}

}  // namespace wtecool
