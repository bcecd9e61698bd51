#include "wtecool/core_model.hpp"

#include <cmath>
#include <string>

#include "wtecool/errors.hpp"
#include "wtecool/units.hpp"

namespace wtecool {

namespace {

void require_finite(double value, const char* field) {
  if (!std::isfinite(value)) {
    throw InvalidParameter(field, "must be finite");
  }
}

void require_nonnegative(double value, const char* field) {
  require_finite(value, field);
  if (value < 0.0) {
    throw InvalidParameter(field, "must be >= 0, got " + std::to_string(value));
  }
}

void require_positive(double value, const char* field) {
  require_finite(value, field);
  if (value <= 0.0) {
    throw InvalidParameter(field, "must be > 0, got " + std::to_string(value));
  }
}

void require_unit_interval(double value, const char* field) {
  require_finite(value, field);
  if (value < 0.0 || value > 1.0) {
    throw InvalidParameter(field, "must lie in [0, 1], got " + std::to_string(value));
  }
}

}  // namespace

std::string_view to_string(Mode mode) noexcept {
  return mode == Mode::standalone ? "standalone" : "coupled";
}

WtePlant::WtePlant(double m_dot_w, double lhv, double eta_c, double eta_e, double alpha_h)
    : m_dot_w_(m_dot_w), lhv_(lhv), eta_c_(eta_c), eta_e_(eta_e), alpha_h_(alpha_h) {
  require_nonnegative(m_dot_w_, "plant.m_dot_w");
  require_nonnegative(lhv_, "plant.lhv");
  require_unit_interval(eta_c_, "plant.eta_c");
  require_unit_interval(eta_e_, "plant.eta_e");
  require_unit_interval(alpha_h_, "plant.alpha_h");
}

WtePlant WtePlant::from_throughput(double tonnes_per_day, double lhv, double eta_c,
                                   double eta_e, double alpha_h) {
  require_nonnegative(tonnes_per_day, "plant.throughput");
  return WtePlant(units::tonnes_per_day_to_kg_per_s(tonnes_per_day), lhv, eta_c, eta_e, alpha_h);
}

WtePlant WtePlant::with_lhv(double lhv) const {
  return WtePlant(m_dot_w_, lhv, eta_c_, eta_e_, alpha_h_);
}

WtePlant WtePlant::with_m_dot_w(double m_dot_w) const {
  return WtePlant(m_dot_w, lhv_, eta_c_, eta_e_, alpha_h_);
}

ParasiticModel::ParasiticModel(double kappa0, double kappa1, double kappa2)
    : kappa0_(kappa0), kappa1_(kappa1), kappa2_(kappa2) {
  require_nonnegative(kappa0_, "corridor.kappa0");
  require_nonnegative(kappa1_, "corridor.kappa1");
  require_nonnegative(kappa2_, "corridor.kappa2");
}

Corridor::Corridor(double length_km, double beta, ParasiticModel parasitic)
    : length_km_(length_km), beta_(beta), parasitic_(parasitic) {
  require_nonnegative(length_km_, "corridor.length_km");
  require_nonnegative(beta_, "corridor.beta");
}

Corridor Corridor::with_length(double length_km) const {
  return Corridor(length_km, beta_, parasitic_);
}

DataCenter::DataCenter(double p_it_max, double rho, double gamma, double w_aux, double cop_m)
    : p_it_max_(p_it_max), rho_(rho), gamma_(gamma), w_aux_(w_aux), cop_m_(cop_m) {
  require_nonnegative(p_it_max_, "dc.p_it_max");
  require_finite(rho_, "dc.rho");
  if (rho_ <= 0.0 || rho_ > 1.0) {
    throw InvalidParameter("dc.rho", "must lie in (0, 1], got " + std::to_string(rho_));
  }
  require_nonnegative(gamma_, "dc.gamma");
  require_nonnegative(w_aux_, "dc.w_aux");
  require_positive(cop_m_, "dc.cop_m");
}

DataCenter DataCenter::with_rho(double rho) const {
  return DataCenter(p_it_max_, rho, gamma_, w_aux_, cop_m_);
}

DataCenter DataCenter::with_w_aux(double w_aux) const {
  return DataCenter(p_it_max_, rho_, gamma_, w_aux, cop_m_);
}

DataCenter DataCenter::with_cooling(double gamma, double cop_m) const {
  return DataCenter(p_it_max_, rho_, gamma, w_aux_, cop_m);
}

CouplingLink::CouplingLink(double cop_abs, double t0_k, double tc_k)
    : cop_abs_(cop_abs), t0_(t0_k), tc_(tc_k) {
  require_positive(cop_abs_, "link.cop_abs");
  require_positive(t0_, "link.t0");
  require_positive(tc_, "link.tc");
}

double primary_energy_input(const WtePlant& plant) {
  // kg/s * MJ/kg = MJ/s = MW
  return plant.m_dot_w() * plant.lhv();
}

double net_electric_output(const WtePlant& plant) {
  return plant.eta_e() * plant.eta_c() * primary_energy_input(plant);
}

double recoverable_heat(const WtePlant& plant) {
  const double useful = plant.eta_c() * primary_energy_input(plant);
  return plant.alpha_h() * (useful - net_electric_output(plant));
}

double delivery_factor(const Corridor& corridor) {
  return std::exp(-corridor.beta() * corridor.length_km());
}

double delivered_cooling(const WtePlant& plant, const Corridor& corridor,
                         const CouplingLink& link) {
  return link.cop_abs() * delivery_factor(corridor) * recoverable_heat(plant);
}

double cooling_requirement(const DataCenter& dc) { return dc.gamma() * dc.w_it(); }

double coverage_share(double q_cool, double q_req) {
  if (!(q_cool >= 0.0) || !(q_req >= 0.0)) {
    throw std::invalid_argument("coverage_share: q_cool and q_req must be >= 0");
  }
  if (q_req == 0.0 || q_cool >= q_req) {
    return 1.0;
  }
  return q_cool / q_req;
}

double mechanical_cooling_power(double f, const DataCenter& dc) {
  if (!(f >= 0.0 && f <= 1.0)) {
    throw std::invalid_argument("mechanical_cooling_power: f must lie in [0, 1]");
  }
  return (1.0 - f) * cooling_requirement(dc) / dc.cop_m();
}

double parasitic_power(const ParasiticModel& model, double w_it, double length_km) {
  if (!(w_it >= 0.0) || !(length_km >= 0.0)) {
    throw std::invalid_argument("parasitic_power: w_it and length_km must be >= 0");
  }
  return model.kappa0() + model.kappa1() * w_it + model.kappa2() * length_km;
}

EnergyFlows evaluate_flows(const WtePlant& plant, const Corridor& corridor,
                           const CouplingLink& link, const DataCenter& dc, Mode mode) {
  EnergyFlows flows;
  flows.mode = mode;
  flows.e_in = primary_energy_input(plant);
  flows.w_e = net_electric_output(plant);
  flows.q_h = recoverable_heat(plant);
  flows.q_req = cooling_requirement(dc);
  if (mode == Mode::coupled) {
    flows.q_del = delivery_factor(corridor) * flows.q_h;
    flows.q_cool = delivered_cooling(plant, corridor, link);
    flows.f = coverage_share(flows.q_cool, flows.q_req);
    flows.w_par = parasitic_power(corridor.parasitic(), dc.w_it(), corridor.length_km());
  }
  flows.w_cool_m = mechanical_cooling_power(flows.f, dc);
  return flows;
}

EnergyFlows evaluate_flows(const SystemConfig& config, Mode mode) {
  return evaluate_flows(config.plant, config.corridor, config.link, config.dc, mode);
}

CascadeBalance cascade_balance(const SystemConfig& config) {
  const EnergyFlows flows = evaluate_flows(config, Mode::coupled);
  if (flows.e_in <= 0.0) {
    throw InvalidParameter("plant", "cascade balance needs a positive primary energy input");
  }
  CascadeBalance balance;
  balance.electricity_share = 100.0 * flows.w_e / flows.e_in;
  balance.cooling_share = 100.0 * flows.q_cool / flows.e_in;
  balance.loss_share = 100.0 - balance.electricity_share - balance.cooling_share;
  if (balance.loss_share < -1e-9) {
    // Only reachable with cop_abs > 1, where the chiller output outgrows its drive heat.
    throw Infeasible("cascade balance: electricity plus cooling exceed the primary input");
  }
  if (balance.loss_share < 0.0) {
    balance.loss_share = 0.0;
  }
  return balance;
}

}  // namespace wtecool
