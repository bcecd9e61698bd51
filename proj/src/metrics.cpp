#include "wtecool/metrics.hpp"

#include <stdexcept>

#include "wtecool/errors.hpp"

namespace wtecool {

namespace {

double it_load_or_throw(const DataCenter& dc) {
  const double w_it = dc.w_it();
  if (w_it <= 0.0) {
    throw InvalidParameter("dc.p_it_max", "PUE is undefined for zero IT load");
  }
  return w_it;
}

}  // namespace

double exergy_factor(double t0_k, double tc_k) {
  if (!(tc_k > 0.0)) {
    throw std::invalid_argument("exergy_factor: tc must be > 0 K");
  }
  return t0_k / tc_k - 1.0;
}

double exergy_factor(const CouplingLink& link) { return exergy_factor(link.t0(), link.tc()); }

double pue_elec(const EnergyFlows& flows, const DataCenter& dc) {
  const double w_it = it_load_or_throw(dc);
  return (w_it + dc.w_aux() + flows.w_cool_m + flows.w_par) / w_it;
}

double pue_standalone(const DataCenter& dc) {
  const double w_it = it_load_or_throw(dc);
  return 1.0 + dc.w_aux() / w_it + dc.gamma() / dc.cop_m();
}

double delta_pue(double standalone, double coupled) { return standalone - coupled; }

double pue_sys(const EnergyFlows& flows, const DataCenter& dc) {
  const double w_it = it_load_or_throw(dc);
  return (w_it + dc.w_aux() + flows.w_cool_m + flows.w_par + flows.q_del) / w_it;
}

PueReport pue_report(const EnergyFlows& flows, const DataCenter& dc) {
  return PueReport{pue_elec(flows, dc), pue_sys(flows, dc), flows.mode};
}

ExergyReport exergy_report(const WtePlant& plant, const CouplingLink& link,
                           const EnergyFlows& flows) {
  ExergyReport report;
  report.phi_c = exergy_factor(link);
  report.ex_in = plant.eta_c() * flows.e_in;
  if (report.ex_in <= 0.0) {
    throw InvalidParameter("plant", "exergy efficiency needs a positive primary input");
  }
  const double cooling_exergy = report.phi_c * flows.q_cool;
  report.ex_out_gross = flows.w_e + cooling_exergy;
  report.ex_out_net = flows.w_e - flows.w_par + cooling_exergy;
  report.eta_ex = report.ex_out_gross / report.ex_in;
  report.eta_ex_net = report.ex_out_net / report.ex_in;
  return report;
}

double exergy_efficiency_compact(const WtePlant& plant, const Corridor& corridor,
                                 const CouplingLink& link) {
  return plant.eta_e() + exergy_factor(link) * link.cop_abs() * delivery_factor(corridor) *
                             plant.alpha_h() * (1.0 - plant.eta_e());
}

}  // namespace wtecool
