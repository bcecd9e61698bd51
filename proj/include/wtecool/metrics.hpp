#pragma once

#include "wtecool/core_model.hpp"

namespace wtecool {

struct PueReport {
  double pue_elec = 1.0;
  double pue_sys = 1.0;
  Mode mode = Mode::coupled;
};

/// Exergy accounting within the plant boundary. Primary exergy is
/// approximated as eta_c * E_in; cooling is credited at phi_c * q_cool.
struct ExergyReport {
  double phi_c = 0.0;
  double ex_in = 0.0;
  double ex_out_gross = 0.0;  // W_e + phi_c q_cool
  double ex_out_net = 0.0;    // W_e - W_par + phi_c q_cool
  double eta_ex = 0.0;
  double eta_ex_net = 0.0;
};

/// Cooling exergy factor T0/Tc - 1. Throws std::invalid_argument for tc <= 0.
double exergy_factor(double t0_k, double tc_k);
double exergy_factor(const CouplingLink& link);

/// Facility electricity per unit IT load:
/// (W_IT + W_aux + W_cool,m + W_par) / W_IT. `flows` must be evaluated for `dc`.
double pue_elec(const EnergyFlows& flows, const DataCenter& dc);

/// 1 + W_aux/W_IT + gamma/COP_m: electric PUE with no thermal coverage and no parasitics.
double pue_standalone(const DataCenter& dc);

/// Standalone minus coupled; negative when coupling raises facility electricity.
double delta_pue(double standalone, double coupled);

/// pue_elec with the delivered heat added to the numerator. Mixes thermal and
/// electric MW on purpose; not comparable with conventional PUE figures.
double pue_sys(const EnergyFlows& flows, const DataCenter& dc);

PueReport pue_report(const EnergyFlows& flows, const DataCenter& dc);

/// Throws InvalidParameter when the primary input is zero.
ExergyReport exergy_report(const WtePlant& plant, const CouplingLink& link,
                           const EnergyFlows& flows);

/// Gross exergy efficiency written directly in model parameters:
/// eta_e + phi_c * COP_abs * eta_tr(L) * alpha_h * (1 - eta_e).
double exergy_efficiency_compact(const WtePlant& plant, const Corridor& corridor,
                                 const CouplingLink& link);

}  // namespace wtecool
