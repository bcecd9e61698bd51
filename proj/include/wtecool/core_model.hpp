#pragma once

// Steady-state energy flows of a waste-to-energy plant whose recoverable heat
// drives absorption chillers at a data center some distance away.
//
// All state types validate on construction and are immutable afterwards;
// the free functions below assume valid inputs.

#include <string_view>

namespace wtecool {

/// Standalone: heat is rejected at the plant and the data center chills
/// mechanically. Coupled: recoverable heat is piped to absorption chillers.
enum class Mode { standalone, coupled };

std::string_view to_string(Mode mode) noexcept;

class WtePlant {
 public:
  /// `m_dot_w` in kg/s, `lhv` in MJ/kg.
  WtePlant(double m_dot_w, double lhv, double eta_c, double eta_e, double alpha_h);

  /// Throughput given in tonnes/day.
  static WtePlant from_throughput(double tonnes_per_day, double lhv, double eta_c, double eta_e,
                                  double alpha_h);

  double m_dot_w() const noexcept { return m_dot_w_; }
  double lhv() const noexcept { return lhv_; }
  double eta_c() const noexcept { return eta_c_; }
  double eta_e() const noexcept { return eta_e_; }
  double alpha_h() const noexcept { return alpha_h_; }

  WtePlant with_lhv(double lhv) const;
  WtePlant with_m_dot_w(double m_dot_w) const;

 private:
  double m_dot_w_;
  double lhv_;
  double eta_c_;
  double eta_e_;
  double alpha_h_;
};

/// Reduced-form parasitic electricity: kappa0 + kappa1 * W_IT + kappa2 * L.
class ParasiticModel {
 public:
  ParasiticModel() = default;
  ParasiticModel(double kappa0, double kappa1, double kappa2);

  double kappa0() const noexcept { return kappa0_; }
  double kappa1() const noexcept { return kappa1_; }
  double kappa2() const noexcept { return kappa2_; }

  /// True when the load does not depend on corridor length.
  bool distance_independent() const noexcept { return kappa2_ == 0.0; }

 private:
  double kappa0_ = 0.0;
  double kappa1_ = 0.0;
  double kappa2_ = 0.0;
};

class Corridor {
 public:
  Corridor(double length_km, double beta, ParasiticModel parasitic = {});

  double length_km() const noexcept { return length_km_; }
  double beta() const noexcept { return beta_; }
  const ParasiticModel& parasitic() const noexcept { return parasitic_; }

  Corridor with_length(double length_km) const;

 private:
  double length_km_;
  double beta_;
  ParasiticModel parasitic_;
};

class DataCenter {
 public:
  /// `p_it_max` and `w_aux` in MW; `rho` in (0, 1].
  DataCenter(double p_it_max, double rho, double gamma, double w_aux, double cop_m);

  double p_it_max() const noexcept { return p_it_max_; }
  double rho() const noexcept { return rho_; }
  double gamma() const noexcept { return gamma_; }
  double w_aux() const noexcept { return w_aux_; }
  double cop_m() const noexcept { return cop_m_; }

  /// Operating IT load rho * P_IT^max.
  double w_it() const noexcept { return rho_ * p_it_max_; }

  DataCenter with_rho(double rho) const;
  DataCenter with_w_aux(double w_aux) const;
  DataCenter with_cooling(double gamma, double cop_m) const;

 private:
  double p_it_max_;
  double rho_;
  double gamma_;
  double w_aux_;
  double cop_m_;
};

/// Absorption conversion and the temperatures that grade its cooling output.
/// t0 < tc is accepted but yields a negative exergy factor.
class CouplingLink {
 public:
  CouplingLink(double cop_abs, double t0_k, double tc_k);

  double cop_abs() const noexcept { return cop_abs_; }
  double t0() const noexcept { return t0_; }
  double tc() const noexcept { return tc_; }

 private:
  double cop_abs_;
  double t0_;
  double tc_;
};

struct SystemConfig {
  WtePlant plant;
  Corridor corridor;
  CouplingLink link;
  DataCenter dc;
};

/// Per-configuration flows, all in MW except the coverage share `f`.
struct EnergyFlows {
  Mode mode = Mode::coupled;
  double e_in = 0.0;
  double w_e = 0.0;
  double q_h = 0.0;
  double q_del = 0.0;
  double q_cool = 0.0;
  double q_req = 0.0;
  double f = 0.0;
  double w_cool_m = 0.0;
  double w_par = 0.0;
};

/// Plant output normalised to 100 units of primary energy input.
struct CascadeBalance {
  double electricity_share = 0.0;
  double cooling_share = 0.0;
  double loss_share = 0.0;
};

double primary_energy_input(const WtePlant& plant);
double net_electric_output(const WtePlant& plant);
double recoverable_heat(const WtePlant& plant);
double delivery_factor(const Corridor& corridor);
double delivered_cooling(const WtePlant& plant, const Corridor& corridor, const CouplingLink& link);
double cooling_requirement(const DataCenter& dc);

/// min{1, q_cool / q_req}. With no demand (q_req == 0) the demand counts as
/// fully covered and 1 is returned.
double coverage_share(double q_cool, double q_req);

double mechanical_cooling_power(double f, const DataCenter& dc);
double parasitic_power(const ParasiticModel& model, double w_it, double length_km);

/// In standalone mode the heat path is switched off: q_del = q_cool = 0,
/// f = 0 and w_par = 0.
EnergyFlows evaluate_flows(const SystemConfig& config, Mode mode = Mode::coupled);
EnergyFlows evaluate_flows(const WtePlant& plant, const Corridor& corridor,
                           const CouplingLink& link, const DataCenter& dc,
                           Mode mode = Mode::coupled);

/// Shares of electricity, delivered cooling and losses. Cooling is reported
/// as the chiller output q_cool. Throws InvalidParameter when e_in == 0 and
/// Infeasible when cooling plus electricity exceed the input (cop_abs > 1).
CascadeBalance cascade_balance(const SystemConfig& config);

}  // namespace wtecool
