// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "support/properties.hpp"
#include "wtecool/economics.hpp"
#include "wtecool/metrics.hpp"
#include "wtecool/scenarios.hpp"
#include "wtecool/thresholds.hpp"

using namespace wtecool;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, a, b, c);
  return buf;
}

bool within(double value, double target, double tol) { return std::abs(value - target) <= tol; }

ScreeningInputs representative_screening() { return representative_config().screening; }

Verdict drive_heat() {
  const double q = representative_screening().q_drive0();
  return {within(q, 78.1, 0.1), fmt("Q_drive0 = %.4f MW_th (target 78.1 +/- 0.1)", q)};
}

Verdict cooling_at_source() {
  const ResolvedScenario r = resolve(named_scenario("representative"));
  const double q = delivered_cooling(r.system.plant, r.system.corridor.with_length(0.0), r.system.link);
  return {within(q, 58.6, 0.1), fmt("Q_cool(0) = %.4f MW (target 58.6 +/- 0.1)", q)};
}

Verdict gross_avoided() {
  const double g = avoided_electricity_gross(representative_screening(), 0.0);
  return {within(g, 11.7, 0.05), fmt("gross(0) = %.4f MW_e (target 11.7 +/- 0.05)", g)};
}

Verdict net_avoided() {
  const ScreeningInputs s = representative_screening();
  const double n0 = avoided_electricity_net(s, 0.0);
  const double n20 = avoided_electricity_net(s, 20.0);
  const double n40 = avoided_electricity_net(s, 40.0);
  const bool pass = within(n0, 8.9, 0.05) && within(n20, 8.0, 0.05) && within(n40, 7.3, 0.05);
  return {pass, fmt("net(0/20/40 km) = %.4f / %.4f / %.4f MW_e (targets 8.9 / 8.0 / 7.3 +/- 0.05)",
                    n0, n20, n40)};
}

Verdict breakeven() {
  const ScreeningInputs s = representative_screening();
  const DistanceResult closed = breakeven_corridor(s);
  const DistanceResult numeric = solve_net_electric_breakeven(s);
  const bool pass = closed.is_finite() && numeric.is_finite() && within(closed.km, 21.3, 0.5) &&
                    within(closed.km, numeric.km, 1e-6);
  return {pass, fmt("L* = %.6f km closed, %.6f km bisection (target 21.3 +/- 0.5, agreement 1e-6)",
                    closed.km, numeric.km)};
}

Verdict beta_mapping() {
  const double c = beta_from_pipe_loss(40.0, 2.0);
  const double b = beta_from_pipe_loss(25.0, 5.0);
  const double a = beta_from_pipe_loss(10.0, 10.0);
  const bool pass = within(c, 0.020, 1e-12) && within(b, 0.005, 1e-12) && within(a, 0.001, 1e-12);
  return {pass, fmt("beta = %.15g / %.15g / %.15g per km", c, b, a)};
}

Verdict package_snapshot() {
  struct Cell {
    const char* key;
    std::array<double, 3> values;  // conservative, baseline, aggressive
  };
  static const Cell kTable[] = {
      {"lhv", {8, 10, 12}},           {"throughput", {500, 1500, 3000}},
      {"eta_th_export", {0.30, 0.45, 0.60}}, {"t_drive", {80, 90, 110}},
      {"cop_abs", {0.65, 0.75, 0.85}}, {"t_cw", {30, 27, 24}},
      {"q_pipe_loss", {40, 25, 10}},  {"q_trunk", {2, 5, 10}},
      {"beta", {0.020, 0.005, 0.001}}, {"e_pump", {10, 6, 2}},
      {"alpha_aux", {0.06, 0.04, 0.02}}, {"pue_base", {1.50, 1.35, 1.20}},
      {"p_e", {0.06, 0.12, 0.18}},    {"r", {0.10, 0.07, 0.05}},
      {"c_pipe", {1200, 750, 500}},
  };
  const char* names[] = {"conservative", "baseline", "aggressive"};
  int checked = 0;
  for (int col = 0; col < 3; ++col) {
    const ScenarioPackage p = builtin_package(names[col]);
    for (const Cell& cell : kTable) {
      bool found = false;
      for (const PackageRow& row : package_rows()) {
        if (row.key == cell.key) {
          found = true;
          if (p.*row.member != cell.values[col]) {
            return {false, std::string(names[col]) + "." + cell.key + " mismatch"};
          }
          ++checked;
        }
      }
      if (!found) return {false, std::string("missing row ") + cell.key};
    }
  }
  return {checked == 45, fmt("%.0f cells match", checked)};
}

Verdict pue_targets() {
  const SystemConfig c = pue_reference_config();
  const double standalone = pue_standalone(c.dc);
  const double coupled = pue_elec(evaluate_flows(c), c.dc);
  return {within(standalone, 1.29, 0.005) && within(coupled, 1.03, 0.005),
          fmt("PUE standalone %.6f, coupled %.6f (targets 1.29 / 1.03 +/- 0.005)", standalone, coupled)};
}

Verdict structural_thresholds() {
  const SystemConfig c = distance_reference_config();
  const double lhv_star = lhv_threshold(c);
  const SystemConfig at{c.plant.with_lhv(lhv_star), c.corridor, c.link, c.dc};
  const EnergyFlows flows = evaluate_flows(at);
  const double ratio = flows.q_cool / flows.q_req;
  const bool round_trip = std::abs(ratio - 1.0) <= 1e-12 && flows.f == 1.0;

  const DistanceResult cov_closed = coverage_distance(c);
  const DistanceResult cov_numeric = solve_breakeven_distance(c, BreakevenObjective::coverage);
  const double w_par = parasitic_power(c.corridor.parasitic(), c.dc.w_it(), 0.0);
  const DistanceResult ex_closed = thermoeconomic_distance(c.plant, c.corridor, c.link, w_par);
  const DistanceResult ex_numeric = solve_breakeven_distance(c, BreakevenObjective::exergy);
  const bool agree = within(cov_closed.km, cov_numeric.km, 1e-6) &&
                     within(ex_closed.km, ex_numeric.km, 1e-6);
  const bool examples = within(cov_closed.km, 20.87, 0.005) && within(ex_closed.km, 50.3, 0.05);
  return {round_trip && agree && examples,
          fmt("f(LHV*) ratio - 1 = %.2e; L_cov = %.4f km; L_ex = %.4f km", ratio - 1.0,
              cov_closed.km, ex_closed.km)};
}

Verdict property(const testing::PropertyOutcome& outcome) {
  if (!outcome.ok()) return {false, outcome.failure};
  return {outcome.cases >= testing::kPropertyCases, fmt("%.0f random configurations", outcome.cases)};
}

Verdict cli_determinism() {
#ifdef WTECOOL_CLI_PATH
  auto capture = [](const std::string& args) {
    const std::string cmd = std::string(WTECOOL_CLI_PATH) + " " + args;
    std::string text;
    if (FILE* pipe = popen(cmd.c_str(), "r")) {
      std::array<char, 4096> buf{};
      std::size_t n = 0;
      while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) text.append(buf.data(), n);
      if (pclose(pipe) != 0) text.clear();
    }
    return text;
  };
  const std::vector<std::string> invocations = {
      "sweep --scenario representative --variable distance --range 0:60 --steps 121 --format csv --no-provenance",
      "sweep --scenario baseline --variable lhv --levels rho=0.3,0.6,0.9 --format json --no-provenance",
      "sweep --scenario conservative --variable rho --format csv --no-provenance",
  };
  for (const std::string& args : invocations) {
    const std::string first = capture(args);
    if (first.empty()) return {false, "no output from: " + args};
    for (int i = 0; i < 2; ++i) {
      if (capture(args) != first) return {false, "output differs for: " + args};
    }
  }
  return {true, fmt("%.0f sweep invocations byte-identical across 3 runs", invocations.size())};
#else
  return {false, "CLI not built"};
#endif
}

}  // namespace

int main() {
  using Check = std::function<Verdict()>;
  const std::vector<std::pair<const char*, Check>> criteria = {
      {"drive heat at source", drive_heat},
      {"delivered cooling at source", cooling_at_source},
      {"gross avoided electricity", gross_avoided},
      {"net avoided electricity at 0, 20, 40 km", net_avoided},
      {"net-electric break-even corridor", breakeven},
      {"pipe-loss to decay-rate mapping", beta_mapping},
      {"scenario package snapshot", package_snapshot},
      {"PUE reference targets", pue_targets},
      {"threshold structure", structural_thresholds},
      {"compact exergy form", [] { return property(testing::check_compact_exergy(101)); }},
      {"recoverable heat forms", [] { return property(testing::check_recoverable_heat_forms(102)); }},
      {"cascade conservation", [] { return property(testing::check_cascade_conservation(103)); }},
      {"superiority identity", [] { return property(testing::check_superiority_identity(104)); }},
      {"PUE plateau", [] { return property(testing::check_plateau(105)); }},
      {"monotonicity battery", [] { return property(testing::check_monotonicity(106)); }},
      {"PUE improvement condition", [] { return property(testing::check_pue_condition(107)); }},
      {"CLI determinism", cli_determinism},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (!v.pass) ++failures;
    std::printf("%s %2zu %-42s %s [%.0f ms]\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                v.detail.c_str(), ms);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
