#include "wtecool/commands.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "wtecool/csv.hpp"
#include "wtecool/errors.hpp"
#include "wtecool/metrics.hpp"
#include "wtecool/sweeps.hpp"
#include "wtecool/thresholds.hpp"

#ifndef WTECOOL_VERSION
#define WTECOOL_VERSION "0.0.0"
#endif

namespace wtecool {

using Json = nlohmann::ordered_json;

std::string_view version() noexcept { return WTECOOL_VERSION; }

int exit_code_for(const std::exception& error) noexcept {
  if (dynamic_cast<const UnknownName*>(&error)) return kExitUnknownName;
  if (dynamic_cast<const ConfigError*>(&error)) return kExitConfigError;
  if (dynamic_cast<const InvalidParameter*>(&error)) return kExitInvariant;
  if (dynamic_cast<const Infeasible*>(&error)) return kExitInfeasible;
  if (dynamic_cast<const IoError*>(&error)) return kExitIo;
  if (dynamic_cast<const std::invalid_argument*>(&error)) return kExitInvariant;
  return kExitUsage;
}

namespace {

std::string_view kind_name(PackageKind kind) {
  switch (kind) {
    case PackageKind::conservative:
      return "conservative";
    case PackageKind::baseline:
      return "baseline";
    case PackageKind::aggressive:
      return "aggressive";
    case PackageKind::custom:
      return "custom";
  }
  return "";
}

std::string_view kind_name(DistanceKind kind) {
  switch (kind) {
    case DistanceKind::finite:
      return "finite";
    case DistanceKind::unbounded:
      return "unbounded";
    case DistanceKind::infeasible_at_zero:
      return "infeasible_at_zero";
  }
  return "";
}

Json number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

Json distance_json(const DistanceResult& d) {
  Json j;
  j["kind"] = kind_name(d.kind);
  j["km"] = d.is_finite() ? Json(d.km) : Json(nullptr);
  j["text"] = d.describe();
  return j;
}

std::string provenance_text(const RunConfig& config, std::string_view command,
                            std::string_view extra = {}) {
  std::string text = "wtecool " + std::string(version()) + " " + std::string(command) +
                     " scenario=" + config.scenario;
  if (!config.overrides.empty()) {
    text += " overrides=";
    for (std::size_t i = 0; i < config.overrides.size(); ++i) {
      if (i) text += ";";
      text += config.overrides[i].first + "=" + config.overrides[i].second;
    }
  }
  if (!extra.empty()) {
    text += " ";
    text += extra;
  }
  return text;
}

void flatten(const Json& j, const std::string& prefix, std::ostringstream& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      flatten(value, prefix.empty() ? key : prefix + "." + key, out);
    }
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      flatten(j[i], prefix + "." + std::to_string(i), out);
    }
  } else if (j.is_number()) {
    out << prefix << "," << csv::format_double(j.get<double>()) << "\n";
  } else if (j.is_boolean()) {
    out << prefix << "," << (j.get<bool>() ? "true" : "false") << "\n";
  } else if (j.is_null()) {
    out << prefix << ",\n";
  } else {
    out << prefix << "," << j.get<std::string>() << "\n";
  }
}

std::string render(const Json& body, const RunConfig& config, std::string_view command) {
  if (config.format == OutputFormat::json) {
    Json doc;
    if (config.provenance) {
      doc["provenance"] = provenance_text(config, command);
    }
    for (const auto& [key, value] : body.items()) {
      doc[key] = value;
    }
    return doc.dump(2) + "\n";
  }
  std::ostringstream out;
  if (config.provenance) {
    out << "# " << provenance_text(config, command) << "\n";
  }
  out << "field,value\n";
  flatten(body, "", out);
  return out.str();
}

Json package_json(const ScenarioPackage& p, const std::vector<std::string>& warnings) {
  Json j;
  j["name"] = p.name;
  j["kind"] = kind_name(p.kind);
  for (const PackageRow& row : package_rows()) {
    j[std::string(row.key)] = p.*row.member;
  }
  j["steam_bar"] = p.steam_bar;
  j["steam_celsius"] = p.steam_celsius;
  j["warnings"] = warnings;
  return j;
}

Json inputs_json(const SystemConfig& s) {
  Json j;
  j["plant"] = {{"m_dot_w", s.plant.m_dot_w()},
                {"lhv", s.plant.lhv()},
                {"eta_c", s.plant.eta_c()},
                {"eta_e", s.plant.eta_e()},
                {"alpha_h", s.plant.alpha_h()}};
  j["corridor"] = {{"length_km", s.corridor.length_km()},
                   {"beta", s.corridor.beta()},
                   {"kappa0", s.corridor.parasitic().kappa0()},
                   {"kappa1", s.corridor.parasitic().kappa1()},
                   {"kappa2", s.corridor.parasitic().kappa2()}};
  j["link"] = {{"cop_abs", s.link.cop_abs()}, {"t0", s.link.t0()}, {"tc", s.link.tc()}};
  j["dc"] = {{"p_it_max", s.dc.p_it_max()}, {"rho", s.dc.rho()},     {"w_it", s.dc.w_it()},
             {"gamma", s.dc.gamma()},       {"w_aux", s.dc.w_aux()}, {"cop_m", s.dc.cop_m()}};
  return j;
}

Json flows_json(const EnergyFlows& f) {
  return Json{{"mode", to_string(f.mode)}, {"e_in", f.e_in},     {"w_e", f.w_e},
              {"q_h", f.q_h},              {"q_del", f.q_del},   {"q_cool", f.q_cool},
              {"q_req", f.q_req},          {"f", f.f},           {"w_cool_m", f.w_cool_m},
              {"w_par", f.w_par}};
}

Json exergy_json(const ExergyReport& e) {
  return Json{{"phi_c", e.phi_c},         {"ex_in", e.ex_in},   {"ex_out_gross", e.ex_out_gross},
              {"ex_out_net", e.ex_out_net}, {"eta_ex", e.eta_ex}, {"eta_ex_net", e.eta_ex_net}};
}

Json screening_json(const ScreeningInputs& s, double length_km) {
  Json j;
  j["q_drive0"] = s.q_drive0();
  j["cop_abs"] = s.cop_abs();
  j["cop_e"] = s.cop_e();
  j["e_pump"] = s.e_pump();
  j["alpha_aux"] = s.alpha_aux();
  j["beta"] = s.beta();
  j["w_cool_base"] = s.w_cool_base();
  j["at_distance_km"] = length_km;
  j["q_cool"] = s.cop_abs() * s.q_drive0() * std::exp(-s.beta() * length_km);
  j["avoided_gross"] = avoided_electricity_gross(s, length_km);
  const double net0 = avoided_electricity_net_at_source(s);
  if (net0 >= 0.0) {
    j["avoided_net"] = avoided_electricity_net(s, length_km);
  } else {
    j["avoided_net"] = nullptr;
    j["avoided_net_note"] = "negative before transport; coupling infeasible";
  }
  j["breakeven"] = distance_json(breakeven_corridor(s));
  return j;
}

std::pair<double, double> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw ConfigError("range must be lo:hi, got '" + text + "'");
  }
  return {parse_number(text.substr(0, colon), "range.lo"),
          parse_number(text.substr(colon + 1), "range.hi")};
}

std::pair<double, double> default_range(SweepVariable v) {
  switch (v) {
    case SweepVariable::rho:
      return {0.1, 1.0};
    case SweepVariable::lhv:
      return {6.0, 14.0};
    case SweepVariable::distance:
      return {0.0, 60.0};
    case SweepVariable::t_wb:
      return {10.0, 30.0};
  }
  return {0.0, 1.0};
}

SecondaryLevels parse_levels(const std::string& text) {
  const KeyValue kv = parse_assignment(text);
  SecondaryLevels levels{parse_sweep_variable(kv.first), {}};
  for (const std::string& cell : csv::split(kv.second)) {
    levels.values.push_back(parse_number(cell, "levels"));
  }
  return levels;
}

std::string optional_cell(const std::optional<double>& v) {
  return v ? csv::format_double(*v) : std::string{};
}

Json marker_json(const ThresholdMarker& m) {
  Json j = distance_json(m.distance);
  j["method"] = m.numeric ? "numeric" : "closed-form";
  j["in_range"] = m.in_range;
  return j;
}

std::string marker_comment(std::string_view name, const ThresholdMarker& m) {
  std::string line = "# threshold " + std::string(name) + "=";
  line += m.distance.is_finite() ? csv::format_double(m.distance.km) : std::string(kind_name(m.distance.kind));
  line += m.numeric ? " method=numeric" : " method=closed-form";
  line += m.in_range ? "" : " (beyond range)";
  return line + "\n";
}

std::string verdict(const DistanceResult& d, std::string_view benefit) {
  switch (d.kind) {
    case DistanceKind::finite:
      return std::string(benefit) + " up to " + d.describe();
    case DistanceKind::unbounded:
      return std::string(benefit) + " at every distance";
    case DistanceKind::infeasible_at_zero:
      return "no " + std::string(benefit) + " at any distance";
  }
  return {};
}

}  // namespace

std::string cmd_evaluate(const RunConfig& config, std::optional<double> at_distance_km) {
  RunConfig effective = config;
  if (at_distance_km) {
    effective.overrides.emplace_back("corridor.length_km", csv::format_double(*at_distance_km));
  }
  const ResolvedScenario scenario = resolve(effective);
  const SystemConfig& s = scenario.system;

  const EnergyFlows standalone = evaluate_flows(s, Mode::standalone);
  const EnergyFlows coupled = evaluate_flows(s, Mode::coupled);

  Json body;
  body["scenario"] = package_json(scenario.package, scenario.warnings);
  body["inputs"] = inputs_json(s);
  body["flows"] = {{"standalone", flows_json(standalone)}, {"coupled", flows_json(coupled)}};

  const double pue_s = pue_standalone(s.dc);
  const PueReport coupled_pue = pue_report(coupled, s.dc);
  body["pue"] = {{"standalone", pue_s},
                 {"coupled_elec", coupled_pue.pue_elec},
                 {"coupled_sys", coupled_pue.pue_sys},
                 {"delta_elec", delta_pue(pue_s, coupled_pue.pue_elec)}};

  if (standalone.e_in > 0.0 && s.plant.eta_c() > 0.0) {
    body["exergy"] = {{"standalone", exergy_json(exergy_report(s.plant, s.link, standalone))},
                      {"coupled", exergy_json(exergy_report(s.plant, s.link, coupled))},
                      {"eta_ex_compact", exergy_efficiency_compact(s.plant, s.corridor, s.link)}};
  } else {
    body["exergy"] = nullptr;
  }

  const SuperiorityVerdict verdict = superiority_check(coupled, s.link);
  body["superiority"] = {{"margin", verdict.margin}, {"holds", verdict.holds}};

  const ScreeningConditions cond = screening_conditions(s);
  body["conditions"] = {{"full_coverage", cond.full_coverage},
                        {"pue_improves", cond.pue_improves},
                        {"exergy_superior", cond.exergy_superior}};

  try {
    const CascadeBalance c = cascade_balance(s);
    body["cascade"] = {{"electricity_share", c.electricity_share},
                       {"cooling_share", c.cooling_share},
                       {"loss_share", c.loss_share}};
  } catch (const std::exception& e) {
    body["cascade"] = {{"error", e.what()}};
  }

  Json thresholds;
  if (coupled.q_req > 0.0) {
    thresholds["coverage_distance"] = distance_json(coverage_distance(s));
  } else {
    thresholds["coverage_distance"] = distance_json({DistanceKind::unbounded, 0.0});
  }
  const double w_par0 = parasitic_power(s.corridor.parasitic(), s.dc.w_it(), 0.0);
  if (s.corridor.parasitic().distance_independent() && w_par0 > 0.0) {
    thresholds["thermoeconomic_distance"] =
        distance_json(thermoeconomic_distance(s.plant, s.corridor, s.link, w_par0));
  } else {
    thresholds["thermoeconomic_distance"] =
        distance_json(solve_breakeven_distance(s, BreakevenObjective::exergy));
  }
  if (s.dc.gamma() > 0.0 && s.dc.p_it_max() > 0.0) {
    const UtilizationCeiling ceiling = utilization_ceiling(s);
    thresholds["utilization_ceiling"] = {{"value", ceiling.value},
                                         {"unbounded", ceiling.unbounded()}};
  }
  try {
    thresholds["lhv_threshold"] = number(lhv_threshold(s));
  } catch (const InvalidParameter&) {
    thresholds["lhv_threshold"] = nullptr;
  }
  body["thresholds"] = thresholds;
  body["screening"] = screening_json(scenario.screening, s.corridor.length_km());

  return render(body, config, "evaluate");
}

std::string cmd_sweep(const RunConfig& config, const SweepRequest& request) {
  const ResolvedScenario scenario = resolve(config);
  const SweepVariable variable = parse_sweep_variable(request.variable);
  const auto [lo, hi] = request.range.empty() ? default_range(variable) : parse_range(request.range);

  SweepSpec spec{.variable = variable,
                 .lo = lo,
                 .hi = hi,
                 .steps = request.steps,
                 .fixed = scenario.system,
                 .screening = scenario.screening,
                 .climate = default_climate_band(),
                 .secondary = std::nullopt,
                 .hold_load_ratios = true};
  if (request.levels) {
    spec.secondary = parse_levels(*request.levels);
  }
  const std::vector<SweepPoint> points = sweep(spec);
  std::optional<AnnotatedSeries> annotated;
  if (variable == SweepVariable::distance) {
    annotated = annotate_thresholds(points, spec);
  }

  const std::string extra = "variable=" + std::string(to_string(variable));
  if (config.format == OutputFormat::json) {
    Json doc;
    if (config.provenance) {
      doc["provenance"] = provenance_text(config, "sweep", extra);
    }
    doc["variable"] = to_string(variable);
    if (annotated) {
      Json t;
      t["l_cov"] = marker_json(annotated->l_cov);
      t["l_ex"] = marker_json(annotated->l_ex);
      if (annotated->l_star) t["l_star"] = marker_json(*annotated->l_star);
      doc["thresholds"] = t;
    }
    Json rows = Json::array();
    for (const SweepPoint& p : points) {
      rows.push_back({{"series", p.series_label},
                      {"x", p.x},
                      {"regime", to_string(p.regime)},
                      {"reason", p.infeasible_reason},
                      {"f", number(p.f)},
                      {"pue_standalone", number(p.pue_standalone)},
                      {"pue_coupled", number(p.pue_coupled)},
                      {"delta_pue", number(p.delta_pue)},
                      {"eta_ex", number(p.eta_ex)},
                      {"eta_ex_net", number(p.eta_ex_net)},
                      {"delta_ex_net", number(p.delta_ex_net)},
                      {"avoided_net", p.avoided_net ? Json(*p.avoided_net) : Json(nullptr)}});
    }
    doc["points"] = rows;
    return doc.dump(2) + "\n";
  }

  std::ostringstream out;
  if (config.provenance) {
    out << "# " << provenance_text(config, "sweep", extra) << "\n";
  }
  if (annotated) {
    out << marker_comment("l_cov", annotated->l_cov);
    out << marker_comment("l_ex", annotated->l_ex);
    if (annotated->l_star) out << marker_comment("l_star", *annotated->l_star);
  }
  out << "series," << to_string(variable)
      << ",regime,reason,f,pue_standalone,pue_coupled,delta_pue,eta_ex,eta_ex_net,"
         "delta_ex_net,avoided_net\n";
  for (const SweepPoint& p : points) {
    const bool ok = p.infeasible_reason.empty() || p.infeasible_reason == "exergy_margin";
    auto cell = [ok](double v) { return ok ? csv::format_double(v) : std::string{}; };
    out << p.series_label << ',' << csv::format_double(p.x) << ',' << to_string(p.regime) << ','
        << p.infeasible_reason << ',' << cell(p.f) << ',' << cell(p.pue_standalone) << ','
        << cell(p.pue_coupled) << ',' << cell(p.delta_pue) << ',' << cell(p.eta_ex) << ','
        << cell(p.eta_ex_net) << ',' << cell(p.delta_ex_net) << ',' << optional_cell(p.avoided_net)
        << '\n';
  }
  return out.str();
}

std::string cmd_breakeven(const RunConfig& config, std::string_view objective) {
  const bool all = objective == "all";
  if (!all && objective != "coverage" && objective != "exergy" && objective != "net-electric") {
    throw UnknownName("unknown objective '" + std::string(objective) +
                      "' (expected all, coverage, exergy or net-electric)");
  }
  const ResolvedScenario scenario = resolve(config);
  const SystemConfig& s = scenario.system;
  const ParasiticModel& parasitic = s.corridor.parasitic();
  const bool distance_dependent = !parasitic.distance_independent();

  Json body;
  body["scenario"] = scenario.package.name;
  body["parasitics"] = {{"kappa0", parasitic.kappa0()},
                        {"kappa1", parasitic.kappa1()},
                        {"kappa2", parasitic.kappa2()},
                        {"distance_dependent", distance_dependent}};

  if (all || objective == "coverage") {
    Json j;
    if (cooling_requirement(s.dc) > 0.0) {
      j["closed_form"] = distance_json(coverage_distance(s));
      j["numeric"] = distance_json(solve_breakeven_distance(s, BreakevenObjective::coverage));
    } else {
      j["closed_form"] = distance_json({DistanceKind::unbounded, 0.0});
      j["numeric"] = j["closed_form"];
    }
    j["method"] = "closed-form";
    j["verdict"] = verdict(solve_breakeven_distance(s, BreakevenObjective::coverage), "coverage");
    body["l_cov"] = j;
  }
  if (all || objective == "exergy") {
    Json j;
    const double w_par0 = parasitic_power(parasitic, s.dc.w_it(), 0.0);
    if (w_par0 > 0.0) {
      j["closed_form"] = distance_json(thermoeconomic_distance(s.plant, s.corridor, s.link, w_par0));
    } else {
      j["closed_form"] = nullptr;
    }
    const DistanceResult numeric = solve_breakeven_distance(s, BreakevenObjective::exergy);
    j["numeric"] = distance_json(numeric);
    j["verdict"] = verdict(numeric, "exergy advantage");
    if (distance_dependent) {
      j["method"] = "numeric";
      j["note"] = "closed form evaluated with W_par at 0 km; parasitics grow with distance";
    } else {
      j["method"] = w_par0 > 0.0 ? "closed-form" : "numeric";
    }
    body["l_ex"] = j;
  }
  if (all || objective == "net-electric") {
    Json j;
    j["net_at_source"] = avoided_electricity_net_at_source(scenario.screening);
    j["w_cool_base"] = scenario.screening.w_cool_base();
    const DistanceResult closed = breakeven_corridor(scenario.screening);
    j["closed_form"] = distance_json(closed);
    j["verdict"] = verdict(closed, "net-electric benefit");
    j["numeric"] = distance_json(solve_net_electric_breakeven(scenario.screening));
    j["method"] = "closed-form";
    body["l_star"] = j;
  }
  return render(body, config, "breakeven");
}

std::string cmd_lcoc(const RunConfig& config, std::istream& periods_in, std::string_view source) {
  const ResolvedScenario scenario = resolve(config);
  const double r = scenario.package.r;
  const std::vector<CostPeriod> periods = csv::read_periods(periods_in, source);
  const double value = lcoc(periods, r);

  if (config.format == OutputFormat::json) {
    Json doc;
    if (config.provenance) {
      doc["provenance"] = provenance_text(config, "lcoc");
    }
    doc["discount_rate"] = r;
    doc["lcoc"] = value;
    Json rows = Json::array();
    for (const CostPeriod& p : periods) {
      const CostBreakdown b = period_breakdown(p);
      rows.push_back({{"t", p.t},
                      {"capex_it", b.capex_it},
                      {"capex_couple", b.capex_couple},
                      {"opex_it", b.opex_it},
                      {"electricity", b.electricity},
                      {"waste", b.waste},
                      {"revenue", b.revenue},
                      {"total", b.total},
                      {"k_service", p.k_service},
                      {"discount_factor", std::pow(1.0 + r, -static_cast<double>(p.t))}});
    }
    doc["periods"] = rows;
    return doc.dump(2) + "\n";
  }

  std::ostringstream out;
  if (config.provenance) {
    out << "# " << provenance_text(config, "lcoc") << "\n";
  }
  out << "# lcoc=" << csv::format_double(value) << " discount_rate=" << csv::format_double(r)
      << "\n";
  out << "t,capex_it,capex_couple,opex_it,electricity,waste,revenue,total,k_service,"
         "discount_factor\n";
  for (const CostPeriod& p : periods) {
    const CostBreakdown b = period_breakdown(p);
    out << p.t << ',' << csv::format_double(b.capex_it) << ','
        << csv::format_double(b.capex_couple) << ',' << csv::format_double(b.opex_it) << ','
        << csv::format_double(b.electricity) << ',' << csv::format_double(b.waste) << ','
        << csv::format_double(b.revenue) << ',' << csv::format_double(b.total) << ','
        << csv::format_double(p.k_service) << ','
        << csv::format_double(std::pow(1.0 + r, -static_cast<double>(p.t))) << '\n';
  }
  return out.str();
}

std::string cmd_lcoc_file(const RunConfig& config, const std::string& periods_path) {
  std::ifstream in(periods_path);
  if (!in) {
    throw IoError("cannot read periods file '" + periods_path + "'");
  }
  return cmd_lcoc(config, in, periods_path);
}

std::string cmd_scenarios(OutputFormat format) {
  std::vector<ScenarioPackage> packages;
  for (const std::string& name : builtin_package_names()) {
    packages.push_back(builtin_package(name));
  }
  if (format == OutputFormat::json) {
    Json doc;
    for (const ScenarioPackage& p : packages) {
      doc["packages"][p.name] = package_json(p, {});
    }
    doc["named"] = named_scenario_names();
    Json keys = Json::array();
    for (const OverrideKey& k : override_keys()) {
      keys.push_back({{"key", k.key}, {"unit", k.unit}, {"description", k.description}});
    }
    doc["keys"] = keys;
    return doc.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "parameter,unit";
  for (const ScenarioPackage& p : packages) out << ',' << p.name;
  out << '\n';
  for (const PackageRow& row : package_rows()) {
    out << row.group << '.' << row.key << ',' << row.unit;
    for (const ScenarioPackage& p : packages) out << ',' << csv::format_double(p.*row.member);
    out << '\n';
  }
  return out.str();
}

}  // namespace wtecool
