#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "wtecool/commands.hpp"
#include "wtecool/core_model.hpp"
#include "wtecool/economics.hpp"
#include "wtecool/errors.hpp"
#include "wtecool/metrics.hpp"
#include "wtecool/scenarios.hpp"
#include "wtecool/sweeps.hpp"
#include "wtecool/thresholds.hpp"

namespace py = pybind11;
using namespace wtecool;

PYBIND11_MODULE(_wtecool, m) {
  m.doc() = "Waste-to-energy / data-center cooling screening model";
  m.attr("__version__") = std::string(version());

  py::register_exception<InvalidParameter>(m, "InvalidParameter", PyExc_ValueError);
  py::register_exception<Infeasible>(m, "Infeasible", PyExc_ValueError);
  py::register_exception<UnknownName>(m, "UnknownName", PyExc_KeyError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

  py::enum_<Mode>(m, "Mode").value("standalone", Mode::standalone).value("coupled", Mode::coupled);

  py::class_<WtePlant>(m, "WtePlant")
      .def(py::init<double, double, double, double, double>(), py::arg("m_dot_w"),
           py::arg("lhv"), py::arg("eta_c"), py::arg("eta_e"), py::arg("alpha_h"))
      .def_static("from_throughput", &WtePlant::from_throughput, py::arg("tonnes_per_day"),
                  py::arg("lhv"), py::arg("eta_c"), py::arg("eta_e"), py::arg("alpha_h"))
      .def_property_readonly("m_dot_w", &WtePlant::m_dot_w)
      .def_property_readonly("lhv", &WtePlant::lhv)
      .def_property_readonly("eta_c", &WtePlant::eta_c)
      .def_property_readonly("eta_e", &WtePlant::eta_e)
      .def_property_readonly("alpha_h", &WtePlant::alpha_h)
      .def("with_lhv", &WtePlant::with_lhv);

  py::class_<ParasiticModel>(m, "ParasiticModel")
      .def(py::init<double, double, double>(), py::arg("kappa0") = 0.0, py::arg("kappa1") = 0.0,
           py::arg("kappa2") = 0.0)
      .def_property_readonly("kappa0", &ParasiticModel::kappa0)
      .def_property_readonly("kappa1", &ParasiticModel::kappa1)
      .def_property_readonly("kappa2", &ParasiticModel::kappa2);

  py::class_<Corridor>(m, "Corridor")
      .def(py::init<double, double, ParasiticModel>(), py::arg("length_km"), py::arg("beta"),
           py::arg("parasitic") = ParasiticModel{})
      .def_property_readonly("length_km", &Corridor::length_km)
      .def_property_readonly("beta", &Corridor::beta)
      .def_property_readonly("parasitic", &Corridor::parasitic)
      .def("with_length", &Corridor::with_length);

  py::class_<DataCenter>(m, "DataCenter")
      .def(py::init<double, double, double, double, double>(), py::arg("p_it_max"),
           py::arg("rho"), py::arg("gamma"), py::arg("w_aux"), py::arg("cop_m"))
      .def_property_readonly("p_it_max", &DataCenter::p_it_max)
      .def_property_readonly("rho", &DataCenter::rho)
      .def_property_readonly("gamma", &DataCenter::gamma)
      .def_property_readonly("w_aux", &DataCenter::w_aux)
      .def_property_readonly("cop_m", &DataCenter::cop_m)
      .def_property_readonly("w_it", &DataCenter::w_it)
      .def("with_rho", &DataCenter::with_rho);

  py::class_<CouplingLink>(m, "CouplingLink")
      .def(py::init<double, double, double>(), py::arg("cop_abs"), py::arg("t0"), py::arg("tc"))
      .def_property_readonly("cop_abs", &CouplingLink::cop_abs)
      .def_property_readonly("t0", &CouplingLink::t0)
      .def_property_readonly("tc", &CouplingLink::tc);

  py::class_<SystemConfig>(m, "SystemConfig")
      .def(py::init<WtePlant, Corridor, CouplingLink, DataCenter>(), py::arg("plant"),
           py::arg("corridor"), py::arg("link"), py::arg("dc"))
      .def_readonly("plant", &SystemConfig::plant)
      .def_readonly("corridor", &SystemConfig::corridor)
      .def_readonly("link", &SystemConfig::link)
      .def_readonly("dc", &SystemConfig::dc);

  py::class_<EnergyFlows>(m, "EnergyFlows")
      .def_readonly("mode", &EnergyFlows::mode)
      .def_readonly("e_in", &EnergyFlows::e_in)
      .def_readonly("w_e", &EnergyFlows::w_e)
      .def_readonly("q_h", &EnergyFlows::q_h)
      .def_readonly("q_del", &EnergyFlows::q_del)
      .def_readonly("q_cool", &EnergyFlows::q_cool)
      .def_readonly("q_req", &EnergyFlows::q_req)
      .def_readonly("f", &EnergyFlows::f)
      .def_readonly("w_cool_m", &EnergyFlows::w_cool_m)
      .def_readonly("w_par", &EnergyFlows::w_par);

  py::class_<PueReport>(m, "PueReport")
      .def_readonly("pue_elec", &PueReport::pue_elec)
      .def_readonly("pue_sys", &PueReport::pue_sys);

  py::class_<ExergyReport>(m, "ExergyReport")
      .def_readonly("phi_c", &ExergyReport::phi_c)
      .def_readonly("ex_in", &ExergyReport::ex_in)
      .def_readonly("ex_out_gross", &ExergyReport::ex_out_gross)
      .def_readonly("ex_out_net", &ExergyReport::ex_out_net)
      .def_readonly("eta_ex", &ExergyReport::eta_ex)
      .def_readonly("eta_ex_net", &ExergyReport::eta_ex_net);

  py::enum_<DistanceKind>(m, "DistanceKind")
      .value("finite", DistanceKind::finite)
      .value("unbounded", DistanceKind::unbounded)
      .value("infeasible_at_zero", DistanceKind::infeasible_at_zero);

  py::class_<DistanceResult>(m, "DistanceResult")
      .def_readonly("kind", &DistanceResult::kind)
      .def_readonly("km", &DistanceResult::km)
      .def("is_finite", &DistanceResult::is_finite)
      .def("__repr__", [](const DistanceResult& d) { return "<DistanceResult " + d.describe() + ">"; });

  py::class_<SuperiorityVerdict>(m, "SuperiorityVerdict")
      .def_readonly("margin", &SuperiorityVerdict::margin)
      .def_readonly("holds", &SuperiorityVerdict::holds);

  py::class_<ScreeningInputs>(m, "ScreeningInputs")
      .def(py::init<double, double, double, double, double, double, double>(),
           py::arg("q_drive0"), py::arg("cop_abs"), py::arg("cop_e"), py::arg("e_pump"),
           py::arg("alpha_aux"), py::arg("beta"), py::arg("w_cool_base"))
      .def_static("from_natural_units", &ScreeningInputs::from_natural_units)
      .def_property_readonly("q_drive0", &ScreeningInputs::q_drive0)
      .def_property_readonly("beta", &ScreeningInputs::beta)
      .def_property_readonly("w_cool_base", &ScreeningInputs::w_cool_base);

  py::class_<CostPeriod>(m, "CostPeriod")
      .def(py::init([](int t, double capex_it, double capex_couple, double opex_it, double p_e,
                       double e_grid, double p_w, double w_waste, double rev_elec,
                       double k_service) {
             return CostPeriod{t, capex_it, capex_couple, opex_it, p_e,
                               e_grid, p_w, w_waste, rev_elec, k_service};
           }),
           py::arg("t"), py::arg("capex_it") = 0.0, py::arg("capex_couple") = 0.0,
           py::arg("opex_it") = 0.0, py::arg("p_e") = 0.0, py::arg("e_grid") = 0.0,
           py::arg("p_w") = 0.0, py::arg("w_waste") = 0.0, py::arg("rev_elec") = 0.0,
           py::arg("k_service") = 0.0)
      .def_readwrite("t", &CostPeriod::t)
      .def_readwrite("k_service", &CostPeriod::k_service);

  py::class_<ResolvedScenario>(m, "ResolvedScenario")
      .def_readonly("system", &ResolvedScenario::system)
      .def_readonly("screening", &ResolvedScenario::screening)
      .def_readonly("warnings", &ResolvedScenario::warnings)
      .def_property_readonly("name", [](const ResolvedScenario& r) { return r.package.name; });

  m.def("evaluate_flows", py::overload_cast<const SystemConfig&, Mode>(&evaluate_flows),
        py::arg("config"), py::arg("mode") = Mode::coupled);
  m.def("exergy_factor", py::overload_cast<double, double>(&exergy_factor), py::arg("t0"),
        py::arg("tc"));
  m.def("pue_standalone", &pue_standalone);
  m.def("pue_report", &pue_report);
  m.def("exergy_report", &exergy_report);
  m.def("exergy_efficiency_compact", &exergy_efficiency_compact);
  m.def("superiority_check", &superiority_check);
  m.def("coverage_distance", &coverage_distance);
  m.def("thermoeconomic_distance", &thermoeconomic_distance);
  m.def("lhv_threshold", &lhv_threshold);
  m.def("bisect_breakeven", [](const std::function<double(double)>& g) {
    return bisect_breakeven(g);
  });
  m.def("avoided_electricity_gross", &avoided_electricity_gross);
  m.def("avoided_electricity_net", &avoided_electricity_net);
  m.def("breakeven_corridor", &breakeven_corridor);
  m.def("lcoc", [](const std::vector<CostPeriod>& periods, double r) {
    return lcoc(periods, r);
  }, py::arg("periods"), py::arg("r"));
  m.def("beta_from_pipe_loss", &beta_from_pipe_loss);
  m.def("scenario_names", &named_scenario_names);
  m.def("resolve_scenario", [](const std::string& name, const std::vector<KeyValue>& overrides) {
    RunConfig config;
    config.scenario = name;
    config.overrides = overrides;
    return resolve(config);
  }, py::arg("name") = "baseline", py::arg("overrides") = std::vector<KeyValue>{});

  auto run_config = [](const std::string& scenario, const std::vector<KeyValue>& overrides,
                       const std::string& format, bool provenance) {
    RunConfig config;
    config.scenario = scenario;
    config.overrides = overrides;
    config.format = parse_output_format(format);
    config.provenance = provenance;
    return config;
  };
  m.def("evaluate", [run_config](const std::string& scenario, const std::vector<KeyValue>& overrides,
                                 const std::string& format, bool provenance) {
    return cmd_evaluate(run_config(scenario, overrides, format, provenance));
  }, py::arg("scenario") = "baseline", py::arg("overrides") = std::vector<KeyValue>{},
        py::arg("format") = "json", py::arg("provenance") = false);
  m.def("sweep", [run_config](const std::string& variable, const std::string& range, int steps,
                              const std::string& scenario, const std::vector<KeyValue>& overrides,
                              const std::string& format) {
    SweepRequest request{variable, range, steps, std::nullopt};
    return cmd_sweep(run_config(scenario, overrides, format, false), request);
  }, py::arg("variable") = "distance", py::arg("range") = "", py::arg("steps") = 101,
        py::arg("scenario") = "baseline", py::arg("overrides") = std::vector<KeyValue>{},
        py::arg("format") = "csv");
  m.def("breakeven", [run_config](const std::string& objective, const std::string& scenario,
                                  const std::vector<KeyValue>& overrides) {
    return cmd_breakeven(run_config(scenario, overrides, "json", false), objective);
  }, py::arg("objective") = "all", py::arg("scenario") = "baseline",
        py::arg("overrides") = std::vector<KeyValue>{});
}
