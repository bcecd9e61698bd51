#include "wtecool/sweeps.hpp"

#include <cstdio>

#include "wtecool/errors.hpp"
#include "wtecool/metrics.hpp"
#include "wtecool/thresholds.hpp"

namespace wtecool {

std::string_view to_string(SweepVariable v) noexcept {
  switch (v) {
    case SweepVariable::rho:
      return "rho";
    case SweepVariable::lhv:
      return "lhv";
    case SweepVariable::distance:
      return "distance";
    case SweepVariable::t_wb:
      return "t_wb";
  }
  return "";
}

SweepVariable parse_sweep_variable(std::string_view name) {
  if (name == "rho") return SweepVariable::rho;
  if (name == "lhv") return SweepVariable::lhv;
  if (name == "distance" || name == "length_km") return SweepVariable::distance;
  if (name == "t_wb") return SweepVariable::t_wb;
  throw UnknownName("unknown sweep variable '" + std::string(name) +
                    "' (expected rho, lhv, distance or t_wb)");
}

std::string_view to_string(Regime r) noexcept {
  switch (r) {
    case Regime::full_coverage:
      return "full-coverage";
    case Regime::partial:
      return "partial";
    case Regime::infeasible:
      return "infeasible";
  }
  return "";
}

void validate(const SweepSpec& spec) {
  if (!(spec.lo < spec.hi)) {
    throw InvalidParameter("sweep.range", "requires lo < hi");
  }
  if (spec.steps < 2) {
    throw InvalidParameter("sweep.steps", "requires at least 2 steps");
  }
  if (spec.secondary) {
    if (spec.secondary->variable == spec.variable) {
      throw InvalidParameter("sweep.levels", "secondary variable repeats the swept variable");
    }
    if (spec.secondary->values.empty()) {
      throw InvalidParameter("sweep.levels", "at least one level is required");
    }
  }
  const bool needs_climate =
      spec.variable == SweepVariable::t_wb ||
      (spec.secondary && spec.secondary->variable == SweepVariable::t_wb);
  if (needs_climate && !spec.climate) {
    throw InvalidParameter("sweep.climate", "t_wb sweeps need a climate band");
  }
}

std::vector<double> linear_grid(double lo, double hi, int steps) {
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(steps));
  const double step = (hi - lo) / static_cast<double>(steps - 1);
  for (int i = 0; i < steps; ++i) {
    grid.push_back(i == steps - 1 ? hi : lo + step * static_cast<double>(i));
  }
  return grid;
}

namespace {

SystemConfig apply(const SystemConfig& base, SweepVariable variable, double value,
                   const SweepSpec& spec) {
  SystemConfig config = base;
  switch (variable) {
    case SweepVariable::rho: {
      DataCenter dc = base.dc.with_rho(value);
      if (spec.hold_load_ratios) {
        const double scale = value / base.dc.rho();
        dc = dc.with_w_aux(base.dc.w_aux() * scale);
        const ParasiticModel& p = base.corridor.parasitic();
        config.corridor = Corridor(base.corridor.length_km(), base.corridor.beta(),
                                   ParasiticModel(p.kappa0() * scale, p.kappa1(),
                                                  p.kappa2() * scale));
      }
      config.dc = dc;
      break;
    }
    case SweepVariable::lhv:
      config.plant = base.plant.with_lhv(value);
      break;
    case SweepVariable::distance:
      config.corridor = base.corridor.with_length(value);
      break;
    case SweepVariable::t_wb: {
      const ClimateResponse response = climate_eval(*spec.climate, value);
      config.dc = base.dc.with_cooling(response.gamma, response.cop_m);
      break;
    }
  }
  return config;
}

std::string level_label(SweepVariable variable, double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s=%g", std::string(to_string(variable)).c_str(), value);
  return buf;
}

void evaluate_point(const SystemConfig& config, const SweepSpec& spec, SweepPoint& point) {
  const EnergyFlows coupled = evaluate_flows(config, Mode::coupled);
  point.pue_standalone = pue_standalone(config.dc);
  point.pue_coupled = pue_elec(coupled, config.dc);
  point.delta_pue = delta_pue(point.pue_standalone, point.pue_coupled);
  point.f = coupled.f;
  const ExergyReport exergy = exergy_report(config.plant, config.link, coupled);
  point.eta_ex = exergy.eta_ex;
  point.eta_ex_net = exergy.eta_ex_net;
  const SuperiorityVerdict verdict = superiority_check(coupled, config.link);
  point.delta_ex_net = verdict.margin;

  if (spec.screening && spec.variable == SweepVariable::distance) {
    try {
      point.avoided_net = avoided_electricity_net(*spec.screening, config.corridor.length_km());
    } catch (const Infeasible&) {
      point.avoided_net.reset();
    }
  }

  if (point.f == 1.0) {
    point.regime = Regime::full_coverage;
  } else if (verdict.holds) {
    point.regime = Regime::partial;
  } else {
    point.regime = Regime::infeasible;
    point.infeasible_reason = "exergy_margin";
  }
}

}  // namespace

std::vector<SweepPoint> sweep(const SweepSpec& spec) {
  validate(spec);
  const std::vector<double> grid = linear_grid(spec.lo, spec.hi, spec.steps);

  struct Series {
    std::string label;
    std::optional<double> level;
  };
  std::vector<Series> series;
  if (spec.secondary) {
    for (double v : spec.secondary->values) {
      series.push_back({level_label(spec.secondary->variable, v), v});
    }
  } else {
    series.push_back({"", std::nullopt});
  }

  std::vector<SweepPoint> points;
  points.reserve(series.size() * grid.size());
  for (const Series& s : series) {
    for (double x : grid) {
      SweepPoint point;
      point.x = x;
      point.series_label = s.label;
      try {
        SystemConfig config = spec.fixed;
        if (s.level) {
          config = apply(config, spec.secondary->variable, *s.level, spec);
        }
        config = apply(config, spec.variable, x, spec);
        evaluate_point(config, spec, point);
      } catch (const InvalidParameter& e) {
        point = SweepPoint{};
        point.x = x;
        point.series_label = s.label;
        point.regime = Regime::infeasible;
        point.infeasible_reason = e.field();
      }
      points.push_back(std::move(point));
    }
  }
  return points;
}

AnnotatedSeries annotate_thresholds(std::vector<SweepPoint> series, const SweepSpec& spec) {
  if (spec.variable != SweepVariable::distance) {
    throw InvalidParameter("sweep.variable", "thresholds annotate distance sweeps only");
  }
  const SystemConfig& config = spec.fixed;
  auto mark = [&spec](DistanceResult d, bool numeric) {
    return ThresholdMarker{d, numeric, d.is_finite() && d.km >= spec.lo && d.km <= spec.hi};
  };

  AnnotatedSeries out;
  out.points = std::move(series);

  if (cooling_requirement(config.dc) > 0.0) {
    out.l_cov = mark(coverage_distance(config), false);
  } else {
    out.l_cov = mark({DistanceKind::unbounded, 0.0}, false);
  }

  const ParasiticModel& parasitic = config.corridor.parasitic();
  const double w_par0 = parasitic_power(parasitic, config.dc.w_it(), 0.0);
  if (parasitic.distance_independent() && w_par0 > 0.0) {
    out.l_ex = mark(thermoeconomic_distance(config.plant, config.corridor, config.link, w_par0),
                    false);
  } else {
    out.l_ex = mark(solve_breakeven_distance(config, BreakevenObjective::exergy), true);
  }

  if (spec.screening) {
    out.l_star = mark(breakeven_corridor(*spec.screening), false);
  }
  return out;
}

}  // namespace wtecool
