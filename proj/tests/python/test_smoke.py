import json
import math

import pytest

import wtecool


def representative_plant():
    return wtecool.WtePlant.from_throughput(1500.0, 10.0, 0.9, 0.25, 0.45 / 0.675)


def test_flows_and_metrics():
    config = wtecool.SystemConfig(
        representative_plant(),
        wtecool.Corridor(0.0, 0.005, wtecool.ParasiticModel(2.8125)),
        wtecool.CouplingLink(0.75, 300.15, 280.15),
        wtecool.DataCenter(40.0, 1.0, 1.35, 3.2, 5.0),
    )
    flows = wtecool.evaluate_flows(config)
    assert flows.q_cool == pytest.approx(58.59375)
    assert flows.f == 1.0
    assert wtecool.pue_standalone(config.dc) == pytest.approx(1.35)
    report = wtecool.exergy_report(config.plant, config.link, flows)
    compact = wtecool.exergy_efficiency_compact(config.plant, config.corridor, config.link)
    assert report.eta_ex == pytest.approx(compact, rel=1e-12)
    assert wtecool.coverage_distance(config).km == pytest.approx(16.3288, abs=1e-4)


def test_screening_breakeven():
    s = wtecool.ScreeningInputs.from_natural_units(78.125, 0.75, 5.0, 6.0, 0.04, 0.005, 8.0)
    assert wtecool.avoided_electricity_net(s, 0.0) == pytest.approx(8.90625)
    d = wtecool.breakeven_corridor(s)
    assert d.kind == wtecool.DistanceKind.finite
    assert d.km == pytest.approx(-math.log(8.0 / 8.90625) / 0.005)


def test_lcoc():
    periods = [wtecool.CostPeriod(t, opex_it=c, k_service=10.0) for t, c in enumerate([100.0, 110.0, 120.0])]
    assert wtecool.lcoc(periods, 0.07) == pytest.approx(10.954928613642725, rel=1e-12)
    with pytest.raises(ValueError):
        wtecool.lcoc([], 0.07)


def test_bisection_with_python_callable():
    assert wtecool.bisect_breakeven(lambda x: 5.0 - x).km == pytest.approx(5.0, abs=1e-6)


def test_invalid_parameter_maps_to_value_error():
    with pytest.raises(wtecool.InvalidParameter, match="dc.rho"):
        wtecool.DataCenter(40.0, 1.5, 1.0, 0.0, 5.0)


def test_command_layer():
    report = json.loads(wtecool.evaluate("baseline"))
    assert report["scenario"]["beta"] == 0.005
    csv = wtecool.sweep("distance", "0:60", 7, "representative")
    header = next(line for line in csv.splitlines() if not line.startswith("#"))
    assert header.startswith("series,distance,regime")
    assert "representative" in wtecool.scenario_names()
    with pytest.raises(wtecool.UnknownName):
        wtecool.evaluate("atlantis")
    resolved = wtecool.resolve_scenario("baseline", [("beta", "0.01")])
    assert resolved.system.corridor.beta == 0.01
