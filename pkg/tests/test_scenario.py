"""Scenario engine: deltas, direction warnings, comparison, serialization."""

import json

import pytest

from aerorisk import fixtures
from aerorisk.errors import MixedTargetsError, ParseError, UnknownStateError
from aerorisk.scenario import (
    Direction,
    Scenario,
    compare_scenarios,
    diagnostic_query,
    direction_warnings,
    run_scenario,
    scenario_from_doc,
    scenario_loads,
    scenario_to_doc,
)

VERY_HIGH = "very high"


def test_shipped_scenario_names():
    assert set(fixtures.default_scenario_names()) == {
        "pilot-error",
        "external-pressure",
        "internal-degradation",
        "crash-diagnosis",
    }


def test_deltas_are_posterior_minus_prior_and_conserve_mass(crash_model):
    result = run_scenario(crash_model, fixtures.default_scenario("pilot-error"))
    for delta, post, pre in zip(
        result.deltas, result.posterior.probabilities, result.prior.probabilities
    ):
        assert delta == pytest.approx(post - pre, abs=1e-15)
    assert sum(result.deltas) == pytest.approx(0.0, abs=1e-12)


def test_observing_a_cause_raises_crash_mass(crash_model):
    result = run_scenario(crash_model, fixtures.default_scenario("pilot-error"))
    assert result.posterior[VERY_HIGH] > result.prior[VERY_HIGH]
    assert result.warnings == ()


def test_diagnostic_scenario_raises_the_suspect_cause(crash_model):
    scenario = fixtures.default_scenario("crash-diagnosis")
    result = run_scenario(crash_model, scenario)
    assert scenario.direction is Direction.DIAGNOSTIC
    assert result.posterior["frequent"] > result.prior["frequent"]
    assert result.posterior["remote"] < result.prior["remote"]


def test_diagnostic_query_matches_run_scenario(crash_model):
    scenario = fixtures.default_scenario("crash-diagnosis")
    direct = diagnostic_query(crash_model, scenario.evidence, scenario.target)
    result = run_scenario(crash_model, scenario)
    assert direct.probabilities == result.posterior.probabilities


def test_causal_scenario_observing_downstream_warns(crash_model):
    scenario = Scenario(
        name="inverted",
        target="PE",
        direction=Direction.CAUSAL,
        evidence={"Crash": VERY_HIGH},
    )
    warnings = direction_warnings(crash_model, scenario)
    assert len(warnings) == 1
    assert "descendants" in warnings[0]


def test_diagnostic_scenario_with_no_downstream_evidence_warns(crash_model):
    scenario = Scenario(
        name="sideways",
        target="Crash",
        direction=Direction.DIAGNOSTIC,
        evidence={"PE": "YES"},
    )
    warnings = direction_warnings(crash_model, scenario)
    assert len(warnings) == 1
    assert "not an ancestor" in warnings[0]


def test_warnings_travel_on_the_result(crash_model):
    scenario = Scenario(
        name="inverted",
        target="PE",
        direction=Direction.CAUSAL,
        evidence={"Crash": VERY_HIGH},
    )
    result = run_scenario(crash_model, scenario)
    assert result.warnings and "descendants" in result.warnings[0]


def test_compare_orders_by_posterior_mass(crash_model):
    results = [
        run_scenario(crash_model, fixtures.default_scenario(name))
        for name in ("pilot-error", "external-pressure", "internal-degradation")
    ]
    report = compare_scenarios(results, VERY_HIGH)
    masses = [row.mass for row in report.rows]
    assert masses == sorted(masses, reverse=True)
    assert report.rows[0].name == "internal systems degraded"
    assert report.target == "Crash"


def test_compare_rejects_mixed_targets(crash_model):
    causal = run_scenario(crash_model, fixtures.default_scenario("pilot-error"))
    diagnostic = run_scenario(crash_model, fixtures.default_scenario("crash-diagnosis"))
    with pytest.raises(MixedTargetsError):
        compare_scenarios([causal, diagnostic], VERY_HIGH)


def test_compare_rejects_empty_input():
    with pytest.raises(MixedTargetsError):
        compare_scenarios([], VERY_HIGH)


def test_compare_rejects_unknown_state(crash_model):
    result = run_scenario(crash_model, fixtures.default_scenario("pilot-error"))
    with pytest.raises(UnknownStateError):
        compare_scenarios([result], "astronomical")


def test_scenario_round_trip():
    scenario = fixtures.default_scenario("external-pressure")
    doc = scenario_to_doc(scenario)
    assert scenario_from_doc(doc) == scenario
    assert scenario_loads(json.dumps(doc)) == scenario


def test_scenario_document_requires_name_and_target():
    with pytest.raises(ParseError):
        scenario_from_doc({"target": "Crash", "evidence": {}})
    with pytest.raises(ParseError):
        scenario_loads("{broken")


def test_direction_labels():
    assert Direction.from_label("Causal") is Direction.CAUSAL
    assert Direction.from_label("Diagnostic") is Direction.DIAGNOSTIC
    with pytest.raises(ParseError):
        Direction.from_label("Upwards")


def test_result_doc_shape(crash_model):
    result = run_scenario(crash_model, fixtures.default_scenario("pilot-error"))
    doc = result.as_doc()
    assert list(doc) == [
        "name", "target", "states", "prior", "posterior", "deltas", "warnings",
    ]
    assert len(doc["prior"]) == len(doc["states"]) == len(doc["posterior"])
