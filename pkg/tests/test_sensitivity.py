"""One-way sensitivity: clamped sweeps, bar ordering, infeasible states."""

import pytest

from aerorisk.errors import UnknownNodeError, UnknownStateError
from aerorisk.inference import variable_elimination_posterior
from aerorisk.network import CPT, NodeSpec, build_network
from aerorisk.sensitivity import sensitivity_tornado

VERY_HIGH = "very high"
GROUPS = ["external sources", "internal sources"]


def test_rows_are_sorted_by_bar_length_descending(crash_model):
    analysis = sensitivity_tornado(crash_model, "Crash", VERY_HIGH, GROUPS)
    lengths = [row.bar_length for row in analysis.rows]
    assert lengths == sorted(lengths, reverse=True)
    assert analysis.rows[0].node == "external sources"


def test_bar_envelope_matches_min_and_max(crash_model):
    analysis = sensitivity_tornado(crash_model, "Crash", VERY_HIGH, GROUPS)
    for row in analysis.rows:
        present = [v for v in row.values if v is not None]
        assert row.low == min(present)
        assert row.high == max(present)
        assert row.bar_length == pytest.approx(row.high - row.low)


def test_values_are_clamped_posteriors(crash_model):
    analysis = sensitivity_tornado(crash_model, "Crash", VERY_HIGH, GROUPS)
    row = next(r for r in analysis.rows if r.node == "external sources")
    for state, value in zip(row.states, row.values):
        clamped = variable_elimination_posterior(
            crash_model, {"external sources": state}, "Crash"
        )
        assert value == clamped[VERY_HIGH]


def test_baseline_honors_base_evidence(crash_model):
    plain = sensitivity_tornado(crash_model, "Crash", VERY_HIGH, GROUPS)
    shifted = sensitivity_tornado(
        crash_model, "Crash", VERY_HIGH, GROUPS, base_evidence={"PE": "YES"}
    )
    assert shifted.baseline > plain.baseline
    expected = variable_elimination_posterior(crash_model, {"PE": "YES"}, "Crash")
    assert shifted.baseline == expected[VERY_HIGH]


def test_sweeping_factor_roots_ranks_single_factors(crash_model):
    factors = ["PE", "SCFM", "LEP"]
    analysis = sensitivity_tornado(crash_model, "Crash", VERY_HIGH, factors)
    assert {row.node for row in analysis.rows} == set(factors)
    for row in analysis.rows:
        assert row.bar_length > 0


def test_impossible_clamp_is_reported_as_none():
    nodes = [NodeSpec("A", ("NO", "YES")), NodeSpec("B", ("NO", "YES"))]
    cpts = [
        CPT("A", (), {(): (1.0, 0.0)}),
        CPT("B", ("A",), {("NO",): (0.3, 0.7), ("YES",): (0.9, 0.1)}),
    ]
    net = build_network(nodes, cpts)
    analysis = sensitivity_tornado(net, "B", "YES", ["A"])
    row = analysis.rows[0]
    assert row.values[row.states.index("YES")] is None
    assert row.values[row.states.index("NO")] == pytest.approx(0.7)
    assert row.low == row.high == pytest.approx(0.7)
    assert row.bar_length == 0.0


def test_target_cannot_be_a_sensitivity_node(crash_model):
    with pytest.raises(ValueError):
        sensitivity_tornado(crash_model, "Crash", VERY_HIGH, ["Crash"])


def test_unknown_names_are_rejected(crash_model):
    with pytest.raises(UnknownNodeError):
        sensitivity_tornado(crash_model, "Nope", VERY_HIGH, GROUPS)
    with pytest.raises(UnknownStateError):
        sensitivity_tornado(crash_model, "Crash", "apocalyptic", GROUPS)
    with pytest.raises(UnknownNodeError):
        sensitivity_tornado(crash_model, "Crash", VERY_HIGH, ["Nope"])


def test_doc_shape(crash_model):
    analysis = sensitivity_tornado(crash_model, "Crash", VERY_HIGH, GROUPS)
    doc = analysis.as_doc()
    assert list(doc) == ["target", "target_state", "baseline", "rows"]
    for row_doc in doc["rows"]:
        assert list(row_doc) == [
            "node", "states", "values", "low", "high", "bar_length",
        ]
