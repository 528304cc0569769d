"""Prior derivation from incident frequencies and crash-model assembly."""

import json
import statistics

import numpy as np
import pytest

from aerorisk import fixtures
from aerorisk.calibration import (
    FactorId,
    assemble_crash_model,
    crash_model_spec_from_doc,
    derive_priors,
    frequency_table_from_doc,
)
from aerorisk.hazards import HazardSource
from aerorisk.calibration_constants import (
    EXTERNAL_NODE,
    INTERNAL_NODE,
    PRESENT_STATE,
    TARGET_NODE,
)
from aerorisk.errors import (
    CoverageError,
    NoDataForFactorError,
    ParseError,
    RangeError,
    ShapeError,
    UnknownFactorError,
)


def prior_map(priors):
    return {p.factor: p for p in priors}


def test_column_preserves_table_order(frequency_table):
    column = frequency_table.column(FactorId.PE)
    assert column[0][0] == "oncu2014analysis"
    assert column[0][1] == 65.0
    assert len(column) == 7


def test_mean_priors_match_hand_computed_values(frequency_table):
    priors = prior_map(derive_priors(frequency_table, "mean"))
    # Means over the populated cells, divided by 100.
    assert priors[FactorId.PE].p_present == pytest.approx(0.33, abs=1e-12)
    assert priors[FactorId.WE].p_present == pytest.approx(0.07488, abs=1e-12)
    assert priors[FactorId.SCFM].p_present == pytest.approx(0.2756, abs=1e-12)
    assert priors[FactorId.DCQ].p_present == pytest.approx(0.125, abs=1e-12)


def test_every_factor_gets_a_prior(frequency_table):
    priors = derive_priors(frequency_table)
    assert sorted(p.factor.value for p in priors) == sorted(f.value for f in FactorId)
    for prior in priors:
        assert 0.0 < prior.p_present < 1.0


def test_provenance_lists_contributing_references(frequency_table):
    priors = prior_map(derive_priors(frequency_table))
    assert "oncu2014analysis" in priors[FactorId.PE].provenance
    assert len(priors[FactorId.PE].provenance) == 7
    # GL is reported by three references only.
    assert len(priors[FactorId.GL].provenance) == 3


def test_median_policy_uses_the_median(frequency_table):
    priors = prior_map(derive_priors(frequency_table, "median"))
    values = [v for _, v in frequency_table.column(FactorId.PE)]
    assert priors[FactorId.PE].p_present == pytest.approx(
        statistics.median(values) / 100.0, abs=1e-12
    )


def test_unknown_policy_is_rejected(frequency_table):
    with pytest.raises(RangeError):
        derive_priors(frequency_table, "mode")


def test_missing_factor_column_is_an_error():
    table = frequency_table_from_doc(
        {"references": [{"label": "only-pe", "values": {"PE": 50.0}}]}
    )
    with pytest.raises(NoDataForFactorError):
        derive_priors(table)


def test_unknown_factor_code_is_rejected():
    with pytest.raises(UnknownFactorError):
        frequency_table_from_doc(
            {"references": [{"label": "x", "values": {"XYZ": 10.0}}]}
        )


def test_out_of_range_percentage_is_rejected():
    with pytest.raises(RangeError):
        frequency_table_from_doc(
            {"references": [{"label": "x", "values": {"PE": 140.0}}]}
        )


def test_duplicate_reference_label_is_rejected():
    with pytest.raises(ParseError):
        frequency_table_from_doc(
            {
                "references": [
                    {"label": "x", "values": {"PE": 10.0}},
                    {"label": "x", "values": {"PE": 20.0}},
                ]
            }
        )


def test_assembled_model_shape(crash_model):
    assert len(crash_model.node_names) == 14
    assert TARGET_NODE in crash_model
    assert crash_model.parents(TARGET_NODE) == (EXTERNAL_NODE, INTERNAL_NODE)
    for factor in FactorId:
        assert crash_model.parents(factor.value) == ()


def test_root_cpts_encode_the_priors(frequency_table, model_spec):
    priors = derive_priors(frequency_table)
    net = assemble_crash_model(priors, model_spec)
    for prior in priors:
        values = net.values(prior.factor.value)
        assert values[1] == pytest.approx(prior.p_present, abs=1e-12)
        assert net.states(prior.factor.value)[1] == PRESENT_STATE


def test_group_nodes_aggregate_their_factors(crash_model, model_spec):
    external = crash_model.parents(EXTERNAL_NODE)
    internal = crash_model.parents(INTERNAL_NODE)
    assert set(external) == {
        f.value for f in model_spec.factors_in(HazardSource.EXTERNAL)
    }
    assert set(internal) == {
        f.value for f in model_spec.factors_in(HazardSource.INTERNAL)
    }
    assert len(external) == 8 and len(internal) == 3


def test_target_rows_match_the_declared_table(crash_model, model_spec):
    external_states = crash_model.states(EXTERNAL_NODE)
    internal_states = crash_model.states(INTERNAL_NODE)
    values = crash_model.values(TARGET_NODE)
    for (ext, intr), row in model_spec.target_rows.items():
        i = external_states.index(ext)
        j = internal_states.index(intr)
        np.testing.assert_allclose(values[i, j], row, atol=1e-12)


def test_spec_round_trip_from_packaged_document(model_spec):
    doc = json.loads(fixtures.fixture_text("crash_model_spec.json"))
    again = crash_model_spec_from_doc(doc)
    assert again == model_spec


def test_missing_target_row_fails_at_assembly(frequency_table):
    doc = json.loads(fixtures.fixture_text("crash_model_spec.json"))
    doc["target"]["rows"] = doc["target"]["rows"][:-1]
    spec = crash_model_spec_from_doc(doc)
    with pytest.raises(ShapeError):
        assemble_crash_model(derive_priors(frequency_table), spec)


def test_spec_with_missing_key_is_rejected():
    doc = json.loads(fixtures.fixture_text("crash_model_spec.json"))
    del doc["aggregation"]
    with pytest.raises(ParseError):
        crash_model_spec_from_doc(doc)


def test_assembly_requires_a_prior_for_every_factor(model_spec):
    table = frequency_table_from_doc(
        {"references": [{"label": "only-pe", "values": {"PE": 50.0}}]}
    )
    with pytest.raises(CoverageError):
        assemble_crash_model(derive_priors_partial(table), model_spec)


def derive_priors_partial(table):
    """Priors for only the populated factors, bypassing full coverage."""
    from aerorisk.calibration import FactorPrior

    priors = []
    for factor in FactorId:
        column = table.column(factor)
        if column:
            values = [v for _, v in column]
            priors.append(
                FactorPrior(
                    factor=factor,
                    p_present=statistics.mean(values) / 100.0,
                    provenance=tuple(label for label, _ in column),
                )
            )
    return tuple(priors)
