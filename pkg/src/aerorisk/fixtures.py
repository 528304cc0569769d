"""Loaders for the data files shipped with the package.

Each function parses the packaged JSON fresh on every call, so callers can
mutate the returned structures freely.
"""

from __future__ import annotations

import json
from importlib import resources

from .calibration import (
    CrashModelSpec,
    FactorPrior,
    FrequencyTable,
    assemble_crash_model,
    crash_model_spec_from_doc,
    derive_priors,
    frequency_table_from_doc,
)
from .hazards import HazardRecord, registry_from_doc
from .network import BayesianNetwork
from .scenario import Scenario, scenario_from_doc

__all__ = [
    "fixture_path",
    "fixture_text",
    "default_registry",
    "default_frequency_table",
    "default_crash_model_spec",
    "default_priors",
    "default_crash_model",
    "default_scenario",
    "default_scenario_names",
]

_SCENARIO_FILES = {
    "pilot-error": "scenarios/pilot_error.json",
    "external-pressure": "scenarios/external_pressure.json",
    "internal-degradation": "scenarios/internal_degradation.json",
    "crash-diagnosis": "scenarios/crash_diagnosis.json",
}


def fixture_path(name: str):
    """Filesystem path of a packaged data file (for CLI defaults and docs)."""
    return resources.files("aerorisk").joinpath("data", name)


def fixture_text(name: str) -> str:
    return fixture_path(name).read_text(encoding="utf-8")


def default_registry() -> list[HazardRecord]:
    """The shipped eleven-hazard delivery-mission registry."""
    return registry_from_doc(json.loads(fixture_text("hazard_registry.json")))


def default_frequency_table() -> FrequencyTable:
    """The shipped incident frequency table."""
    return frequency_table_from_doc(json.loads(fixture_text("crash_frequencies.json")))


def default_crash_model_spec() -> CrashModelSpec:
    """The shipped crash model assembly description."""
    return crash_model_spec_from_doc(json.loads(fixture_text("crash_model_spec.json")))


def default_priors(policy: str = "mean") -> tuple[FactorPrior, ...]:
    return derive_priors(default_frequency_table(), policy)


def default_crash_model(policy: str = "mean") -> BayesianNetwork:
    """The fully assembled crash model under the given prior policy."""
    return assemble_crash_model(default_priors(policy), default_crash_model_spec())


def default_scenario_names() -> tuple[str, ...]:
    return tuple(_SCENARIO_FILES)


def default_scenario(name: str) -> Scenario:
    """One of the shipped scenario documents, by short name."""
    if name not in _SCENARIO_FILES:
        raise KeyError(
            f"unknown scenario {name!r}; shipped: {sorted(_SCENARIO_FILES)}"
        )
    return scenario_from_doc(json.loads(fixture_text(_SCENARIO_FILES[name])))
