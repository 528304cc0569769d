"""Calibration of the crash model from published incident frequency data.

Root factor priors come from a frequency table: per literature reference, a
partial mapping from contributing factor to its reported share of incidents
(a percentage). A policy (mean or median over the populated cells) turns
each factor's column into a single prior probability of the factor being
present on a mission.

`assemble_crash_model` then builds the full network from those priors plus
a `CrashModelSpec`: eleven two-state root factors feeding two four-state
aggregation nodes (one per hazard source group) that combine into the
five-state crash severity target. The grouping, aggregation weights and
parameters, and the target CPT all live in the `CrashModelSpec` document so
they can be corrected without touching code.
"""

from __future__ import annotations

import json
import statistics
from dataclasses import dataclass
from enum import Enum
from typing import Mapping, Sequence

from .calibration_constants import *  # noqa: F401,F403  (re-export node name defaults)
from .cpt_builders import ranked_aggregation_cpt
from .errors import (
    CoverageError,
    NoDataForFactorError,
    ParseError,
    RangeError,
    UnknownFactorError,
)
from .hazards import HazardSource
from .network import CPT, BayesianNetwork, NodeKind, NodeSpec, build_network

__all__ = [
    "FactorId",
    "FrequencyTable",
    "FactorPrior",
    "CrashModelSpec",
    "load_frequency_table",
    "frequency_table_from_doc",
    "derive_priors",
    "crash_model_spec_from_doc",
    "load_crash_model_spec",
    "assemble_crash_model",
]


class FactorId(Enum):
    """The eleven observable contributing factors of the crash model."""

    PE = "PE"  # pilot error
    SCFM = "SCFM"  # system component failure or malfunction
    WE = "WE"  # weather effects
    GL = "GL"  # GPS loss
    ATMF = "ATMF"  # air traffic management factor
    IAC = "IAC"  # interaction with automation component
    SAOD = "SAOD"  # security attack on the drone
    MC = "MC"  # midair collision
    DCQ = "DCQ"  # degraded communication quality
    ACMF = "ACMF"  # autopilot controller module failure
    LEP = "LEP"  # loss of electrical power

    @classmethod
    def from_label(cls, label: str) -> "FactorId":
        for member in cls:
            if member.value == label:
                return member
        raise UnknownFactorError(f"unknown factor code {label!r}")


@dataclass(frozen=True)
class FrequencyTable:
    """Reported incident shares: reference label -> factor -> percentage."""

    references: Mapping[str, Mapping[FactorId, float]]

    def __post_init__(self):
        object.__setattr__(
            self,
            "references",
            {label: dict(values) for label, values in self.references.items()},
        )

    def column(self, factor: FactorId) -> list[tuple[str, float]]:
        """Populated (reference, percentage) pairs for one factor, in table order."""
        return [
            (label, values[factor])
            for label, values in self.references.items()
            if factor in values
        ]


@dataclass(frozen=True)
class FactorPrior:
    """A derived prior for a factor being present, with its provenance."""

    factor: FactorId
    p_present: float
    provenance: tuple[str, ...]


def frequency_table_from_doc(doc: Mapping) -> FrequencyTable:
    """Parse a frequency table document."""
    if not isinstance(doc, Mapping) or "references" not in doc:
        raise ParseError("frequency document must have a 'references' array")
    references: dict[str, dict[FactorId, float]] = {}
    for item in doc["references"]:
        try:
            label = item["label"]
            values = item["values"]
        except (KeyError, TypeError) as exc:
            raise ParseError(f"malformed frequency reference entry: {exc!r}") from None
        if label in references:
            raise ParseError(f"duplicate reference label {label!r}")
        parsed: dict[FactorId, float] = {}
        for code, value in values.items():
            factor = FactorId.from_label(code)
            value = float(value)
            if not 0.0 <= value <= 100.0:
                raise RangeError(
                    f"reference {label!r}: {code} = {value!r} outside [0, 100]"
                )
            parsed[factor] = value
        references[label] = parsed
    return FrequencyTable(references=references)


def load_frequency_table(path) -> FrequencyTable:
    with open(path, "r", encoding="utf-8") as handle:
        text = handle.read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"frequency table is not valid JSON: {exc}") from None
    return frequency_table_from_doc(doc)


def derive_priors(
    table: FrequencyTable, policy: str = "mean"
) -> tuple[FactorPrior, ...]:
    """Aggregate each factor's populated cells into a prior probability.

    `policy` is "mean" or "median". Every factor must be populated by at
    least one reference; otherwise `NoDataForFactorError` names the gap.
    """
    policy = policy.lower()
    if policy not in ("mean", "median"):
        raise RangeError(f"unknown aggregation policy {policy!r}")
    priors = []
    for factor in FactorId:
        column = table.column(factor)
        if not column:
            raise NoDataForFactorError(factor.value)
        values = [value for _, value in column]
        aggregate = statistics.mean(values) if policy == "mean" else statistics.median(values)
        priors.append(
            FactorPrior(
                factor=factor,
                p_present=aggregate / 100.0,
                provenance=tuple(label for label, _ in column),
            )
        )
    return tuple(priors)


@dataclass(frozen=True)
class CrashModelSpec:
    """Everything needed to assemble the crash network except the priors.

    * `groups`: factor -> source group (which aggregation node it feeds),
    * `weights`: factor -> aggregation weight,
    * `cutpoints` / `half_width`: ranked aggregation kernel parameters,
    * `group_states`: ordered states of the aggregation nodes, most severe
      first,
    * `target_states`: ordered states of the target, least severe first,
    * `target_rows`: (external state, internal state) -> target distribution,
    * node names for the two aggregation nodes and the target.
    """

    groups: Mapping[FactorId, HazardSource]
    weights: Mapping[FactorId, float]
    cutpoints: tuple[float, ...]
    half_width: float
    group_states: tuple[str, ...]
    target_states: tuple[str, ...]
    target_rows: Mapping[tuple[str, str], tuple[float, ...]]
    external_node: str
    internal_node: str
    target_node: str

    def __post_init__(self):
        object.__setattr__(self, "groups", dict(self.groups))
        object.__setattr__(self, "weights", dict(self.weights))
        object.__setattr__(self, "cutpoints", tuple(self.cutpoints))
        object.__setattr__(self, "group_states", tuple(self.group_states))
        object.__setattr__(self, "target_states", tuple(self.target_states))
        object.__setattr__(
            self,
            "target_rows",
            {tuple(key): tuple(row) for key, row in self.target_rows.items()},
        )

    def factors_in(self, group: HazardSource) -> tuple[FactorId, ...]:
        return tuple(f for f in FactorId if self.groups.get(f) is group)


def crash_model_spec_from_doc(doc: Mapping) -> CrashModelSpec:
    """Parse a crash model description document."""
    try:
        factors = doc["factors"]
        aggregation = doc["aggregation"]
        target = doc["target"]
        groups = {
            FactorId.from_label(code): HazardSource.from_label(entry["group"])
            for code, entry in factors.items()
        }
        weights = {
            FactorId.from_label(code): float(entry["weight"])
            for code, entry in factors.items()
        }
        rows = {
            (row["external"], row["internal"]): tuple(
                float(p) for p in row["probabilities"]
            )
            for row in target["rows"]
        }
        return CrashModelSpec(
            groups=groups,
            weights=weights,
            cutpoints=tuple(float(c) for c in aggregation["cutpoints"]),
            half_width=float(aggregation["half_width"]),
            group_states=tuple(aggregation["group_states"]),
            target_states=tuple(target["states"]),
            target_rows=rows,
            external_node=doc.get("external_node", EXTERNAL_NODE),
            internal_node=doc.get("internal_node", INTERNAL_NODE),
            target_node=doc.get("target_node", TARGET_NODE),
        )
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed crash model description: {exc!r}") from None


def load_crash_model_spec(path) -> CrashModelSpec:
    with open(path, "r", encoding="utf-8") as handle:
        text = handle.read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"crash model description is not valid JSON: {exc}") from None
    return crash_model_spec_from_doc(doc)


def assemble_crash_model(
    priors: Sequence[FactorPrior], spec: CrashModelSpec
) -> BayesianNetwork:
    """Build the crash network from factor priors and the model description.

    Roots are two-state (NO, YES) observables with P(YES) = prior. Each
    source group's factors feed a ranked aggregation node; the two
    aggregation nodes combine into the target through the recorded target
    rows of the model description.
    """
    by_factor: dict[FactorId, FactorPrior] = {}
    for prior in priors:
        if prior.factor in by_factor:
            raise CoverageError(f"duplicate prior for factor {prior.factor.value}")
        by_factor[prior.factor] = prior
    missing = [f.value for f in FactorId if f not in by_factor]
    if missing:
        raise CoverageError(f"missing priors for factors: {missing}")
    uncovered = [f.value for f in FactorId if f not in spec.groups]
    if uncovered:
        raise CoverageError(f"model description assigns no group to: {uncovered}")
    for factor, prior in by_factor.items():
        if not 0.0 <= prior.p_present <= 1.0:
            raise RangeError(
                f"prior for {factor.value} outside [0, 1]: {prior.p_present!r}"
            )

    nodes: list[NodeSpec] = []
    cpts: list[CPT] = []
    for factor in FactorId:
        spec_node = NodeSpec(factor.value, (ABSENT_STATE, PRESENT_STATE), NodeKind.OBSERVABLE)
        nodes.append(spec_node)
        p = by_factor[factor].p_present
        cpts.append(CPT(child=factor.value, parents=(), rows={(): (1.0 - p, p)}))

    group_nodes = {
        HazardSource.EXTERNAL: NodeSpec(
            spec.external_node, spec.group_states, NodeKind.INTERMEDIATE
        ),
        HazardSource.INTERNAL: NodeSpec(
            spec.internal_node, spec.group_states, NodeKind.INTERMEDIATE
        ),
    }
    factor_specs = {node.name: node for node in nodes}
    for group, group_node in group_nodes.items():
        members = spec.factors_in(group)
        if not members:
            raise CoverageError(f"no factors assigned to the {group.value} group")
        nodes.append(group_node)
        cpts.append(
            ranked_aggregation_cpt(
                child=group_node,
                parents=[factor_specs[f.value] for f in members],
                weights=[spec.weights[f] for f in members],
                cutpoints=spec.cutpoints,
                half_width=spec.half_width,
            )
        )

    target_node = NodeSpec(spec.target_node, spec.target_states, NodeKind.TARGET)
    nodes.append(target_node)
    cpts.append(
        CPT(
            child=target_node.name,
            parents=(spec.external_node, spec.internal_node),
            rows=dict(spec.target_rows),
        )
    )
    return build_network(nodes, cpts)
