"""What-if analysis over a built network.

A scenario names a target node, a set of hard observations, and a declared
direction of reasoning: causal scenarios observe causes and read the
target's marginal downstream, diagnostic scenarios observe effects and read
an upstream node. The direction is advisory; both run through the same
exact inference, and a scenario whose evidence does not match its declared
direction still runs, with the mismatch reported as a warning.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from typing import Mapping, Sequence

from .errors import MixedTargetsError, ParseError, UnknownStateError
from .inference import Distribution, Evidence, variable_elimination_posterior
from .network import BayesianNetwork

__all__ = [
    "Direction",
    "Scenario",
    "ScenarioResult",
    "ComparisonRow",
    "ComparisonReport",
    "run_scenario",
    "diagnostic_query",
    "compare_scenarios",
    "direction_warnings",
    "scenario_from_doc",
    "scenario_to_doc",
    "scenario_load",
    "scenario_loads",
]


class Direction(Enum):
    """Declared reasoning direction of a scenario."""

    CAUSAL = "Causal"
    DIAGNOSTIC = "Diagnostic"

    @classmethod
    def from_label(cls, label: str) -> "Direction":
        for member in cls:
            if member.value == label:
                return member
        raise ParseError(f"unknown direction {label!r}")


@dataclass(frozen=True)
class Scenario:
    """A named query: observations plus the node whose posterior is wanted."""

    name: str
    target: str
    direction: Direction
    evidence: Mapping[str, str]

    def __post_init__(self):
        object.__setattr__(self, "evidence", dict(self.evidence))


@dataclass(frozen=True)
class ScenarioResult:
    """Prior and posterior target distributions with their per-state deltas."""

    name: str
    target: str
    prior: Distribution
    posterior: Distribution
    deltas: tuple[float, ...]
    warnings: tuple[str, ...] = ()

    def as_doc(self) -> dict:
        """Wire shape shared by the CLI, reports, and the HTTP service."""
        return {
            "name": self.name,
            "target": self.target,
            "states": list(self.posterior.states),
            "prior": list(self.prior.probabilities),
            "posterior": list(self.posterior.probabilities),
            "deltas": list(self.deltas),
            "warnings": list(self.warnings),
        }


@dataclass(frozen=True)
class ComparisonRow:
    name: str
    mass: float
    delta_vs_prior: float


@dataclass(frozen=True)
class ComparisonReport:
    """Scenario ranking on one target state, most probability mass first."""

    target: str
    state: str
    rows: tuple[ComparisonRow, ...]


def direction_warnings(net: BayesianNetwork, scenario: Scenario) -> tuple[str, ...]:
    """Flag evidence that contradicts the declared reasoning direction.

    Causal: no evidence node should be a descendant of the target.
    Diagnostic: the target should be an ancestor of at least one evidence
    node. Mixed queries are legal, so findings are warnings, not errors.
    """
    warnings: list[str] = []
    if scenario.direction is Direction.CAUSAL:
        downstream = net.descendants(scenario.target)
        offending = sorted(set(scenario.evidence) & downstream)
        if offending:
            warnings.append(
                f"causal scenario {scenario.name!r} observes descendants of "
                f"{scenario.target!r}: {offending}"
            )
    else:
        upstream_of = {
            node for node in scenario.evidence if scenario.target in net.ancestors(node)
        }
        if scenario.evidence and not upstream_of:
            warnings.append(
                f"diagnostic scenario {scenario.name!r}: target {scenario.target!r} "
                f"is not an ancestor of any observed node"
            )
    return tuple(warnings)


def run_scenario(net: BayesianNetwork, scenario: Scenario) -> ScenarioResult:
    """Run one scenario: prior, posterior, and per-state deltas on the target."""
    prior = variable_elimination_posterior(net, {}, scenario.target)
    posterior = variable_elimination_posterior(net, scenario.evidence, scenario.target)
    deltas = tuple(
        post - pre for post, pre in zip(posterior.probabilities, prior.probabilities)
    )
    return ScenarioResult(
        name=scenario.name,
        target=scenario.target,
        prior=prior,
        posterior=posterior,
        deltas=deltas,
        warnings=direction_warnings(net, scenario),
    )


def diagnostic_query(
    net: BayesianNetwork, observed: Evidence, query: str
) -> Distribution:
    """Posterior of an upstream node given downstream observations."""
    return variable_elimination_posterior(net, observed, query)


def compare_scenarios(
    results: Sequence[ScenarioResult], state: str
) -> ComparisonReport:
    """Rank results by posterior mass on one state, descending.

    All results must share the same target node and state space; ties are
    broken by scenario name, ascending.
    """
    if not results:
        raise MixedTargetsError("no scenario results to compare")
    first = results[0]
    for result in results[1:]:
        if (
            result.target != first.target
            or result.posterior.states != first.posterior.states
        ):
            raise MixedTargetsError(
                f"scenario {result.name!r} targets {result.target!r}, "
                f"expected {first.target!r} with matching states"
            )
    if state not in first.posterior.states:
        raise UnknownStateError(first.target, state)
    index = first.posterior.states.index(state)
    rows = [
        ComparisonRow(
            name=result.name,
            mass=result.posterior.probabilities[index],
            delta_vs_prior=result.deltas[index],
        )
        for result in results
    ]
    rows.sort(key=lambda row: (-row.mass, row.name))
    return ComparisonReport(target=first.target, state=state, rows=tuple(rows))


def scenario_from_doc(doc: Mapping) -> Scenario:
    try:
        return Scenario(
            name=doc["name"],
            target=doc["target"],
            direction=Direction.from_label(doc["direction"]),
            evidence=dict(doc.get("evidence", {})),
        )
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed scenario document: {exc!r}") from None


def scenario_to_doc(scenario: Scenario) -> dict:
    return {
        "name": scenario.name,
        "target": scenario.target,
        "direction": scenario.direction.value,
        "evidence": dict(scenario.evidence),
    }


def scenario_loads(text: str) -> Scenario:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"scenario is not valid JSON: {exc}") from None
    return scenario_from_doc(doc)


def scenario_load(path) -> Scenario:
    with open(path, "r", encoding="utf-8") as handle:
        return scenario_loads(handle.read())
