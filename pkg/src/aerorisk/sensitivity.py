"""One-way sensitivity analysis rendered as a tornado ranking.

For each sensitivity node, the target-state posterior is recomputed with
that node clamped to each of its states on top of the base evidence. The
spread between the best and worst clamped posterior is the node's bar
length; nodes are ranked longest bar first. States whose clamping
contradicts the base evidence (zero evidence probability) contribute no
value and are reported as None.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import UnknownNodeError, UnknownStateError, ZeroEvidenceProbability
from .inference import Evidence, variable_elimination_posterior
from .network import BayesianNetwork

__all__ = ["TornadoRow", "TornadoAnalysis", "sensitivity_tornado"]


@dataclass(frozen=True)
class TornadoRow:
    """Clamped posteriors for one sensitivity node."""

    node: str
    states: tuple[str, ...]
    values: tuple[float | None, ...]
    low: float
    high: float
    bar_length: float

    def value_for(self, state: str) -> float | None:
        return self.values[self.states.index(state)]

    def as_doc(self) -> dict:
        return {
            "node": self.node,
            "states": list(self.states),
            "values": list(self.values),
            "low": self.low,
            "high": self.high,
            "bar_length": self.bar_length,
        }


@dataclass(frozen=True)
class TornadoAnalysis:
    """Ranked rows plus the baseline posterior they pivot around."""

    target: str
    target_state: str
    baseline: float
    rows: tuple[TornadoRow, ...]

    def as_doc(self) -> dict:
        """Wire shape shared by the CLI and the HTTP service."""
        return {
            "target": self.target,
            "target_state": self.target_state,
            "baseline": self.baseline,
            "rows": [row.as_doc() for row in self.rows],
        }


def sensitivity_tornado(
    net: BayesianNetwork,
    target: str,
    target_state: str,
    sensitivity_nodes: Sequence[str],
    base_evidence: Evidence | None = None,
) -> TornadoAnalysis:
    """Rank sensitivity nodes by the swing they induce on the target state."""
    base_evidence = dict(base_evidence or {})
    if target not in net:
        raise UnknownNodeError(target)
    if target_state not in net.states(target):
        raise UnknownStateError(target, target_state)
    for node in sensitivity_nodes:
        if node not in net:
            raise UnknownNodeError(node)
        if node == target:
            raise ValueError(f"target {target!r} cannot be a sensitivity node")

    baseline = variable_elimination_posterior(net, base_evidence, target)[target_state]

    rows: list[TornadoRow] = []
    for node in sensitivity_nodes:
        values: list[float | None] = []
        for state in net.states(node):
            clamped = dict(base_evidence)
            clamped[node] = state
            try:
                posterior = variable_elimination_posterior(net, clamped, target)
            except ZeroEvidenceProbability:
                values.append(None)
                continue
            values.append(posterior[target_state])
        defined = [v for v in values if v is not None]
        low, high = min(defined), max(defined)
        rows.append(
            TornadoRow(
                node=node,
                states=net.states(node),
                values=tuple(values),
                low=low,
                high=high,
                bar_length=high - low,
            )
        )
    rows.sort(key=lambda row: (-row.bar_length, row.node))
    return TornadoAnalysis(
        target=target,
        target_state=target_state,
        baseline=baseline,
        rows=tuple(rows),
    )
