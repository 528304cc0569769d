"""Exact posterior inference over discrete Bayesian networks.

Two independent routes compute P(query | evidence):

* `joint_enumeration_posterior` materializes the full joint distribution
  as a dense n-dimensional table (the textbook definition, feasible for
  the model sizes this package targets) and marginalizes it directly.
* `variable_elimination_posterior` performs factor elimination with a
  min-degree ordering heuristic and lexicographic tie-breaking, which is
  the fast path used by scenarios, diagnostics, and sensitivity analysis.

Both renormalize at the end to absorb floating point rounding, and both
raise `ZeroEvidenceProbability` instead of dividing by a zero evidence
mass. Hard evidence only: an observation fixes a node to one state.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .errors import UnknownNodeError, UnknownStateError, ZeroEvidenceProbability
from .network import BayesianNetwork

__all__ = [
    "Distribution",
    "Evidence",
    "joint_enumeration_posterior",
    "variable_elimination_posterior",
    "prior_marginal",
]

Evidence = Mapping[str, str]


@dataclass(frozen=True)
class Distribution:
    """A normalized probability distribution over one node's states."""

    node: str
    states: tuple[str, ...]
    probabilities: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "probabilities", tuple(float(p) for p in self.probabilities))
        if len(self.states) != len(self.probabilities):
            raise ValueError("states and probabilities must have equal length")

    def __getitem__(self, state: str) -> float:
        try:
            return self.probabilities[self.states.index(state)]
        except ValueError:
            raise UnknownStateError(self.node, state) from None

    def as_dict(self) -> dict[str, float]:
        return dict(zip(self.states, self.probabilities))

    def as_doc(self) -> dict:
        """Wire shape shared by the CLI and the HTTP service."""
        return {
            "node": self.node,
            "states": list(self.states),
            "probabilities": list(self.probabilities),
        }


def _check_evidence(net: BayesianNetwork, evidence: Evidence) -> dict[str, int]:
    """Validate evidence names and return node -> observed state index."""
    indices: dict[str, int] = {}
    for node, state in evidence.items():
        if node not in net:
            raise UnknownNodeError(node)
        states = net.states(node)
        if state not in states:
            raise UnknownStateError(node, state)
        indices[node] = states.index(state)
    return indices


def _check_query(net: BayesianNetwork, query: str) -> None:
    if query not in net:
        raise UnknownNodeError(query)


def _normalized(node: str, states: tuple[str, ...], mass: np.ndarray, evidence: Evidence) -> Distribution:
    total = float(mass.sum())
    if total == 0.0:
        raise ZeroEvidenceProbability(evidence)
    return Distribution(node=node, states=states, probabilities=tuple(mass / total))


def joint_enumeration_posterior(
    net: BayesianNetwork, evidence: Evidence, query: str
) -> Distribution:
    """Posterior by materializing and summing the full joint table.

    Definitional oracle: P(x_1, ..., x_n) is the product of every node's
    CPT entry, built as one dense array over all nodes, then reduced. Kept
    free of the factor machinery used by variable elimination so the two
    paths can check each other.
    """
    _check_query(net, query)
    observed = _check_evidence(net, evidence)

    order = net.topological_order
    axis = {name: i for i, name in enumerate(order)}
    cards = tuple(len(net.states(name)) for name in order)

    joint = np.ones(cards, dtype=np.float64)
    for name in order:
        scope = net.parents(name) + (name,)
        table = net.values(name)
        # Spread this CPT over the full joint axes: move its axes into
        # position and leave size-1 axes elsewhere for broadcasting.
        expanded_shape = [1] * len(order)
        for variable in scope:
            expanded_shape[axis[variable]] = len(net.states(variable))
        source_axes = [axis[variable] for variable in scope]
        destination = np.argsort(np.argsort(source_axes))
        aligned = table.transpose(tuple(destination)).reshape(expanded_shape)
        joint = joint * aligned

    for name, state_index in observed.items():
        mask = np.zeros(len(net.states(name)))
        mask[state_index] = 1.0
        mask_shape = [1] * len(order)
        mask_shape[axis[name]] = mask.size
        joint = joint * mask.reshape(mask_shape)

    reduce_axes = tuple(i for i, name in enumerate(order) if name != query)
    mass = joint.sum(axis=reduce_axes)
    return _normalized(query, net.states(query), np.atleast_1d(mass), evidence)


# -- variable elimination ------------------------------------------------------


@dataclass(frozen=True)
class _Factor:
    variables: tuple[str, ...]
    values: np.ndarray

    def sum_out(self, variable: str) -> "_Factor":
        index = self.variables.index(variable)
        remaining = self.variables[:index] + self.variables[index + 1 :]
        return _Factor(remaining, self.values.sum(axis=index))


def _multiply(a: _Factor, b: _Factor) -> _Factor:
    union = a.variables + tuple(v for v in b.variables if v not in a.variables)

    def align(factor: _Factor) -> np.ndarray:
        missing = [v for v in union if v not in factor.variables]
        source = factor.values.reshape(factor.values.shape + (1,) * len(missing))
        current = factor.variables + tuple(missing)
        perm = [current.index(v) for v in union]
        return source.transpose(perm)

    return _Factor(union, align(a) * align(b))


def _restrict(factor: _Factor, variable: str, state_index: int) -> _Factor:
    index = factor.variables.index(variable)
    remaining = factor.variables[:index] + factor.variables[index + 1 :]
    return _Factor(remaining, np.take(factor.values, state_index, axis=index))


def _elimination_order(factors: Sequence[_Factor], hidden: set[str]) -> list[str]:
    """Min-degree ordering with deterministic lexicographic tie-break."""
    neighbors: dict[str, set[str]] = {v: set() for v in hidden}
    scopes = [set(f.variables) for f in factors]
    for scope in scopes:
        for v in scope:
            if v in neighbors:
                neighbors[v] |= scope - {v}
    order: list[str] = []
    remaining = set(hidden)
    while remaining:
        chosen = min(remaining, key=lambda v: (len(neighbors[v] & remaining), v))
        order.append(chosen)
        remaining.discard(chosen)
        linked = neighbors[chosen] & remaining
        for v in linked:
            neighbors[v] |= linked - {v}
    return order


def variable_elimination_posterior(
    net: BayesianNetwork, evidence: Evidence, query: str
) -> Distribution:
    """Posterior by factor elimination; exact, and fast on sparse graphs."""
    _check_query(net, query)
    observed = _check_evidence(net, evidence)

    factors: list[_Factor] = []
    for name in net.topological_order:
        scope = net.parents(name) + (name,)
        factor = _Factor(scope, net.values(name))
        for variable in scope:
            if variable in observed:
                factor = _restrict(factor, variable, observed[variable])
        factors.append(factor)

    hidden = {v for v in net.node_names if v != query and v not in observed}
    for variable in _elimination_order(factors, hidden):
        related = [f for f in factors if variable in f.variables]
        factors = [f for f in factors if variable not in f.variables]
        product = related[0]
        for factor in related[1:]:
            product = _multiply(product, factor)
        factors.append(product.sum_out(variable))

    result = factors[0]
    for factor in factors[1:]:
        result = _multiply(result, factor)

    states = net.states(query)
    if query in observed:
        # The query was itself observed: the remaining product is P(e).
        total = float(result.values.sum())
        if total == 0.0:
            raise ZeroEvidenceProbability(evidence)
        mass = np.zeros(len(states))
        mass[observed[query]] = 1.0
        return Distribution(node=query, states=states, probabilities=tuple(mass))

    # Every hidden variable is summed out and evidence axes were removed up
    # front, so the remaining product's scope is exactly the query node.
    assert result.variables == (query,)
    return _normalized(query, states, np.asarray(result.values, dtype=np.float64), evidence)


def prior_marginal(net: BayesianNetwork, query: str) -> Distribution:
    """Marginal with no evidence."""
    return variable_elimination_posterior(net, {}, query)
