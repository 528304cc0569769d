"""Discrete Bayesian network structure, eager validation, and wire format.

A network is a directed acyclic graph over named nodes with finite state
sets. Each node carries one conditional probability table (CPT): a row per
assignment of its parents, each row a distribution over the node's states.
`build_network` checks every structural invariant up front so inference can
assume a well-formed model:

* node names unique, state names unique per node, at least two states,
* exactly one CPT per node, parents declared, graph acyclic,
* every parent assignment covered exactly once, rows of the right length,
* entries within [0, 1] and row sums within 1e-9 of 1.

Built networks are immutable; the dense per-node probability arrays handed
to inference are read-only views.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import (
    CycleError,
    DanglingReferenceError,
    NormalizationError,
    ParseError,
    ShapeError,
)

__all__ = [
    "NodeKind",
    "NodeSpec",
    "CPT",
    "BayesianNetwork",
    "build_network",
    "network_to_doc",
    "network_from_doc",
    "network_loads",
    "network_dumps",
    "network_load",
    "network_dump",
]

ROW_SUM_TOLERANCE = 1e-9


class NodeKind(Enum):
    """Role metadata for presentation; inference treats all kinds alike."""

    OBSERVABLE = "Observable"
    INTERMEDIATE = "Intermediate"
    TARGET = "Target"

    @classmethod
    def from_label(cls, label: str) -> "NodeKind":
        for member in cls:
            if member.value == label:
                return member
        raise ParseError(f"unknown node kind {label!r}")


@dataclass(frozen=True)
class NodeSpec:
    """A named node with an ordered, finite set of states."""

    name: str
    states: tuple[str, ...]
    kind: NodeKind = NodeKind.OBSERVABLE

    def __post_init__(self):
        object.__setattr__(self, "states", tuple(self.states))
        if not self.name or not isinstance(self.name, str):
            raise ShapeError(f"node name must be a non-empty string, got {self.name!r}")
        if len(self.states) < 2:
            raise ShapeError(f"node {self.name!r} must have at least two states")
        if len(set(self.states)) != len(self.states):
            raise ShapeError(f"node {self.name!r} has duplicate state names")


@dataclass(frozen=True)
class CPT:
    """A conditional probability table, keyed by parent state assignments.

    `rows` maps a tuple of parent state names (in `parents` order; the empty
    tuple for a root) to a probability vector over the child's states. The
    table is a plain record here; completeness and normalization are checked
    against the node declarations in `build_network`.
    """

    child: str
    parents: tuple[str, ...]
    rows: Mapping[tuple[str, ...], tuple[float, ...]]

    def __post_init__(self):
        object.__setattr__(self, "parents", tuple(self.parents))
        normalized = {
            tuple(assignment): tuple(float(p) for p in vector)
            for assignment, vector in self.rows.items()
        }
        object.__setattr__(self, "rows", normalized)


class BayesianNetwork:
    """An immutable, validated discrete Bayesian network.

    Construct through `build_network`. Exposes node lookups, graph
    relations (parents, topological order, ancestors/descendants), and a
    dense read-only probability array per node shaped
    ``(card(parent 1), ..., card(parent k), card(child))``.
    """

    def __init__(self, nodes: Sequence[NodeSpec], cpts: Sequence[CPT]):
        nodes = tuple(nodes)
        names = [n.name for n in nodes]
        dupes = {name for name in names if names.count(name) > 1}
        if dupes:
            raise ShapeError(f"duplicate node names: {sorted(dupes)}")
        self._nodes: Mapping[str, NodeSpec] = {n.name: n for n in nodes}
        self._node_order: tuple[str, ...] = tuple(names)

        by_child: dict[str, CPT] = {}
        for cpt in cpts:
            if cpt.child not in self._nodes:
                raise DanglingReferenceError(
                    f"CPT declared for undeclared node {cpt.child!r}"
                )
            if cpt.child in by_child:
                raise ShapeError(f"node {cpt.child!r} has more than one CPT")
            for parent in cpt.parents:
                if parent not in self._nodes:
                    raise DanglingReferenceError(
                        f"CPT for {cpt.child!r} references undeclared parent {parent!r}"
                    )
                if parent == cpt.child:
                    raise CycleError([cpt.child, cpt.child])
            by_child[cpt.child] = cpt
        missing = [name for name in names if name not in by_child]
        if missing:
            raise ShapeError(f"nodes without a CPT: {missing}")
        self._cpts: Mapping[str, CPT] = by_child

        self._check_acyclic()
        self._order: tuple[str, ...] = self._topological_order()
        self._values: dict[str, np.ndarray] = {
            name: self._dense_values(by_child[name]) for name in names
        }

    # -- construction helpers -------------------------------------------------

    def _check_acyclic(self) -> None:
        # Iterative DFS with a gray set; on a back edge, walk the stack to
        # recover and report the offending cycle.
        WHITE, GRAY, BLACK = 0, 1, 2
        color = {name: WHITE for name in self._nodes}
        parent_edge: dict[str, str] = {}
        for root in sorted(self._nodes):
            if color[root] != WHITE:
                continue
            stack: list[tuple[str, Iterable[str]]] = [(root, iter(self._cpts[root].parents))]
            color[root] = GRAY
            while stack:
                node, children = stack[-1]
                advanced = False
                for nxt in children:
                    if color[nxt] == GRAY:
                        cycle = [nxt, node]
                        walker = node
                        while walker != nxt:
                            walker = parent_edge[walker]
                            cycle.append(walker)
                        cycle.reverse()
                        raise CycleError(cycle)
                    if color[nxt] == WHITE:
                        color[nxt] = GRAY
                        parent_edge[nxt] = node
                        stack.append((nxt, iter(self._cpts[nxt].parents)))
                        advanced = True
                        break
                if not advanced:
                    color[node] = BLACK
                    stack.pop()

    def _topological_order(self) -> tuple[str, ...]:
        # Kahn's algorithm, parents before children, lexicographic tie-break.
        remaining_parents = {
            name: set(self._cpts[name].parents) for name in self._nodes
        }
        children: dict[str, set[str]] = {name: set() for name in self._nodes}
        for name, cpt in self._cpts.items():
            for parent in cpt.parents:
                children[parent].add(name)
        ready = sorted(name for name, ps in remaining_parents.items() if not ps)
        order: list[str] = []
        while ready:
            node = ready.pop(0)
            order.append(node)
            newly = []
            for child in children[node]:
                remaining_parents[child].discard(node)
                if not remaining_parents[child]:
                    newly.append(child)
            ready = sorted(set(ready) | set(newly))
        return tuple(order)

    def _dense_values(self, cpt: CPT) -> np.ndarray:
        child_spec = self._nodes[cpt.child]
        parent_specs = [self._nodes[p] for p in cpt.parents]
        expected = set(itertools.product(*(ps.states for ps in parent_specs)))
        got = set(cpt.rows)
        if got != expected:
            missing = expected - got
            extra = got - expected
            raise ShapeError(
                f"CPT for {cpt.child!r} must cover each parent assignment exactly "
                f"once ({len(missing)} missing, {len(extra)} unexpected)"
            )
        shape = tuple(len(ps.states) for ps in parent_specs) + (len(child_spec.states),)
        values = np.empty(shape, dtype=np.float64)
        for assignment, vector in cpt.rows.items():
            if len(vector) != len(child_spec.states):
                raise ShapeError(
                    f"CPT for {cpt.child!r}: row {assignment!r} has "
                    f"{len(vector)} entries for {len(child_spec.states)} states"
                )
            row = np.asarray(vector, dtype=np.float64)
            if np.any(row < 0.0) or np.any(row > 1.0):
                raise NormalizationError(
                    f"CPT for {cpt.child!r}: row {assignment!r} has entries "
                    f"outside [0, 1]"
                )
            total = float(row.sum())
            if abs(total - 1.0) > ROW_SUM_TOLERANCE:
                raise NormalizationError(
                    f"CPT for {cpt.child!r}: row {assignment!r} sums to {total!r}"
                )
            index = tuple(
                ps.states.index(state) for ps, state in zip(parent_specs, assignment)
            )
            values[index] = row
        values.setflags(write=False)
        return values

    # -- read API --------------------------------------------------------------

    @property
    def nodes(self) -> tuple[NodeSpec, ...]:
        return tuple(self._nodes[name] for name in self._node_order)

    @property
    def node_names(self) -> tuple[str, ...]:
        return self._node_order

    @property
    def topological_order(self) -> tuple[str, ...]:
        return self._order

    def __contains__(self, name: str) -> bool:
        return name in self._nodes

    def node(self, name: str) -> NodeSpec:
        return self._nodes[name]

    def states(self, name: str) -> tuple[str, ...]:
        return self._nodes[name].states

    def parents(self, name: str) -> tuple[str, ...]:
        return self._cpts[name].parents

    def cpt(self, name: str) -> CPT:
        return self._cpts[name]

    def values(self, name: str) -> np.ndarray:
        """Dense read-only array of shape (parent cards..., child card)."""
        return self._values[name]

    def ancestors(self, name: str) -> frozenset[str]:
        seen: set[str] = set()
        frontier = list(self._cpts[name].parents)
        while frontier:
            node = frontier.pop()
            if node in seen:
                continue
            seen.add(node)
            frontier.extend(self._cpts[node].parents)
        return frozenset(seen)

    def descendants(self, name: str) -> frozenset[str]:
        children: dict[str, list[str]] = {n: [] for n in self._nodes}
        for child, cpt in self._cpts.items():
            for parent in cpt.parents:
                children[parent].append(child)
        seen: set[str] = set()
        frontier = list(children[name])
        while frontier:
            node = frontier.pop()
            if node in seen:
                continue
            seen.add(node)
            frontier.extend(children[node])
        return frozenset(seen)

    def __eq__(self, other):
        if not isinstance(other, BayesianNetwork):
            return NotImplemented
        return self.nodes == other.nodes and self._cpts == other._cpts

    def __repr__(self):
        return (
            f"BayesianNetwork({len(self._nodes)} nodes, "
            f"{sum(len(c.parents) for c in self._cpts.values())} edges)"
        )


def build_network(nodes: Sequence[NodeSpec], cpts: Sequence[CPT]) -> BayesianNetwork:
    """Validate the declarations and return an immutable network."""
    return BayesianNetwork(nodes, cpts)


def network_to_doc(net: BayesianNetwork) -> dict:
    """Serialize a network to its document shape, rows in row-major order."""
    nodes_doc = [
        {"name": spec.name, "states": list(spec.states), "kind": spec.kind.value}
        for spec in net.nodes
    ]
    cpts_doc = []
    for spec in net.nodes:
        cpt = net.cpt(spec.name)
        parent_states = [net.states(p) for p in cpt.parents]
        rows_doc = [
            {
                "parent_states": list(assignment),
                "probabilities": list(cpt.rows[assignment]),
            }
            for assignment in itertools.product(*parent_states)
        ]
        cpts_doc.append(
            {"child": cpt.child, "parents": list(cpt.parents), "rows": rows_doc}
        )
    return {"nodes": nodes_doc, "cpts": cpts_doc}


def network_from_doc(doc: Mapping) -> BayesianNetwork:
    """Parse and validate a network document."""
    if not isinstance(doc, Mapping) or "nodes" not in doc or "cpts" not in doc:
        raise ParseError("network document must have 'nodes' and 'cpts' arrays")
    try:
        nodes = [
            NodeSpec(
                name=item["name"],
                states=tuple(item["states"]),
                kind=NodeKind.from_label(item.get("kind", "Observable")),
            )
            for item in doc["nodes"]
        ]
        cpts = [
            CPT(
                child=item["child"],
                parents=tuple(item["parents"]),
                rows={
                    tuple(row["parent_states"]): tuple(row["probabilities"])
                    for row in item["rows"]
                },
            )
            for item in doc["cpts"]
        ]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed network document: {exc!r}") from None
    return build_network(nodes, cpts)


def network_dumps(net: BayesianNetwork) -> str:
    """Serialize to JSON text, loss-free at double precision."""
    return json.dumps(network_to_doc(net), indent=2) + "\n"


def network_loads(text: str) -> BayesianNetwork:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"network is not valid JSON: {exc}") from None
    return network_from_doc(doc)


def network_load(path) -> BayesianNetwork:
    with open(path, "r", encoding="utf-8") as handle:
        return network_loads(handle.read())


def network_dump(net: BayesianNetwork, path) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(network_dumps(net))
