"""Parametric CPT constructors for two-state cause nodes.

Both builders treat a two-state parent as (absent, present): the state at
index 1 is the active one. They return ordinary `CPT` records, so the
result can be inspected, serialized, or fed to `build_network` like any
hand-written table.

`noisy_or_cpt` implements the independent-causes closed form

    P(child = present | active set A) = 1 - (1 - leak) * prod_{i in A} (1 - w_i)

`ranked_aggregation_cpt` maps the weighted share of active parents,

    a = sum_{i in A} w_i / sum_i w_i  in [0, 1],

onto an ordered child scale by spreading a triangular kernel centered at
`a` with half-width `h` over [0, 1], then integrating it over the partition
induced by the cutpoints. Child states are declared most-severe-first and
a = 1 maps to the most severe state, so ascending intervals correspond to
states in reverse declaration order. The kernel is truncated to [0, 1] and
renormalized, which keeps every row a proper distribution for any a.
"""

from __future__ import annotations

import itertools
from typing import Sequence

from .errors import ArityError, CutpointError, RangeError, ShapeError
from .network import CPT, NodeSpec

__all__ = ["noisy_or_cpt", "ranked_aggregation_cpt", "triangular_interval_mass"]


def _require_two_state(node: NodeSpec, role: str) -> None:
    if len(node.states) != 2:
        raise ArityError(
            f"{role} {node.name!r} must have exactly two states, has {len(node.states)}"
        )


def noisy_or_cpt(
    child: NodeSpec,
    parents: Sequence[NodeSpec],
    weights: Sequence[float],
    leak: float = 0.0,
) -> CPT:
    """Noisy-OR table for a two-state child with two-state parents."""
    _require_two_state(child, "noisy-OR child")
    for parent in parents:
        _require_two_state(parent, "noisy-OR parent")
    if len(weights) != len(parents):
        raise ShapeError(
            f"noisy-OR needs one weight per parent: "
            f"{len(weights)} weights for {len(parents)} parents"
        )
    weights = [float(w) for w in weights]
    for w in weights:
        if not 0.0 <= w <= 1.0:
            raise RangeError(f"noisy-OR weight {w!r} outside [0, 1]")
    if not 0.0 <= float(leak) <= 1.0:
        raise RangeError(f"noisy-OR leak {leak!r} outside [0, 1]")
    leak = float(leak)

    rows: dict[tuple[str, ...], tuple[float, ...]] = {}
    active_states = [p.states[1] for p in parents]
    for assignment in itertools.product(*(p.states for p in parents)):
        survival = 1.0 - leak
        for state, active, weight in zip(assignment, active_states, weights):
            if state == active:
                survival *= 1.0 - weight
        p_present = 1.0 - survival
        rows[assignment] = (1.0 - p_present, p_present)
    return CPT(child=child.name, parents=tuple(p.name for p in parents), rows=rows)


def triangular_interval_mass(
    a: float, half_width: float, boundaries: Sequence[float]
) -> list[float]:
    """Mass per interval for the truncated triangular kernel.

    The kernel g(x) = max(0, 1 - |x - a| / h) restricted to [0, 1] is
    integrated exactly over consecutive `boundaries` (which must start at 0
    and end at 1) and normalized to sum to 1.
    """
    h = float(half_width)

    def integral_up_to(x: float) -> float:
        # Antiderivative of g from the left edge of its support to x.
        lo = a - h
        hi = a + h
        if x <= lo:
            return 0.0
        if x >= hi:
            return h
        if x <= a:
            return (x - lo) ** 2 / (2.0 * h)
        return h / 2.0 + (x - a) - (x - a) ** 2 / (2.0 * h)

    masses = [
        integral_up_to(right) - integral_up_to(left)
        for left, right in zip(boundaries, boundaries[1:])
    ]
    total = sum(masses)
    return [m / total for m in masses]


def ranked_aggregation_cpt(
    child: NodeSpec,
    parents: Sequence[NodeSpec],
    weights: Sequence[float],
    cutpoints: Sequence[float],
    half_width: float = 0.3,
) -> CPT:
    """Ordered-scale table driven by the weighted share of active parents."""
    for parent in parents:
        _require_two_state(parent, "aggregation parent")
    if len(weights) != len(parents):
        raise ShapeError(
            f"aggregation needs one weight per parent: "
            f"{len(weights)} weights for {len(parents)} parents"
        )
    weights = [float(w) for w in weights]
    for w in weights:
        if w < 0.0:
            raise RangeError(f"aggregation weight {w!r} is negative")
    total_weight = sum(weights)
    if total_weight == 0.0:
        raise RangeError("aggregation weights must not all be zero")
    if float(half_width) <= 0.0:
        raise RangeError(f"half-width {half_width!r} must be positive")

    cutpoints = [float(c) for c in cutpoints]
    if len(cutpoints) != len(child.states) - 1:
        raise CutpointError(
            f"child {child.name!r} with {len(child.states)} states needs "
            f"{len(child.states) - 1} cutpoints, got {len(cutpoints)}"
        )
    if any(not 0.0 < c < 1.0 for c in cutpoints) or any(
        b <= a for a, b in zip(cutpoints, cutpoints[1:])
    ):
        raise CutpointError(
            f"cutpoints must be strictly increasing inside (0, 1): {cutpoints}"
        )

    boundaries = [0.0, *cutpoints, 1.0]
    active_states = [p.states[1] for p in parents]
    rows: dict[tuple[str, ...], tuple[float, ...]] = {}
    for assignment in itertools.product(*(p.states for p in parents)):
        activation = (
            sum(
                w
                for state, active, w in zip(assignment, active_states, weights)
                if state == active
            )
            / total_weight
        )
        interval_masses = triangular_interval_mass(activation, half_width, boundaries)
        # Ascending intervals fill the scale from least to most severe;
        # states are declared most-severe-first, so reverse.
        rows[assignment] = tuple(reversed(interval_masses))
    return CPT(child=child.name, parents=tuple(p.name for p in parents), rows=rows)
