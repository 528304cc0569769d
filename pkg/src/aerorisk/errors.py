"""Exception types raised across the package.

Every class carries a stable machine-readable ``code`` so the CLI and the
HTTP service can map failures onto their documented error vocabulary
without string-matching messages.
"""

from __future__ import annotations


class AeroRiskError(Exception):
    """Base class for every error this package raises deliberately."""

    code = "error"


class ParseError(AeroRiskError):
    """A document is malformed: bad JSON, missing fields, unknown labels."""

    code = "parse"


class RegistryValidationError(AeroRiskError):
    """A hazard registry document failed semantic validation."""

    code = "registry_validation"

    def __init__(self, violations):
        self.violations = list(violations)
        lines = "; ".join(v.message for v in self.violations)
        super().__init__(f"registry has {len(self.violations)} violation(s): {lines}")


class CycleError(AeroRiskError):
    """The directed graph implied by the CPT parent lists is cyclic."""

    code = "cycle"

    def __init__(self, cycle):
        self.cycle = list(cycle)
        path = " -> ".join(self.cycle)
        super().__init__(f"parent structure contains a cycle: {path}")


class ShapeError(AeroRiskError):
    """A structural mismatch: wrong row count, vector length, or duplicate."""

    code = "shape"


class NormalizationError(AeroRiskError):
    """A probability vector has entries outside [0, 1] or does not sum to 1."""

    code = "normalization"


class DanglingReferenceError(AeroRiskError):
    """A name refers to a node that is not declared."""

    code = "dangling_reference"


class ArityError(AeroRiskError):
    """A builder received a node with the wrong number of states."""

    code = "arity"


class RangeError(AeroRiskError):
    """A numeric parameter is outside its documented domain."""

    code = "range"


class CutpointError(AeroRiskError):
    """Cutpoints are not strictly increasing inside the open unit interval."""

    code = "cutpoint"


class UnknownNodeError(AeroRiskError):
    """A query or evidence name does not match any node in the network."""

    code = "unknown_node"

    def __init__(self, name):
        self.name = name
        super().__init__(f"unknown node: {name!r}")


class UnknownStateError(AeroRiskError):
    """A state name does not belong to the node it was given for."""

    code = "unknown_state"

    def __init__(self, node, state):
        self.node = node
        self.state = state
        super().__init__(f"node {node!r} has no state {state!r}")


class ZeroEvidenceProbability(AeroRiskError):
    """The observed evidence has probability zero under the model.

    Posteriors are undefined in this case; callers must report rather
    than divide by zero.
    """

    code = "zero_evidence_probability"

    def __init__(self, evidence):
        self.evidence = dict(evidence)
        shown = ", ".join(f"{k}={v}" for k, v in sorted(self.evidence.items()))
        super().__init__(f"evidence has probability zero: {{{shown}}}")


class NoDataForFactorError(AeroRiskError):
    """No reference in the frequency table populates the factor."""

    code = "no_data_for_factor"

    def __init__(self, factor):
        self.factor = factor
        super().__init__(f"no reference provides data for factor {factor}")


class UnknownFactorError(AeroRiskError):
    """A frequency table names a factor outside the documented set."""

    code = "unknown_factor"


class CoverageError(AeroRiskError):
    """Priors and the model description do not cover the same factor set."""

    code = "coverage"


class MixedTargetsError(AeroRiskError):
    """Scenario results being compared do not share a target distribution."""

    code = "mixed_targets"


class UnknownModelError(AeroRiskError):
    """The model store has no entry under the requested id."""

    code = "unknown_model"

    def __init__(self, model_id):
        self.model_id = model_id
        super().__init__(f"no stored model with id {model_id!r}")
