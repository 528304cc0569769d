"""Qualitative mission risk track: hazard records, matrix scoring, PLr lookup.

This module covers the two scoring instruments of a machinery-safety style
assessment (ISO 12100 / ISO 13849):

* a risk matrix mapping (probability class, severity class) to a risk level,
* a risk graph mapping an (S, F, P) triple to a required performance level.

Hazard records bundle the identification, assessment, and reduction columns
of a hazard worksheet. Validation reports inconsistencies as `Violation`
values instead of raising: a worksheet with a mis-scored row is data to be
reported, not a programming fault.
"""

from __future__ import annotations

import functools
import json
from dataclasses import dataclass, field
from enum import Enum
from importlib import resources
from typing import Iterable, Mapping, Sequence

from .errors import ParseError, RegistryValidationError

__all__ = [
    "ProbabilityClass",
    "SeverityClass",
    "RiskLevel",
    "PerformanceLevel",
    "InjurySeverity",
    "ExposureFrequency",
    "AvoidancePossibility",
    "SFPTriple",
    "HazardSource",
    "MeasureCategory",
    "MitigationMeasure",
    "HazardRecord",
    "LimitCategory",
    "SystemLimit",
    "RiskMatrix",
    "DEFAULT_RISK_MATRIX",
    "Violation",
    "risk_matrix_lookup",
    "plr_lookup",
    "validate_hazard",
    "validate_registry",
    "default_taxonomy",
    "default_system_limits",
    "registry_from_doc",
    "registry_to_doc",
    "registry_loads",
    "registry_dumps",
    "registry_load",
    "registry_dump",
]


class OrderedLabelEnum(Enum):
    """Enum whose members are ordered by declaration position.

    Members carry a canonical string label as their value. Plain `Enum`
    is used rather than a `str` mixin so that comparisons follow the
    declared severity order, not alphabetical order of the labels.
    """

    def __str__(self) -> str:
        return self.value

    @property
    def rank(self) -> int:
        return list(type(self)).index(self)

    def __lt__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.rank < other.rank

    def __le__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.rank <= other.rank

    def __gt__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.rank > other.rank

    def __ge__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.rank >= other.rank

    @classmethod
    def from_label(cls, label: str) -> "OrderedLabelEnum":
        for member in cls:
            if member.value == label:
                return member
        raise ParseError(f"{cls.__name__} has no member {label!r}")


class ProbabilityClass(OrderedLabelEnum):
    """Likelihood classes of a hazardous event, least likely first."""

    IMPROBABLE = "Improbable"
    REMOTE = "Remote"
    OCCASIONAL = "Occasional"
    PROBABLE = "Probable"
    FREQUENT = "Frequent"


class SeverityClass(OrderedLabelEnum):
    """Harm severity classes, least severe first."""

    NEGLIGIBLE = "Negligible"
    MARGINAL = "Marginal"
    CRITICAL = "Critical"
    CATASTROPHIC = "Catastrophic"


class RiskLevel(OrderedLabelEnum):
    """Assessed risk levels, lowest first."""

    LOW = "Low"
    MEDIUM = "Medium"
    SERIOUS = "Serious"
    HIGH = "High"


class PerformanceLevel(OrderedLabelEnum):
    """Required performance levels, lowest contribution to risk reduction first."""

    A = "a"
    B = "b"
    C = "c"
    D = "d"
    E = "e"


class InjurySeverity(OrderedLabelEnum):
    """S parameter of the risk graph: slight (S1) or serious (S2) injury."""

    S1 = "S1"
    S2 = "S2"


class ExposureFrequency(OrderedLabelEnum):
    """F parameter of the risk graph: seldom (F1) or frequent (F2) exposure."""

    F1 = "F1"
    F2 = "F2"


class AvoidancePossibility(OrderedLabelEnum):
    """P parameter of the risk graph: avoidance possible (P1) or scarcely (P2)."""

    P1 = "P1"
    P2 = "P2"


class HazardSource(OrderedLabelEnum):
    """Where a hazard originates relative to the aircraft system."""

    EXTERNAL = "External"
    INTERNAL = "Internal"


class MeasureCategory(OrderedLabelEnum):
    """Risk reduction route for a mitigation measure."""

    INHERENTLY_SAFE_DESIGN = "InherentlySafeDesign"
    SAFEGUARDING = "Safeguarding"
    INFORMATION_FOR_USE = "InformationForUse"


class LimitCategory(OrderedLabelEnum):
    """Categories under which the system's use limits are documented."""

    PHYSICAL = "Physical"
    TEMPORAL = "Temporal"
    ENVIRONMENTAL = "Environmental"
    BEHAVIORAL = "Behavioral"
    NETWORKING = "Networking"


@dataclass(frozen=True)
class SFPTriple:
    """The three risk-graph parameters of a safety function."""

    s: InjurySeverity
    f: ExposureFrequency
    p: AvoidancePossibility


@dataclass(frozen=True)
class SystemLimit:
    """One documented limit of use for the system."""

    category: LimitCategory
    description: str


@dataclass(frozen=True)
class MitigationMeasure:
    """One risk reduction measure attached to a hazard.

    `sfp` and `plr` describe the safety function a safeguard implements;
    they are meaningful only for `MeasureCategory.SAFEGUARDING` and must
    both be present there and both be absent elsewhere (checked by
    `validate_hazard`, not at construction).
    """

    description: str
    category: MeasureCategory
    sfp: SFPTriple | None = None
    plr: PerformanceLevel | None = None


@dataclass(frozen=True)
class HazardRecord:
    """One row of the hazard worksheet."""

    id: int
    name: str
    source: HazardSource
    hazard_type: str
    element: str
    cause: str
    consequence: str
    probability: ProbabilityClass
    severity: SeverityClass
    risk_level: RiskLevel
    measures: tuple[MitigationMeasure, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "measures", tuple(self.measures))


# The scoring matrix: rows are probability classes (least likely first),
# columns are severity classes (least severe first). Levels never decrease
# along a row or down a column.
_MATRIX_LEVELS: tuple[tuple[str, ...], ...] = (
    # Negligible  Marginal   Critical   Catastrophic
    ("Low", "Low", "Low", "Medium"),  # Improbable
    ("Low", "Low", "Medium", "Serious"),  # Remote
    ("Low", "Medium", "Serious", "High"),  # Occasional
    ("Medium", "Serious", "High", "High"),  # Probable
    ("Medium", "Serious", "High", "High"),  # Frequent
)


@dataclass(frozen=True)
class RiskMatrix:
    """A complete, monotone (probability x severity) -> risk level table."""

    cells: Mapping[tuple[ProbabilityClass, SeverityClass], RiskLevel]

    def __post_init__(self):
        cells = dict(self.cells)
        expected = {(p, s) for p in ProbabilityClass for s in SeverityClass}
        if set(cells) != expected:
            missing = expected - set(cells)
            extra = set(cells) - expected
            raise ParseError(
                f"risk matrix must cover every cell exactly once "
                f"(missing {len(missing)}, extra {len(extra)})"
            )
        for (p, s), level in cells.items():
            for (p2, s2), level2 in cells.items():
                if p2 >= p and s2 >= s and level2 < level:
                    raise ParseError(
                        f"risk matrix not monotone: ({p2.value}, {s2.value}) -> "
                        f"{level2.value} below ({p.value}, {s.value}) -> {level.value}"
                    )
        object.__setattr__(self, "cells", cells)

    def lookup(self, probability: ProbabilityClass, severity: SeverityClass) -> RiskLevel:
        return self.cells[(probability, severity)]


DEFAULT_RISK_MATRIX = RiskMatrix(
    {
        (p, s): RiskLevel.from_label(_MATRIX_LEVELS[p.rank][s.rank])
        for p in ProbabilityClass
        for s in SeverityClass
    }
)

# Risk graph for PLr determination: each of the three binary parameters
# taken at its higher value moves the required level up one branch.
_PLR_GRAPH: Mapping[tuple[str, str, str], PerformanceLevel] = {
    ("S1", "F1", "P1"): PerformanceLevel.A,
    ("S1", "F1", "P2"): PerformanceLevel.B,
    ("S1", "F2", "P1"): PerformanceLevel.B,
    ("S1", "F2", "P2"): PerformanceLevel.C,
    ("S2", "F1", "P1"): PerformanceLevel.C,
    ("S2", "F1", "P2"): PerformanceLevel.D,
    ("S2", "F2", "P1"): PerformanceLevel.D,
    ("S2", "F2", "P2"): PerformanceLevel.E,
}


def risk_matrix_lookup(
    probability: ProbabilityClass,
    severity: SeverityClass,
    matrix: RiskMatrix = DEFAULT_RISK_MATRIX,
) -> RiskLevel:
    """Score a (probability, severity) pair on the risk matrix."""
    return matrix.lookup(probability, severity)


def plr_lookup(triple: SFPTriple) -> PerformanceLevel:
    """Determine the required performance level for an (S, F, P) triple."""
    return _PLR_GRAPH[(triple.s.value, triple.f.value, triple.p.value)]


@dataclass(frozen=True)
class Violation:
    """One validation finding on a hazard record or registry.

    `code` is machine readable; `expected` carries the canonical label the
    field should have held, when one is implied by the scoring tables.
    """

    code: str
    record_id: int | None
    field: str
    message: str
    expected: str | None = None


def _read_data_text(name: str) -> str:
    return resources.files("aerorisk").joinpath("data", name).read_text(encoding="utf-8")


@functools.lru_cache(maxsize=None)
def default_taxonomy() -> Mapping[HazardSource, frozenset[str]]:
    """The shipped (source, hazard type) taxonomy, as source -> allowed types."""
    doc = json.loads(_read_data_text("hazard_taxonomy.json"))
    return {
        HazardSource.from_label(source): frozenset(types)
        for source, types in doc["pairs"].items()
    }


@functools.lru_cache(maxsize=None)
def default_system_limits() -> tuple[SystemLimit, ...]:
    """The shipped limits-of-use worksheet, one entry per limit category."""
    doc = json.loads(_read_data_text("system_limits.json"))
    return tuple(
        SystemLimit(LimitCategory.from_label(row["category"]), row["description"])
        for row in doc["limits"]
    )


def validate_hazard(
    hazard: HazardRecord,
    matrix: RiskMatrix = DEFAULT_RISK_MATRIX,
    taxonomy: Mapping[HazardSource, frozenset[str]] | None = None,
) -> list[Violation]:
    """Check one record against the scoring tables and the taxonomy.

    Returns an empty list for a consistent record. Findings, in field order:

    * `invalid_id`: id is not a positive integer,
    * `unknown_taxonomy_pair`: (source, hazard_type) absent from the taxonomy,
    * `risk_level_mismatch`: risk level differs from the matrix lookup,
    * `sfp_presence`: safeguard without SFP/PLr, or SFP/PLr outside a safeguard,
    * `plr_mismatch`: recorded PLr differs from the risk graph lookup.
    """
    if taxonomy is None:
        taxonomy = default_taxonomy()
    violations: list[Violation] = []
    rid = hazard.id if isinstance(hazard.id, int) else None

    if not isinstance(hazard.id, int) or hazard.id < 1:
        violations.append(
            Violation(
                code="invalid_id",
                record_id=rid,
                field="id",
                message=f"id must be a positive integer, got {hazard.id!r}",
            )
        )

    allowed = taxonomy.get(hazard.source, frozenset())
    if hazard.hazard_type not in allowed:
        violations.append(
            Violation(
                code="unknown_taxonomy_pair",
                record_id=rid,
                field="hazard_type",
                message=(
                    f"record {hazard.id}: type {hazard.hazard_type!r} is not a "
                    f"documented {hazard.source.value} hazard type"
                ),
            )
        )

    scored = matrix.lookup(hazard.probability, hazard.severity)
    if hazard.risk_level is not scored:
        violations.append(
            Violation(
                code="risk_level_mismatch",
                record_id=rid,
                field="risk_level",
                message=(
                    f"record {hazard.id}: risk level {hazard.risk_level.value} does not "
                    f"match matrix value {scored.value} for "
                    f"({hazard.probability.value}, {hazard.severity.value})"
                ),
                expected=scored.value,
            )
        )

    for index, measure in enumerate(hazard.measures):
        where = f"measures[{index}]"
        is_safeguard = measure.category is MeasureCategory.SAFEGUARDING
        has_function = measure.sfp is not None and measure.plr is not None
        if is_safeguard and not has_function:
            violations.append(
                Violation(
                    code="sfp_presence",
                    record_id=rid,
                    field=where,
                    message=(
                        f"record {hazard.id}: safeguard {measure.description!r} "
                        f"must carry both an SFP triple and a PLr"
                    ),
                )
            )
        elif not is_safeguard and (measure.sfp is not None or measure.plr is not None):
            violations.append(
                Violation(
                    code="sfp_presence",
                    record_id=rid,
                    field=where,
                    message=(
                        f"record {hazard.id}: measure {measure.description!r} is not a "
                        f"safeguard and must not carry SFP or PLr"
                    ),
                )
            )
        elif has_function:
            graph_plr = plr_lookup(measure.sfp)
            if measure.plr is not graph_plr:
                violations.append(
                    Violation(
                        code="plr_mismatch",
                        record_id=rid,
                        field=where,
                        message=(
                            f"record {hazard.id}: PLr {measure.plr.value} does not match "
                            f"risk graph value {graph_plr.value} for "
                            f"({measure.sfp.s.value}, {measure.sfp.f.value}, "
                            f"{measure.sfp.p.value})"
                        ),
                        expected=graph_plr.value,
                    )
                )
    return violations


def validate_registry(
    records: Sequence[HazardRecord],
    matrix: RiskMatrix = DEFAULT_RISK_MATRIX,
    taxonomy: Mapping[HazardSource, frozenset[str]] | None = None,
) -> list[Violation]:
    """Validate every record plus registry-level uniqueness of ids."""
    violations: list[Violation] = []
    seen: dict[int, int] = {}
    for record in records:
        if record.id in seen:
            violations.append(
                Violation(
                    code="duplicate_id",
                    record_id=record.id,
                    field="id",
                    message=f"id {record.id} appears more than once",
                )
            )
        seen[record.id] = seen.get(record.id, 0) + 1
        violations.extend(validate_hazard(record, matrix, taxonomy))
    return violations


def _measure_from_doc(doc: Mapping, context: str) -> MitigationMeasure:
    try:
        description = doc["description"]
        category = MeasureCategory.from_label(doc["category"])
    except KeyError as exc:
        raise ParseError(f"{context}: measure missing field {exc.args[0]!r}") from None
    sfp_doc = doc.get("sfp")
    sfp = None
    if sfp_doc is not None:
        try:
            sfp = SFPTriple(
                s=InjurySeverity.from_label(sfp_doc["s"]),
                f=ExposureFrequency.from_label(sfp_doc["f"]),
                p=AvoidancePossibility.from_label(sfp_doc["p"]),
            )
        except KeyError as exc:
            raise ParseError(f"{context}: sfp missing field {exc.args[0]!r}") from None
    plr_label = doc.get("plr")
    plr = PerformanceLevel.from_label(plr_label) if plr_label is not None else None
    return MitigationMeasure(description=description, category=category, sfp=sfp, plr=plr)


def _record_from_doc(doc: Mapping) -> HazardRecord:
    try:
        rid = doc["id"]
        context = f"hazard {rid!r}"
        return HazardRecord(
            id=rid,
            name=doc["name"],
            source=HazardSource.from_label(doc["source"]),
            hazard_type=doc["hazard_type"],
            element=doc["element"],
            cause=doc["cause"],
            consequence=doc["consequence"],
            probability=ProbabilityClass.from_label(doc["probability"]),
            severity=SeverityClass.from_label(doc["severity"]),
            risk_level=RiskLevel.from_label(doc["risk_level"]),
            measures=tuple(
                _measure_from_doc(m, context) for m in doc.get("measures", [])
            ),
        )
    except KeyError as exc:
        raise ParseError(f"hazard record missing field {exc.args[0]!r}") from None


def registry_from_doc(doc: Mapping) -> list[HazardRecord]:
    """Parse a registry document into records, without semantic validation."""
    if not isinstance(doc, Mapping) or "hazards" not in doc:
        raise ParseError("registry document must be an object with a 'hazards' array")
    hazards = doc["hazards"]
    if not isinstance(hazards, list):
        raise ParseError("'hazards' must be an array")
    return [_record_from_doc(item) for item in hazards]


def _measure_to_doc(measure: MitigationMeasure) -> dict:
    doc: dict = {
        "description": measure.description,
        "category": measure.category.value,
    }
    if measure.sfp is not None:
        doc["sfp"] = {
            "s": measure.sfp.s.value,
            "f": measure.sfp.f.value,
            "p": measure.sfp.p.value,
        }
    if measure.plr is not None:
        doc["plr"] = measure.plr.value
    return doc


def registry_to_doc(records: Iterable[HazardRecord]) -> dict:
    """Serialize records into the registry document shape."""
    return {
        "hazards": [
            {
                "id": r.id,
                "name": r.name,
                "source": r.source.value,
                "hazard_type": r.hazard_type,
                "element": r.element,
                "cause": r.cause,
                "consequence": r.consequence,
                "probability": r.probability.value,
                "severity": r.severity.value,
                "risk_level": r.risk_level.value,
                "measures": [_measure_to_doc(m) for m in r.measures],
            }
            for r in records
        ]
    }


def registry_loads(
    text: str,
    matrix: RiskMatrix = DEFAULT_RISK_MATRIX,
    taxonomy: Mapping[HazardSource, frozenset[str]] | None = None,
) -> list[HazardRecord]:
    """Parse and validate a registry document from JSON text.

    Raises `ParseError` on malformed documents and `RegistryValidationError`
    (carrying the violation list) when any record is inconsistent.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"registry is not valid JSON: {exc}") from None
    records = registry_from_doc(doc)
    violations = validate_registry(records, matrix, taxonomy)
    if violations:
        raise RegistryValidationError(violations)
    return records


def registry_dumps(records: Iterable[HazardRecord]) -> str:
    """Serialize records to deterministic JSON text."""
    return json.dumps(registry_to_doc(records), indent=2) + "\n"


def registry_load(path) -> list[HazardRecord]:
    with open(path, "r", encoding="utf-8") as handle:
        return registry_loads(handle.read())


def registry_dump(records: Iterable[HazardRecord], path) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(registry_dumps(records))
