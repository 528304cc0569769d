"""Deterministic mission risk reports in markdown or JSON.

Identical inputs yield byte-identical output: no timestamps, no
environment-dependent content, fixed key order. Markdown renders
probabilities as percentages with three decimal places; the JSON format
carries raw double-precision numbers for downstream tooling.
"""

from __future__ import annotations

import json
from typing import Sequence

from .errors import RangeError
from .hazards import HazardRecord, registry_to_doc
from .scenario import ScenarioResult
from .sensitivity import TornadoAnalysis

__all__ = ["emit_report"]


def _pct(value: float) -> str:
    return f"{value * 100.0:.3f}%"


def _pp(value: float) -> str:
    return f"{value * 100.0:+.3f}pp"


def _hazard_lines(registry: Sequence[HazardRecord]) -> list[str]:
    lines = [
        "## Hazard register",
        "",
        "| ID | Hazard | Source | Type | Element | Probability | Severity | Risk level |",
        "| --- | --- | --- | --- | --- | --- | --- | --- |",
    ]
    for record in registry:
        lines.append(
            f"| {record.id} | {record.name} | {record.source.value} | "
            f"{record.hazard_type} | {record.element} | {record.probability.value} | "
            f"{record.severity.value} | {record.risk_level.value} |"
        )
    lines.append("")
    lines.append("### Risk reduction measures")
    lines.append("")
    for record in registry:
        lines.append(f"- Hazard {record.id}: {record.name}")
        for measure in record.measures:
            if measure.sfp is not None and measure.plr is not None:
                function = (
                    f" ({measure.sfp.s.value}, {measure.sfp.f.value}, "
                    f"{measure.sfp.p.value}) -> PLr {measure.plr.value}"
                )
            else:
                function = ""
            lines.append(f"  - [{measure.category.value}] {measure.description}{function}")
    lines.append("")
    return lines


def _scenario_lines(results: Sequence[ScenarioResult]) -> list[str]:
    lines = ["## Scenarios", ""]
    for result in results:
        lines.append(f"### {result.name}")
        lines.append("")
        lines.append(f"Target: {result.target}")
        lines.append("")
        for warning in result.warnings:
            lines.append(f"> Warning: {warning}")
        if result.warnings:
            lines.append("")
        lines.append("| State | Prior | Posterior | Delta |")
        lines.append("| --- | --- | --- | --- |")
        for state, prior, posterior, delta in zip(
            result.prior.states,
            result.prior.probabilities,
            result.posterior.probabilities,
            result.deltas,
        ):
            lines.append(
                f"| {state} | {_pct(prior)} | {_pct(posterior)} | {_pp(delta)} |"
            )
        lines.append("")
    return lines


def _tornado_lines(tornado: TornadoAnalysis) -> list[str]:
    lines = [
        "## Sensitivity",
        "",
        f"Target: {tornado.target} = {tornado.target_state} "
        f"(baseline {_pct(tornado.baseline)})",
        "",
        "| Node | Low | High | Bar length | Per-state values |",
        "| --- | --- | --- | --- | --- |",
    ]
    for row in tornado.rows:
        cells = ", ".join(
            f"{state}: {'-' if value is None else _pct(value)}"
            for state, value in zip(row.states, row.values)
        )
        lines.append(
            f"| {row.node} | {_pct(row.low)} | {_pct(row.high)} | "
            f"{_pct(row.bar_length)} | {cells} |"
        )
    lines.append("")
    return lines


def _markdown(
    results: Sequence[ScenarioResult],
    tornado: TornadoAnalysis | None,
    registry: Sequence[HazardRecord],
) -> str:
    lines = ["# Mission risk report", ""]
    if registry:
        lines.extend(_hazard_lines(registry))
    if results:
        lines.extend(_scenario_lines(results))
    if tornado is not None:
        lines.extend(_tornado_lines(tornado))
    return "\n".join(lines).rstrip("\n") + "\n"


def _json(
    results: Sequence[ScenarioResult],
    tornado: TornadoAnalysis | None,
    registry: Sequence[HazardRecord],
) -> str:
    doc = {
        "format": "mission-risk-report",
        "hazards": registry_to_doc(list(registry))["hazards"],
        "scenarios": [result.as_doc() for result in results],
        "tornado": None if tornado is None else tornado.as_doc(),
    }
    return json.dumps(doc, indent=2) + "\n"


def emit_report(
    results: Sequence[ScenarioResult] = (),
    tornado: TornadoAnalysis | None = None,
    registry: Sequence[HazardRecord] = (),
    format: str = "markdown",
) -> str:
    """Render scenario results, a tornado analysis, and the hazard register."""
    if format == "markdown":
        return _markdown(results, tornado, registry)
    if format == "json":
        return _json(results, tornado, registry)
    raise RangeError(f"unknown report format {format!r}")
