"""Command line interface over the library's file formats.

Exit codes: 0 success, 1 domain or validation failure, 2 usage errors.
`execute_command` returns the outcome as data so tests and callers can
drive the CLI without a subprocess; `main` is the console entry point.
"""

from __future__ import annotations

import argparse
import contextlib
import io
import json
import os
import sys
from dataclasses import dataclass

from . import fixtures
from .errors import AeroRiskError, ParseError
from .hazards import registry_from_doc, validate_registry
from .inference import variable_elimination_posterior
from .network import network_dumps, network_load, network_to_doc
from .calibration import assemble_crash_model, derive_priors, load_crash_model_spec, load_frequency_table
from .report import emit_report
from .scenario import Scenario, run_scenario, scenario_load
from .sensitivity import sensitivity_tornado
from .service import create_server, violation_to_doc

__all__ = ["CommandResult", "execute_command", "main"]

DEFAULT_STORE = ".aerorisk_store"
DEFAULT_TORNADO_NODES = "external sources,internal sources"


@dataclass(frozen=True)
class CommandResult:
    exit_code: int
    output: str
    diagnostics: tuple[str, ...] = ()


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="aerorisk",
        description="Mission risk assessment: hazard registry scoring and crash model queries.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument(
            "--format",
            choices=("markdown", "json"),
            default="markdown",
            help="output format (default: markdown)",
        )

    def add_model(p):
        p.add_argument(
            "--model",
            help="network document path (default: the packaged crash model)",
        )
        p.add_argument(
            "--policy",
            choices=("mean", "median"),
            default="mean",
            help="prior aggregation policy when assembling the default model",
        )

    p = sub.add_parser("validate", help="validate a hazard registry document")
    p.add_argument("--registry", help="registry path (default: packaged registry)")
    add_format(p)

    p = sub.add_parser("assemble", help="derive priors and assemble the crash network")
    p.add_argument("--frequencies", help="frequency table path (default: packaged table)")
    p.add_argument("--spec", help="model description path (default: packaged description)")
    p.add_argument(
        "--policy",
        choices=("mean", "median"),
        default="mean",
        help="prior aggregation policy (default: mean)",
    )
    p.add_argument("--output", help="write the network document here instead of stdout")

    p = sub.add_parser("run", help="run a scenario against a model")
    add_model(p)
    p.add_argument(
        "--scenario",
        required=True,
        help="scenario path, or one of: " + ", ".join(fixtures.default_scenario_names()),
    )
    add_format(p)

    p = sub.add_parser("diagnose", help="posterior of a scenario's target given its evidence")
    add_model(p)
    p.add_argument(
        "--scenario",
        required=True,
        help="scenario path, or one of: " + ", ".join(fixtures.default_scenario_names()),
    )
    add_format(p)

    p = sub.add_parser("tornado", help="one-way sensitivity ranking")
    add_model(p)
    p.add_argument("--target", default="Crash", help="target node (default: Crash)")
    p.add_argument("--state", default="very high", help="target state (default: very high)")
    p.add_argument(
        "--nodes",
        default=DEFAULT_TORNADO_NODES,
        help="comma-separated sensitivity nodes",
    )
    p.add_argument("--scenario", help="optional scenario supplying base evidence")
    add_format(p)

    p = sub.add_parser("report", help="full report: registry, scenarios, tornado")
    add_model(p)
    p.add_argument("--registry", help="registry path (default: packaged registry)")
    p.add_argument(
        "--scenario",
        action="append",
        help="scenario path or shipped name; repeatable (default: shipped causal scenarios)",
    )
    p.add_argument("--target", default="Crash", help="tornado target node")
    p.add_argument("--state", default="very high", help="tornado target state")
    p.add_argument("--nodes", default=DEFAULT_TORNADO_NODES, help="tornado sensitivity nodes")
    add_format(p)

    p = sub.add_parser("serve", help="start the HTTP service")
    p.add_argument("--port", type=int, default=8080, help="port to bind (default: 8080)")
    p.add_argument(
        "--store",
        help=f"model store directory (default: $AERORISK_STORE or ./{DEFAULT_STORE})",
    )
    p.add_argument("--registry", help="registry served at /v1/registry (default: packaged)")
    return parser


def _load_registry_doc(path: str | None) -> dict:
    if path is None:
        return json.loads(fixtures.fixture_text("hazard_registry.json"))
    with open(path, "r", encoding="utf-8") as handle:
        text = handle.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"registry is not valid JSON: {exc}") from None


def _load_model(args):
    if args.model is None:
        return fixtures.default_crash_model(args.policy)
    return network_load(args.model)


def _load_scenario(value: str) -> Scenario:
    if value in fixtures.default_scenario_names():
        return fixtures.default_scenario(value)
    return scenario_load(value)


def _cmd_validate(args) -> CommandResult:
    doc = _load_registry_doc(args.registry)
    records = registry_from_doc(doc)
    violations = validate_registry(records)
    if args.format == "json":
        output = json.dumps(
            {
                "valid": not violations,
                "records": len(records),
                "violations": [violation_to_doc(v) for v in violations],
            },
            indent=2,
        )
    else:
        lines = [f"registry: {len(records)} record(s)"]
        for violation in violations:
            suffix = f" (expected {violation.expected})" if violation.expected else ""
            lines.append(f"- [{violation.code}] {violation.message}{suffix}")
        lines.append("valid" if not violations else f"invalid: {len(violations)} violation(s)")
        output = "\n".join(lines)
    return CommandResult(0 if not violations else 1, output + "\n")


def _cmd_assemble(args) -> CommandResult:
    table = (
        fixtures.default_frequency_table()
        if args.frequencies is None
        else load_frequency_table(args.frequencies)
    )
    spec = (
        fixtures.default_crash_model_spec()
        if args.spec is None
        else load_crash_model_spec(args.spec)
    )
    net = assemble_crash_model(derive_priors(table, args.policy), spec)
    text = network_dumps(net)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
        return CommandResult(0, "", (f"wrote {args.output}",))
    return CommandResult(0, text)


def _distribution_markdown(title: str, dist) -> str:
    lines = [title, "", "| State | Probability |", "| --- | --- |"]
    for state, p in zip(dist.states, dist.probabilities):
        lines.append(f"| {state} | {p * 100.0:.3f}% |")
    return "\n".join(lines) + "\n"


def _cmd_run(args) -> CommandResult:
    net = _load_model(args)
    scenario = _load_scenario(args.scenario)
    result = run_scenario(net, scenario)
    if args.format == "json":
        return CommandResult(0, json.dumps(result.as_doc(), indent=2) + "\n")
    return CommandResult(0, emit_report(results=[result], format="markdown"))


def _cmd_diagnose(args) -> CommandResult:
    net = _load_model(args)
    scenario = _load_scenario(args.scenario)
    posterior = variable_elimination_posterior(net, scenario.evidence, scenario.target)
    if args.format == "json":
        return CommandResult(0, json.dumps(posterior.as_doc(), indent=2) + "\n")
    title = f"Posterior of {scenario.target} given {dict(scenario.evidence)}"
    return CommandResult(0, _distribution_markdown(title, posterior))


def _cmd_tornado(args) -> CommandResult:
    net = _load_model(args)
    base_evidence = {}
    if args.scenario:
        base_evidence = dict(_load_scenario(args.scenario).evidence)
    nodes = [name.strip() for name in args.nodes.split(",") if name.strip()]
    analysis = sensitivity_tornado(net, args.target, args.state, nodes, base_evidence)
    if args.format == "json":
        return CommandResult(0, json.dumps(analysis.as_doc(), indent=2) + "\n")
    return CommandResult(0, emit_report(tornado=analysis, format="markdown"))


def _cmd_report(args) -> CommandResult:
    net = _load_model(args)
    registry = registry_from_doc(_load_registry_doc(args.registry))
    names = args.scenario or ["pilot-error", "external-pressure", "internal-degradation"]
    results = [run_scenario(net, _load_scenario(name)) for name in names]
    nodes = [name.strip() for name in args.nodes.split(",") if name.strip()]
    tornado = sensitivity_tornado(net, args.target, args.state, nodes, {})
    return CommandResult(
        0,
        emit_report(results=results, tornado=tornado, registry=registry, format=args.format),
    )


def _cmd_serve(args) -> CommandResult:
    store_root = args.store or os.environ.get("AERORISK_STORE") or DEFAULT_STORE
    registry = registry_from_doc(_load_registry_doc(args.registry))
    server = create_server(store_root, port=args.port, registry=registry)
    host, port = server.server_address[:2]
    print(f"serving on http://{host}:{port} (store: {store_root})", file=sys.stderr)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
    return CommandResult(0, "")


_HANDLERS = {
    "validate": _cmd_validate,
    "assemble": _cmd_assemble,
    "run": _cmd_run,
    "diagnose": _cmd_diagnose,
    "tornado": _cmd_tornado,
    "report": _cmd_report,
    "serve": _cmd_serve,
}


def execute_command(argv) -> CommandResult:
    """Run one CLI invocation and return its outcome as data."""
    parser = _build_parser()
    captured_out, captured_err = io.StringIO(), io.StringIO()
    try:
        with contextlib.redirect_stdout(captured_out), contextlib.redirect_stderr(captured_err):
            args = parser.parse_args(list(argv))
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else 2
        diagnostics = tuple(line for line in captured_err.getvalue().splitlines() if line)
        return CommandResult(code, captured_out.getvalue(), diagnostics)

    try:
        return _HANDLERS[args.command](args)
    except AeroRiskError as exc:
        return CommandResult(1, "", (f"error[{exc.code}]: {exc}",))
    except OSError as exc:
        return CommandResult(1, "", (f"error[io]: {exc}",))
    except json.JSONDecodeError as exc:
        return CommandResult(1, "", (f"error[parse]: {exc}",))


def main() -> int:
    result = execute_command(sys.argv[1:])
    if result.output:
        sys.stdout.write(result.output)
    for line in result.diagnostics:
        print(line, file=sys.stderr)
    return result.exit_code


if __name__ == "__main__":
    raise SystemExit(main())
