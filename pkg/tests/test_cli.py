"""CLI contract: exit codes, output formats, parity with the library."""

import json

import pytest

from aerorisk import fixtures
from aerorisk.cli import execute_command
from aerorisk.hazards import registry_to_doc
from aerorisk.inference import variable_elimination_posterior
from aerorisk.network import network_load, network_to_doc
from aerorisk.scenario import run_scenario
from aerorisk.sensitivity import sensitivity_tornado


def test_validate_default_registry_is_valid():
    result = execute_command(["validate"])
    assert result.exit_code == 0
    assert "valid" in result.output


def test_validate_reports_violations(tmp_path):
    doc = registry_to_doc(fixtures.default_registry())
    doc["hazards"][0]["risk_level"] = "Low"
    path = tmp_path / "registry.json"
    path.write_text(json.dumps(doc))
    result = execute_command(["validate", "--registry", str(path)])
    assert result.exit_code == 1
    assert "risk_level_mismatch" in result.output


def test_validate_json_format(tmp_path):
    doc = registry_to_doc(fixtures.default_registry())
    doc["hazards"][0]["risk_level"] = "Low"
    path = tmp_path / "registry.json"
    path.write_text(json.dumps(doc))
    result = execute_command(
        ["validate", "--registry", str(path), "--format", "json"]
    )
    assert result.exit_code == 1
    body = json.loads(result.output)
    assert body["valid"] is False
    assert body["records"] == 11
    assert body["violations"][0]["code"] == "risk_level_mismatch"


def test_validate_missing_file_fails_cleanly():
    result = execute_command(["validate", "--registry", "/no/such/file.json"])
    assert result.exit_code == 1
    assert result.diagnostics and "error[io]" in result.diagnostics[0]


def test_validate_malformed_json_fails_cleanly(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{nope")
    result = execute_command(["validate", "--registry", str(path)])
    assert result.exit_code == 1
    assert "error[parse]" in result.diagnostics[0]


def test_usage_errors_exit_two():
    assert execute_command([]).exit_code == 2
    assert execute_command(["frobnicate"]).exit_code == 2
    assert execute_command(["run", "--no-such-flag"]).exit_code == 2


def test_help_exits_zero_with_usage():
    result = execute_command(["--help"])
    assert result.exit_code == 0
    assert "usage: aerorisk" in result.output


def test_assemble_writes_a_loadable_network(tmp_path):
    out = tmp_path / "model.json"
    result = execute_command(["assemble", "--output", str(out)])
    assert result.exit_code == 0
    net = network_load(out)
    assert net == fixtures.default_crash_model()


def test_assemble_stdout_is_the_network_document():
    result = execute_command(["assemble"])
    assert result.exit_code == 0
    doc = json.loads(result.output)
    assert doc == network_to_doc(fixtures.default_crash_model())


def test_assemble_median_policy_changes_the_priors():
    mean = json.loads(execute_command(["assemble"]).output)
    median = json.loads(
        execute_command(["assemble", "--policy", "median"]).output
    )
    assert mean != median


def test_run_json_matches_library(crash_model):
    result = execute_command(
        ["run", "--scenario", "pilot-error", "--format", "json"]
    )
    assert result.exit_code == 0
    body = json.loads(result.output)
    expected = run_scenario(
        crash_model, fixtures.default_scenario("pilot-error")
    ).as_doc()
    assert body == expected


def test_run_accepts_scenario_files(tmp_path, crash_model):
    path = tmp_path / "scenario.json"
    path.write_text(
        json.dumps(
            {
                "name": "file scenario",
                "target": "Crash",
                "direction": "Causal",
                "evidence": {"WE": "YES"},
            }
        )
    )
    result = execute_command(["run", "--scenario", str(path), "--format", "json"])
    assert result.exit_code == 0
    body = json.loads(result.output)
    posterior = variable_elimination_posterior(crash_model, {"WE": "YES"}, "Crash")
    assert body["posterior"] == list(posterior.probabilities)


def test_run_unknown_scenario_fails_cleanly():
    result = execute_command(["run", "--scenario", "/missing/path.json"])
    assert result.exit_code == 1
    assert result.diagnostics


def test_run_markdown_has_scenario_section():
    result = execute_command(["run", "--scenario", "external-pressure"])
    assert result.exit_code == 0
    assert "### adverse external conditions" in result.output


def test_diagnose_json_matches_library(crash_model):
    result = execute_command(
        ["diagnose", "--scenario", "crash-diagnosis", "--format", "json"]
    )
    assert result.exit_code == 0
    body = json.loads(result.output)
    expected = variable_elimination_posterior(
        crash_model, {"Crash": "very high"}, "external sources"
    ).as_doc()
    assert body == expected


def test_tornado_json_matches_library(crash_model):
    result = execute_command(["tornado", "--format", "json"])
    assert result.exit_code == 0
    body = json.loads(result.output)
    expected = sensitivity_tornado(
        crash_model, "Crash", "very high",
        ["external sources", "internal sources"],
    ).as_doc()
    assert body == expected


def test_tornado_accepts_custom_nodes_and_base_scenario(crash_model):
    result = execute_command(
        [
            "tornado",
            "--nodes", "PE,SCFM",
            "--scenario", "external-pressure",
            "--format", "json",
        ]
    )
    assert result.exit_code == 0
    body = json.loads(result.output)
    evidence = dict(fixtures.default_scenario("external-pressure").evidence)
    expected = sensitivity_tornado(
        crash_model, "Crash", "very high", ["PE", "SCFM"], evidence
    ).as_doc()
    assert body == expected


def test_tornado_unknown_node_fails_cleanly():
    result = execute_command(["tornado", "--nodes", "Nope"])
    assert result.exit_code == 1
    assert "unknown_node" in result.diagnostics[0]


def test_report_json_is_complete():
    result = execute_command(["report", "--format", "json"])
    assert result.exit_code == 0
    body = json.loads(result.output)
    assert body["format"] == "mission-risk-report"
    assert len(body["hazards"]) == 11
    assert len(body["scenarios"]) == 3
    assert body["tornado"] is not None


def test_report_accepts_repeated_scenarios():
    result = execute_command(
        [
            "report",
            "--scenario", "pilot-error",
            "--scenario", "crash-diagnosis",
            "--format", "json",
        ]
    )
    assert result.exit_code == 0
    body = json.loads(result.output)
    names = [s["name"] for s in body["scenarios"]]
    assert names == ["pilot error observed", "severe crash reported"]


def test_run_with_model_file(tmp_path):
    out = tmp_path / "model.json"
    execute_command(["assemble", "--output", str(out)])
    via_file = execute_command(
        ["run", "--model", str(out), "--scenario", "pilot-error", "--format", "json"]
    )
    via_default = execute_command(
        ["run", "--scenario", "pilot-error", "--format", "json"]
    )
    assert json.loads(via_file.output) == json.loads(via_default.output)
