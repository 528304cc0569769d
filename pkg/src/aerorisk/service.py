"""HTTP interface: model storage, posterior queries, registry validation.

Runs on the standard library's threading HTTP server; every request and
response body is JSON. Errors use one wire shape,

    {"error": {"code": <machine code>, "message": <text>, "violations": [...]}}

with the code drawn from the package's error vocabulary. Status mapping:
400 malformed JSON or request shape, 404 unknown model or path, 409
evidence with probability zero, 422 semantic validation failures (bad
network, unknown node or state). Stored models are content-addressed and
never mutated in place; updated content lands under a new id.
"""

from __future__ import annotations

import json
import re
import threading
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from typing import Sequence

from .errors import (
    AeroRiskError,
    ParseError,
    UnknownModelError,
    UnknownNodeError,
    UnknownStateError,
    ZeroEvidenceProbability,
)
from .fixtures import default_registry
from .hazards import (
    HazardRecord,
    Violation,
    registry_from_doc,
    registry_to_doc,
    validate_registry,
)
from .network import BayesianNetwork, network_from_doc, network_to_doc
from .inference import variable_elimination_posterior
from .sensitivity import sensitivity_tornado
from .store import ModelStore

__all__ = ["RiskService", "create_server", "violation_to_doc"]


def violation_to_doc(violation: Violation) -> dict:
    return {
        "code": violation.code,
        "record_id": violation.record_id,
        "field": violation.field,
        "message": violation.message,
        "expected": violation.expected,
    }


def _error(status: int, code: str, message: str, violations: list | None = None):
    body: dict = {"error": {"code": code, "message": message}}
    if violations is not None:
        body["error"]["violations"] = violations
    return status, body


class RiskService:
    """Route logic, independent of the HTTP plumbing for direct testing."""

    def __init__(self, store: ModelStore, registry: Sequence[HazardRecord] | None = None):
        self.store = store
        self.registry = list(registry) if registry is not None else default_registry()
        self._networks: dict[str, BayesianNetwork] = {}
        self._cache_lock = threading.Lock()

    def _network(self, model_id: str) -> BayesianNetwork:
        with self._cache_lock:
            cached = self._networks.get(model_id)
        if cached is not None:
            return cached
        net = network_from_doc(self.store.get(model_id))
        with self._cache_lock:
            self._networks[model_id] = net
        return net

    # -- route handlers; each returns (status, body) ---------------------------

    def create_model(self, doc) -> tuple[int, dict]:
        try:
            net = network_from_doc(doc)
        except ParseError as exc:
            return _error(400, exc.code, str(exc))
        except AeroRiskError as exc:
            return _error(
                422,
                exc.code,
                str(exc),
                violations=[{"code": exc.code, "message": str(exc)}],
            )
        canonical_doc = network_to_doc(net)
        model_id = self.store.put(canonical_doc)
        with self._cache_lock:
            self._networks.setdefault(model_id, net)
        return 201, {"id": model_id, "url": f"/v1/models/{model_id}"}

    def get_model(self, model_id: str) -> tuple[int, dict]:
        try:
            return 200, self.store.get(model_id)
        except UnknownModelError as exc:
            return _error(404, exc.code, str(exc))

    def query_model(self, model_id: str, body) -> tuple[int, dict]:
        if not isinstance(body, dict) or not isinstance(body.get("target"), str):
            return _error(400, "bad_request", "body must have a string 'target'")
        evidence = body.get("evidence", {})
        if not isinstance(evidence, dict):
            return _error(400, "bad_request", "'evidence' must be an object")
        try:
            net = self._network(model_id)
            posterior = variable_elimination_posterior(net, evidence, body["target"])
        except UnknownModelError as exc:
            return _error(404, exc.code, str(exc))
        except (UnknownNodeError, UnknownStateError) as exc:
            return _error(422, exc.code, str(exc))
        except ZeroEvidenceProbability as exc:
            return _error(409, exc.code, str(exc))
        except AeroRiskError as exc:
            return _error(422, exc.code, str(exc))
        return 200, posterior.as_doc()

    def tornado_model(self, model_id: str, body) -> tuple[int, dict]:
        if not isinstance(body, dict):
            return _error(400, "bad_request", "body must be an object")
        target = body.get("target")
        target_state = body.get("target_state")
        nodes = body.get("nodes")
        evidence = body.get("evidence", {})
        if (
            not isinstance(target, str)
            or not isinstance(target_state, str)
            or not isinstance(nodes, list)
            or not all(isinstance(n, str) for n in nodes)
            or not isinstance(evidence, dict)
        ):
            return _error(
                400,
                "bad_request",
                "body must have string 'target' and 'target_state' and a "
                "'nodes' array of strings",
            )
        try:
            net = self._network(model_id)
            analysis = sensitivity_tornado(net, target, target_state, nodes, evidence)
        except UnknownModelError as exc:
            return _error(404, exc.code, str(exc))
        except (UnknownNodeError, UnknownStateError) as exc:
            return _error(422, exc.code, str(exc))
        except ZeroEvidenceProbability as exc:
            return _error(409, exc.code, str(exc))
        except ValueError as exc:
            return _error(422, "validation", str(exc))
        except AeroRiskError as exc:
            return _error(422, exc.code, str(exc))
        return 200, analysis.as_doc()

    def registry_doc(self) -> tuple[int, dict]:
        return 200, registry_to_doc(self.registry)

    def validate_registry_doc(self, doc) -> tuple[int, dict]:
        try:
            records = registry_from_doc(doc)
        except ParseError as exc:
            return _error(400, exc.code, str(exc))
        violations = validate_registry(records)
        return 200, {
            "valid": not violations,
            "records": len(records),
            "violations": [violation_to_doc(v) for v in violations],
        }


_MODEL_ROUTE = re.compile(r"^/v1/models/([0-9a-f]{64})$")
_QUERY_ROUTE = re.compile(r"^/v1/models/([0-9a-f]{64})/query$")
_TORNADO_ROUTE = re.compile(r"^/v1/models/([0-9a-f]{64})/tornado$")


class _Handler(BaseHTTPRequestHandler):
    service: RiskService

    def log_message(self, format, *args):
        pass

    def _respond(self, status: int, body: dict) -> None:
        payload = json.dumps(body, indent=2).encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json; charset=utf-8")
        self.send_header("Content-Length", str(len(payload)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(payload)

    def _read_body(self):
        length = int(self.headers.get("Content-Length") or 0)
        raw = self.rfile.read(length) if length else b""
        if not raw:
            return None, _error(400, "bad_request", "request body required")
        try:
            return json.loads(raw.decode("utf-8")), None
        except (json.JSONDecodeError, UnicodeDecodeError) as exc:
            return None, _error(400, "parse", f"body is not valid JSON: {exc}")

    def do_OPTIONS(self):
        self.send_response(204)
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.end_headers()

    def do_GET(self):
        if self.path == "/v1/registry":
            self._respond(*self.service.registry_doc())
            return
        match = _MODEL_ROUTE.match(self.path)
        if match:
            self._respond(*self.service.get_model(match.group(1)))
            return
        self._respond(*_error(404, "not_found", f"no route for GET {self.path}"))

    def do_POST(self):
        body, failure = self._read_body()
        if failure is not None:
            self._respond(*failure)
            return
        if self.path == "/v1/models":
            self._respond(*self.service.create_model(body))
            return
        if self.path == "/v1/registry/validate":
            self._respond(*self.service.validate_registry_doc(body))
            return
        match = _QUERY_ROUTE.match(self.path)
        if match:
            self._respond(*self.service.query_model(match.group(1), body))
            return
        match = _TORNADO_ROUTE.match(self.path)
        if match:
            self._respond(*self.service.tornado_model(match.group(1), body))
            return
        self._respond(*_error(404, "not_found", f"no route for POST {self.path}"))


def create_server(
    store_root,
    port: int = 0,
    registry: Sequence[HazardRecord] | None = None,
    host: str = "127.0.0.1",
) -> ThreadingHTTPServer:
    """Build a ready-to-serve HTTP server bound to `host:port` (0 = ephemeral)."""
    service = RiskService(ModelStore(store_root), registry)
    handler = type("BoundHandler", (_Handler,), {"service": service})
    server = ThreadingHTTPServer((host, port), handler)
    server.service = service  # type: ignore[attr-defined]
    return server
