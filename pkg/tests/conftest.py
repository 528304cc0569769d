"""Shared fixtures: packaged data, the assembled crash model, a live service."""

from __future__ import annotations

import threading

import pytest

from aerorisk import fixtures
from aerorisk.service import create_server


@pytest.fixture(scope="session")
def registry():
    return fixtures.default_registry()


@pytest.fixture(scope="session")
def frequency_table():
    return fixtures.default_frequency_table()


@pytest.fixture(scope="session")
def model_spec():
    return fixtures.default_crash_model_spec()


@pytest.fixture(scope="session")
def crash_model():
    return fixtures.default_crash_model()


@pytest.fixture(scope="session")
def service_base(tmp_path_factory):
    """A live HTTP service on an ephemeral port, torn down after the session."""
    store_root = tmp_path_factory.mktemp("model_store")
    server = create_server(str(store_root), port=0)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    host, port = server.server_address[:2]
    yield f"http://{host}:{port}"
    server.shutdown()
    server.server_close()
    thread.join(timeout=5)
