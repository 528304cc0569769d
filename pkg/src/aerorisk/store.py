"""Content-addressed model store backed by a directory of JSON files.

A model's id is the SHA-256 of its canonical serialization, so storing the
same document twice is a no-op and a stored model is never mutated in
place: changed content is a new id, which is what makes concurrent readers
safe. Writes go through a per-store lock and an atomic rename.
"""

from __future__ import annotations

import hashlib
import json
import os
import re
import tempfile
import threading
from pathlib import Path

from .errors import UnknownModelError

__all__ = ["ModelStore"]

_ID_PATTERN = re.compile(r"^[0-9a-f]{64}$")


def _canonical(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


class ModelStore:
    def __init__(self, root):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)
        self._lock = threading.Lock()

    def put(self, doc: dict) -> str:
        """Store a document, returning its content id."""
        canonical = _canonical(doc)
        model_id = hashlib.sha256(canonical.encode("utf-8")).hexdigest()
        path = self.root / f"{model_id}.json"
        with self._lock:
            if not path.exists():
                fd, tmp_name = tempfile.mkstemp(dir=self.root, suffix=".tmp")
                try:
                    with os.fdopen(fd, "w", encoding="utf-8") as handle:
                        handle.write(canonical)
                    os.replace(tmp_name, path)
                except BaseException:
                    if os.path.exists(tmp_name):
                        os.unlink(tmp_name)
                    raise
        return model_id

    def get(self, model_id: str) -> dict:
        if not _ID_PATTERN.match(model_id):
            raise UnknownModelError(model_id)
        path = self.root / f"{model_id}.json"
        try:
            with open(path, "r", encoding="utf-8") as handle:
                return json.load(handle)
        except FileNotFoundError:
            raise UnknownModelError(model_id) from None

    def __contains__(self, model_id: str) -> bool:
        return bool(_ID_PATTERN.match(model_id)) and (
            self.root / f"{model_id}.json"
        ).exists()

    def ids(self) -> list[str]:
        return sorted(
            path.stem for path in self.root.glob("*.json") if _ID_PATTERN.match(path.stem)
        )
