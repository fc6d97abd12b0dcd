"""Checkpoint files for the partition pass and the append-only result cache.

Checkpoints are canonical JSON (sorted keys, no whitespace) with every big
integer written as a decimal string::

    {"completed_chunks":[60,59],"format":"bsize-checkpoint","ks":[10],
     "last_completed_chunk":59,"n":60,"tables":{"10":{"0":"-12",...}},
     "version":1,"visited":2}

Chunk identifiers are largest-part values.  The result cache is a text file
of ``n,k,b`` lines.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from pathlib import Path

from .errors import CheckpointError

FORMAT = "bsize-checkpoint"
VERSION = 1
CACHE_ENV = "BSIZE_CACHE"


@dataclass
class CheckpointState:
    tables: dict[int, dict[int, int]]
    completed: list[int]
    visited: int


def dumps_canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def save_checkpoint(path, *, n: int, ks, tables, completed, visited: int) -> None:
    doc = {
        "format": FORMAT,
        "version": VERSION,
        "n": n,
        "ks": list(ks),
        "completed_chunks": list(completed),
        "last_completed_chunk": completed[-1] if completed else None,
        "visited": visited,
        "tables": {str(k): {str(m): str(w) for m, w in sorted(t.items())}
                   for k, t in tables.items()},
    }
    path = Path(path)
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(dumps_canonical(doc) + "\n")
    os.replace(tmp, path)


def load_checkpoint(path, *, n: int, ks) -> CheckpointState:
    try:
        doc = json.loads(Path(path).read_text())
    except (OSError, ValueError) as exc:
        raise CheckpointError(f"cannot read checkpoint {path}: {exc}") from exc
    if not isinstance(doc, dict) or doc.get("format") != FORMAT:
        raise CheckpointError(f"{path} is not a {FORMAT} file")
    if doc.get("version") != VERSION:
        raise CheckpointError(
            f"{path}: unsupported checkpoint version {doc.get('version')!r}, expected {VERSION}")
    if doc.get("n") != n or sorted(doc.get("ks", [])) != sorted(ks):
        raise CheckpointError(
            f"{path} was written for n={doc.get('n')}, ks={doc.get('ks')}, not n={n}, ks={list(ks)}")
    try:
        tables = {int(k): {int(m): int(w) for m, w in t.items()}
                  for k, t in doc["tables"].items()}
        completed = [int(a) for a in doc["completed_chunks"]]
        visited = int(doc["visited"])
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        raise CheckpointError(f"{path}: malformed checkpoint body: {exc}") from exc
    if set(tables) != set(ks) or any(not 1 <= a <= n for a in completed):
        raise CheckpointError(f"{path}: inconsistent checkpoint contents")
    return CheckpointState(tables, completed, visited)


def default_cache_path() -> Path:
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    root = os.environ.get("XDG_CACHE_HOME") or Path.home() / ".cache"
    return Path(root) / "bsize" / "results.csv"


class ResultCache:
    """Append-only ``n,k,b`` records, keyed by ``(n, min(k, n-k))``."""

    def __init__(self, path=None):
        self.path = Path(path) if path is not None else default_cache_path()
        self._data: dict[tuple[int, int], int] | None = None

    def _load(self) -> dict[tuple[int, int], int]:
        if self._data is None:
            self._data = {}
            if self.path.exists():
                for line in self.path.read_text().splitlines():
                    parts = line.strip().split(",")
                    if len(parts) != 3 or not all(p.isdigit() for p in parts):
                        continue
                    n, k, b = map(int, parts)
                    self._data[(n, min(k, n - k))] = b
        return self._data

    def get(self, n: int, k: int) -> int | None:
        return self._load().get((n, min(k, n - k)))

    def put(self, n: int, k: int, b: int) -> None:
        key = (n, min(k, n - k))
        data = self._load()
        if data.get(key) == b:
            return
        data[key] = b
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with self.path.open("a") as fh:
            fh.write(f"{n},{key[1]},{b}\n")
