"""Result records, the on-disk cache and checkpoint files.

Records are JSON text with sorted keys and decimal-string integers so that
goldens stay diffable.  Writes go through a temporary file and
``os.replace``, so readers never see a half-written record (one writer,
many readers).
"""
from __future__ import annotations

import hashlib
import json
import os
import tempfile
from pathlib import Path
from typing import Any, Iterator

ENGINE_VERSION = "1"
SCHEMA = "tropicount.result/1"
TIMING_FIELDS = ("duration", "started", "finished")


def cache_root() -> Path:
    return Path(os.environ.get("TROPICOUNT_CACHE", ".tropicount"))


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=1) + "\n"


def atomic_write(path: Path, text: str) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def request_key(request: dict) -> str:
    """Content address of a canonical request (spec, m, I, engine version)."""
    blob = json.dumps(request, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()[:32]


def strip_timing(record: dict) -> dict:
    """Copy of ``record`` without wall-clock fields, for determinism checks."""
    out = {}
    for k, v in record.items():
        if k in TIMING_FIELDS or k == "manifest":
            continue
        out[k] = strip_timing(v) if isinstance(v, dict) else v
    return out


class Store:
    """Cache of result records plus resumable checkpoints."""

    def __init__(self, root: str | Path | None = None):
        self.root = Path(root) if root is not None else cache_root()

    def _result_path(self, key: str) -> Path:
        return self.root / "results" / f"{key}.json"

    def checkpoint_path(self, key: str) -> Path:
        return self.root / "checkpoints" / f"{key}.jsonl"

    def get(self, key: str) -> dict | None:
        p = self._result_path(key)
        if not p.exists():
            return None
        try:
            return json.loads(p.read_text())
        except json.JSONDecodeError:
            return None

    def put(self, key: str, record: dict) -> Path:
        p = self._result_path(key)
        atomic_write(p, dumps(record))
        return p

    def read_checkpoint(self, key: str) -> dict[str, dict]:
        """Completed work units keyed by their unit id.  A torn last line is ignored."""
        p = self.checkpoint_path(key)
        done = {}
        if not p.exists():
            return done
        for line in p.read_text().splitlines():
            try:
                entry = json.loads(line)
            except json.JSONDecodeError:
                continue
            done[entry["unit"]] = entry
        return done

    def append_checkpoint(self, key: str, entry: dict) -> None:
        p = self.checkpoint_path(key)
        p.parent.mkdir(parents=True, exist_ok=True)
        with open(p, "a") as fh:
            fh.write(json.dumps(entry, sort_keys=True) + "\n")
            fh.flush()
            os.fsync(fh.fileno())

    def clear_checkpoint(self, key: str) -> None:
        p = self.checkpoint_path(key)
        if p.exists():
            p.unlink()

    def records(self) -> Iterator[dict]:
        d = self.root / "results"
        if not d.is_dir():
            return
        for p in sorted(d.glob("*.json")):
            yield json.loads(p.read_text())
