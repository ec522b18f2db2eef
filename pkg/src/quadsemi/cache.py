"""Persistent cache for expensive runs, keyed by content and parameters.

Records append to <dir>/runs.jsonl, one JSON object per line.  A lookup
matches on the presentation's content hash, the operation name, the exact
parameter set, and the engine version, so changing a cap or upgrading the
engine re-runs instead of replaying stale results.  The file is never
rewritten; the last matching line wins, and unreadable lines (for example
a truncated tail after a crash) are skipped.
"""

from __future__ import annotations

import json
import os
import time
from dataclasses import dataclass
from pathlib import Path

from .engine import ENGINE_VERSION

ENV_VAR = "QUADSEMI_CACHE_DIR"
_FILENAME = "runs.jsonl"


def _params_key(parameters: dict) -> str:
    return json.dumps(parameters, sort_keys=True, separators=(",", ":"))


@dataclass(frozen=True)
class RunRecord:
    presentation_hash: str
    operation: str
    parameters: dict
    result: dict
    wall_time: float
    engine_version: str


class RunCache:
    """Append-only store of finished runs under one directory."""

    def __init__(self, directory):
        self.directory = Path(directory)
        self.path = self.directory / _FILENAME

    def lookup(self, presentation_hash: str, operation: str,
               parameters: dict) -> dict | None:
        """Result of the most recent matching run, or None."""
        if not self.path.exists():
            return None
        want = (presentation_hash, operation, _params_key(parameters))
        found = None
        with self.path.open("r", encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                try:
                    rec = json.loads(line)
                    key = (
                        rec["presentation_hash"],
                        rec["operation"],
                        _params_key(rec["parameters"]),
                    )
                    if key == want and rec["engine_version"] == ENGINE_VERSION:
                        found = rec["result"]
                except (ValueError, KeyError, TypeError):
                    continue
        return found

    def store(self, presentation_hash: str, operation: str, parameters: dict,
              result: dict, wall_time: float) -> RunRecord:
        record = RunRecord(
            presentation_hash=presentation_hash,
            operation=operation,
            parameters=parameters,
            result=result,
            wall_time=wall_time,
            engine_version=ENGINE_VERSION,
        )
        self.directory.mkdir(parents=True, exist_ok=True)
        line = json.dumps(
            {
                "presentation_hash": record.presentation_hash,
                "operation": record.operation,
                "parameters": record.parameters,
                "result": record.result,
                "wall_time": record.wall_time,
                "engine_version": record.engine_version,
                "stored_at": time.time(),
            },
            sort_keys=True,
            separators=(",", ":"),
        )
        with self.path.open("a", encoding="utf-8") as fh:
            fh.write(line + "\n")
        return record


def resolve_cache(explicit: str | None) -> RunCache | None:
    """Cache from an explicit directory, else the environment, else None."""
    directory = explicit if explicit is not None else os.environ.get(ENV_VAR)
    if not directory:
        return None
    return RunCache(directory)
