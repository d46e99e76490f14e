"""On-disk JSON cache for expensive characters, guarded by a sha256 checksum.

A file whose checksum does not match its payload is treated as absent and
removed, so a corrupted entry is simply rebuilt.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
from pathlib import Path

ENV_VAR = "WHITEHOUSE_CACHE_DIR"

log = logging.getLogger(__name__)


def _digest(payload) -> str:
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()


class Cache:
    """``get``/``put`` JSON payloads by key; a ``None`` directory disables caching."""

    def __init__(self, directory: str | os.PathLike | None = None):
        if directory is None:
            directory = os.environ.get(ENV_VAR) or None
        self.dir = Path(directory) if directory else None
        if self.dir is not None:
            self.dir.mkdir(parents=True, exist_ok=True)
        self.hits = 0
        self.misses = 0
        self.rebuilt = 0

    def _path(self, key: str) -> Path:
        safe = "".join(c if c.isalnum() or c in "-_." else "_" for c in key)
        return self.dir / f"{safe}.json"

    def get(self, key: str):
        if self.dir is None:
            return None
        path = self._path(key)
        if not path.exists():
            self.misses += 1
            return None
        try:
            record = json.loads(path.read_text())
            ok = record.get("sha256") == _digest(record["payload"])
        except (ValueError, KeyError, TypeError, AttributeError):
            ok = False
        if not ok:
            log.warning("cache entry %s is corrupt; rebuilding", path.name)
            path.unlink(missing_ok=True)
            self.rebuilt += 1
            self.misses += 1
            return None
        self.hits += 1
        return record["payload"]

    def put(self, key: str, payload) -> None:
        if self.dir is None:
            return
        path = self._path(key)
        tmp = path.with_suffix(f".tmp{os.getpid()}")
        tmp.write_text(json.dumps({"sha256": _digest(payload), "payload": payload}, sort_keys=True))
        os.replace(tmp, path)

    def fetch(self, key: str, compute, encode=lambda x: x, decode=lambda x: x):
        """Cached value for key, computing and storing it on a miss."""
        data = self.get(key)
        if data is not None:
            return decode(data)
        value = compute()
        self.put(key, encode(value))
        return value
