"""Content-addressed store for command artifacts.

Entries are keyed by sha256 over (instance hash, command, parameters) and
stored as plain files, so a cache hit returns exactly the bytes first emitted.
"""

from __future__ import annotations

import hashlib
import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any

logger = logging.getLogger(__name__)


def cache_key(instance_hash: str, command: str, params: dict[str, Any]) -> str:
    payload = json.dumps(
        {"instance": instance_hash, "command": command, "params": params},
        sort_keys=True,
        separators=(",", ":"),
    )
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()


@dataclass
class ResultCache:
    root: Path
    enabled: bool = True

    def __post_init__(self) -> None:
        self.root = Path(self.root)

    def _path(self, key: str) -> Path:
        return self.root / key[:2] / f"{key}.out"

    def get(self, instance_hash: str, command: str, params: dict[str, Any]) -> str | None:
        if not self.enabled:
            return None
        path = self._path(cache_key(instance_hash, command, params))
        if not path.exists():
            return None
        logger.info("Cache hit for %s (%s)", command, path.name[:12])
        return path.read_text(encoding="utf-8")

    def put(
        self, instance_hash: str, command: str, params: dict[str, Any], artifact: str
    ) -> Path | None:
        if not self.enabled:
            return None
        path = self._path(cache_key(instance_hash, command, params))
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(".tmp")
        tmp.write_text(artifact, encoding="utf-8")
        tmp.replace(path)
        logger.debug("Cached %s at %s", command, path)
        return path
