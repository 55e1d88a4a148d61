"""Optional on-disk cache for constructed modules.

Disabled unless a directory is configured through :func:`set_cache_dir` or the
``MONOIDTAB_CACHE_DIR`` environment variable.  Entries are JSON files named by
the SHA-256 of their key; each file records its key and a hash of its payload
so that stale or truncated files are ignored.  Writes go to a temporary file
that is atomically renamed, so concurrent readers never see partial data.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from pathlib import Path

ENV_VAR = "MONOIDTAB_CACHE_DIR"
FORMAT_VERSION = 1

_dir: Path | None = None
_explicit = False


def set_cache_dir(path: str | os.PathLike | None):
    global _dir, _explicit
    _dir = Path(path) if path else None
    _explicit = True


def cache_dir() -> Path | None:
    if _explicit:
        return _dir
    env = os.environ.get(ENV_VAR)
    return Path(env) if env else None


def _digest(obj) -> str:
    return hashlib.sha256(json.dumps(obj, sort_keys=True, separators=(",", ":")).encode()).hexdigest()


def load(token: dict):
    d = cache_dir()
    if d is None:
        return None
    path = d / f"{_digest(token)}.json"
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, ValueError):
        return None
    if data.get("version") != FORMAT_VERSION or data.get("key") != token:
        return None
    payload = data.get("payload")
    if data.get("payload_sha256") != _digest(payload):
        return None
    return payload


def store(token: dict, payload) -> Path | None:
    d = cache_dir()
    if d is None:
        return None
    d.mkdir(parents=True, exist_ok=True)
    path = d / f"{_digest(token)}.json"
    data = {"version": FORMAT_VERSION, "key": token, "payload": payload, "payload_sha256": _digest(payload)}
    fd, tmp = tempfile.mkstemp(dir=d, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            json.dump(data, fh)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise
    return path
