"""Small shared helpers: worker counts, atomic file output, canonical JSON."""

import hashlib
import json
import os
import tempfile

_WORKER_CAP = 16


def worker_count():
    """Worker budget for partitionable scans.

    Defaults to a small multiple of the CPU count; the environment variable
    ``JF_THREADS`` caps it (``JF_THREADS=1`` forces sequential scans).
    """
    default = min(4, os.cpu_count() or 1)
    raw = os.environ.get("JF_THREADS")
    if raw is None:
        return max(1, default)
    try:
        cap = int(raw)
    except ValueError:
        return max(1, default)
    if cap < 1:
        return 1
    return min(default, cap, _WORKER_CAP) if cap < default else min(cap, _WORKER_CAP)


def canonical_json(obj):
    """Deterministic JSON text: sorted keys, stable separators, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def atomic_write_text(path, text):
    """Write text to `path` via a same-directory temp file and os.replace."""
    directory = os.path.dirname(os.path.abspath(path)) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=".json")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def sha256_digest(data):
    """Hex digest of bytes or str (str is encoded UTF-8)."""
    if isinstance(data, str):
        data = data.encode("utf-8")
    return hashlib.sha256(data).hexdigest()
