"""On-disk cache of graded profiles, one JSON file per braid-matrix hash.

The directory comes from H8NICHOLS_CACHE; without it caching is off.  Entries
carry the matrix shape and a second digest (over a column-major serialization)
so a hash collision reads as a miss.  Writes go to a temporary file that is
renamed into place.
"""
from __future__ import annotations

import hashlib
import json
import os
import tempfile
import time
from dataclasses import dataclass

from .nichols import ENGINE_VERSION, GradedProfile, braid_hash, braiding

__all__ = ["CacheEntry", "ProfileCache", "CACHE_ENV", "second_digest"]

CACHE_ENV = "H8NICHOLS_CACHE"


def second_digest(c):
    h = hashlib.blake2b(digest_size=32)
    h.update(f"{c.nrows}|{c.ncols}".encode())
    for j, col in enumerate(c.columns()):
        for i in sorted(col):
            h.update(f"|{j}.{i}={col[i].coords}".encode())
    return h.hexdigest()


@dataclass
class CacheEntry:
    digest: str
    digest2: str
    shape: tuple
    profile: GradedProfile
    engine_version: str
    timestamp: float

    def to_json(self):
        p = self.profile
        return {"digest": self.digest, "digest2": self.digest2, "shape": list(self.shape),
                "profile": {"dims": p.dims, "cutoff": p.cutoff, "finite": p.finite,
                            "provenance": p.provenance},
                "engine_version": self.engine_version, "timestamp": self.timestamp}

    @classmethod
    def from_json(cls, d):
        p = d["profile"]
        prof = GradedProfile(list(p["dims"]), p["cutoff"], p["finite"], p["provenance"])
        return cls(d["digest"], d["digest2"], tuple(d["shape"]), prof, d["engine_version"],
                   d["timestamp"])


def _restrict(prof, cutoff):
    """The profile a fresh run with this cutoff would return, or None if the entry is too short."""
    if prof.finite:
        top = len(prof.dims) - 1
        if top + 1 <= cutoff:
            return GradedProfile(list(prof.dims), cutoff, True, prof.provenance)
        return GradedProfile(list(prof.dims[:cutoff + 1]), cutoff, False, prof.provenance)
    if prof.cutoff >= cutoff:
        return GradedProfile(list(prof.dims[:cutoff + 1]), cutoff, False, prof.provenance)
    return None


class ProfileCache:
    def __init__(self, directory=None):
        self.dir = directory if directory is not None else os.environ.get(CACHE_ENV)
        if self.dir:
            os.makedirs(self.dir, exist_ok=True)

    @property
    def enabled(self):
        return bool(self.dir)

    def _key(self, m, mode):
        c = braiding(m).c
        return braid_hash(c), second_digest(c), (c.nrows, c.ncols), mode

    def _path(self, digest, mode):
        return os.path.join(self.dir, f"{digest}.{mode}.json")

    def get(self, m, cutoff, mode="factor"):
        if not self.enabled:
            return None
        d1, d2, shape, mode = self._key(m, mode)
        try:
            with open(self._path(d1, mode)) as f:
                e = CacheEntry.from_json(json.load(f))
        except (OSError, ValueError, KeyError):
            return None
        if e.digest2 != d2 or e.shape != shape or e.engine_version != ENGINE_VERSION:
            return None
        return _restrict(e.profile, cutoff)

    def put(self, m, prof, mode="factor"):
        if not self.enabled:
            return
        d1, d2, shape, mode = self._key(m, mode)
        path = self._path(d1, mode)
        try:
            with open(path) as f:
                old = CacheEntry.from_json(json.load(f)).profile
            if old.finite or (not prof.finite and old.cutoff >= prof.cutoff):
                return
        except (OSError, ValueError, KeyError):
            pass
        entry = CacheEntry(d1, d2, shape, prof, ENGINE_VERSION, time.time())
        fd, tmp = tempfile.mkstemp(dir=self.dir, suffix=".tmp")
        with os.fdopen(fd, "w") as f:
            json.dump(entry.to_json(), f)
        os.replace(tmp, path)
