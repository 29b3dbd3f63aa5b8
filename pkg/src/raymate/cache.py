"""On-disk cache of landing tables.

The cache is one JSON file, located by ``RAYMATE_CACHE`` (default
``~/.cache/raymate/tables.json``). Records are keyed by degree,
characteristic pair and bound. A file with another version tag is ignored
and rewritten. Writes go to a temporary file that is renamed into place.
"""

import json
import os
import tempfile
from pathlib import Path

from . import angles as ang
from . import landing as land

CACHE_VERSION = "raymate-cache/1"
ENV_VAR = "RAYMATE_CACHE"


def cache_path():
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "raymate" / "tables.json"


def table_key(p, N):
    return f"{p.degree}|{ang.format_angle(p.lower)}|{ang.format_angle(p.upper)}|{N}"


class TableCache:
    def __init__(self, path=None):
        self.path = Path(path) if path is not None else cache_path()
        self.records = {}
        self.hits = 0
        self.misses = 0
        self._load()

    def _load(self):
        try:
            data = json.loads(self.path.read_text())
        except (OSError, ValueError):
            return
        if not isinstance(data, dict) or data.get("version") != CACHE_VERSION:
            return
        recs = data.get("records")
        if isinstance(recs, dict):
            self.records = recs

    def save(self):
        self.path.parent.mkdir(parents=True, exist_ok=True)
        payload = json.dumps({"version": CACHE_VERSION, "records": self.records}, sort_keys=True)
        fd, tmp = tempfile.mkstemp(dir=self.path.parent, prefix=".raymate-", suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as fh:
                fh.write(payload)
            os.replace(tmp, self.path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise

    def landing_table(self, p, N):
        """Table for ``(p, N)``: from the file when present, else computed and stored."""
        key = table_key(p, N)
        rec = self.records.get(key)
        if rec is not None:
            try:
                tab = land.LandingTable.from_records(rec, p)
                for lay in tab.layers.values():
                    land.prime_layer(lay)
                land.check_unlinked(tab.nontrivial())
                self.hits += 1
                return tab
            except Exception:  # stale or corrupt record: recompute
                self.records.pop(key, None)
        self.misses += 1
        tab = land.landing_table(p, N)
        self.records[key] = tab.to_records()
        self.save()
        return tab
