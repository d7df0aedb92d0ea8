"""On-disk cache of subgroup class tables, one JSON file per (family, n, format version).

Writes go to a temporary file in the cache directory and are renamed into
place, so concurrent writers of the same key never expose a partial file.
"""

from __future__ import annotations

import json
import logging
import os
import tempfile
from pathlib import Path
from typing import Optional, Union

from ..enumeration import ClassTable, SubgroupClass, class_table, family_group
from ..permcore import Permutation, closure

log = logging.getLogger(__name__)

ENV_VAR = "TOMSEQ_CACHE"
FORMAT_VERSION = 1


def default_cache_dir() -> Path:
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return Path(base) / "tomseq"


def resolve_cache_dir(flag: Optional[Union[str, Path]] = None) -> Path:
    """Flag, then environment variable, then the platform default."""
    if flag:
        return Path(flag)
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    return default_cache_dir()


def _key(family: str, n: int) -> str:
    return f"classes-{family.upper()}{n}-v{FORMAT_VERSION}.json"


def encode(ct: ClassTable, family: str, n: int) -> dict:
    return {
        "family": family.upper(),
        "n": n,
        "version": FORMAT_VERSION,
        "classes": [
            {"generators": [list(g) for g in c.representative.generators],
             "length": c.class_length, "order": c.order, "label": c.label}
            for c in ct.classes
        ],
    }


def decode(data: dict) -> ClassTable:
    family, n = data["family"], int(data["n"])
    g = family_group(family, n)
    classes = []
    for i, row in enumerate(data["classes"]):
        rep = closure([Permutation(p) for p in row["generators"]], n)
        if rep.order != row["order"]:
            raise ValueError(f"cached class {i + 1} has order {rep.order}, expected {row['order']}")
        classes.append(SubgroupClass(rep, int(row["length"]), rep.order, row["label"], i))
    return ClassTable(g, classes)


def write_atomic(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name + ".", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


class ClassTableCache:
    def __init__(self, directory: Optional[Union[str, Path]] = None, enabled: bool = True):
        self.directory = resolve_cache_dir(directory)
        self.enabled = enabled
        self._memory: dict[tuple[str, int], ClassTable] = {}

    def path(self, family: str, n: int) -> Path:
        return self.directory / _key(family, n)

    def get(self, family: str, n: int, budget: Optional[int] = None, allow_large: bool = False) -> ClassTable:
        key = (family.upper(), n)
        if key in self._memory:
            return self._memory[key]
        ct = None
        path = self.path(family, n)
        if self.enabled and path.exists():
            try:
                data = json.loads(path.read_text(encoding="utf-8"))
                if data.get("version") == FORMAT_VERSION:
                    ct = decode(data)
            except (ValueError, KeyError, TypeError) as exc:
                log.warning("ignoring unreadable cache entry %s: %s", path, exc)
        if ct is None:
            ct = class_table(family_group(family, n), budget, allow_large)
            if self.enabled:
                write_atomic(path, json.dumps(encode(ct, family, n), separators=(",", ":")))
        self._memory[key] = ct
        return ct
