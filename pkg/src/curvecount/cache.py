"""Plain-text persistence for a :class:`MemoStore`.

::

    curvecount-cache v1
    3 2 2,2,2,2,2,2,2,2 92

One record per line: ``<n> <d> <descending conds> <value>``.
"""
from __future__ import annotations

import os
from pathlib import Path
from typing import Union

from .degrees import IntegralityError, MemoStore
from .model import _family_dimension

HEADER = "curvecount-cache v1"


class CacheError(ValueError):
    def __init__(self, path, lineno: int, reason: str):
        self.lineno = lineno
        super().__init__(f"{path}:{lineno}: {reason}")


def _parse(path, lineno: int, line: str):
    parts = line.split()
    if len(parts) != 4:
        raise CacheError(path, lineno, f"expected 4 fields, got {len(parts)}")
    try:
        n, d = int(parts[0]), int(parts[1])
        conds = tuple(int(a) for a in parts[2].split(","))
        value = int(parts[3])
    except ValueError:
        raise CacheError(path, lineno, "non-integer field") from None
    key = (n, d, conds)
    try:
        MemoStore.check_key(key)
    except ValueError as exc:
        raise CacheError(path, lineno, str(exc)) from None
    if n < 3 or d < 1 or _family_dimension(n, d) != sum(a - 1 for a in conds):
        raise CacheError(path, lineno, f"key {key} is not an excess-0 problem")
    if value < 0:
        raise CacheError(path, lineno, f"negative value {value}")
    return key, value


def load(path: Union[str, Path], store: MemoStore = None) -> MemoStore:
    store = store if store is not None else MemoStore()
    seen = set()
    with open(path, encoding="utf-8") as fh:
        first = fh.readline().rstrip("\n")
        if first != HEADER:
            raise CacheError(path, 1, f"bad header {first!r}")
        for lineno, line in enumerate(fh, start=2):
            if not line.strip():
                continue
            key, value = _parse(path, lineno, line)
            if key in seen:
                raise CacheError(path, lineno, f"duplicate key {key}")
            seen.add(key)
            try:
                store.put(key, value)
            except IntegralityError as exc:
                raise CacheError(path, lineno, str(exc)) from None
    return store


def dumps(store: MemoStore) -> str:
    lines = [HEADER]
    for (n, d, conds), value in store.items():
        lines.append(f"{n} {d} {','.join(map(str, conds))} {value}")
    return "\n".join(lines) + "\n"


def save(path: Union[str, Path], store: MemoStore) -> None:
    """Write atomically so a crash never leaves a half-written cache."""
    path = Path(path)
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(dumps(store), encoding="utf-8")
    os.replace(tmp, path)
