"""Derivation trees for a single count, built from a recording engine."""
from __future__ import annotations

import json
from typing import Iterable, Optional

from .degrees import Engine

RULES = (
    "base-schubert",
    "eq9-shift",
    "eq4-m",
    "eq5-splitting",
    "eq7-check",
    "eq8-check",
    "genus-eq10-13",
    "hyperplane-rule",
    "vanish",
)


def key_str(key: tuple) -> str:
    """``N(n=3,d=2;3,3,3,2,2)``-style label for any engine key."""
    kind, n, d, *rest = key
    parts = [",".join(map(str, r)) if isinstance(r, tuple) else str(r) for r in rest]
    return f"{kind}(n={n},d={d};{'|'.join(parts)})"


def build(engine: Engine, root: tuple) -> dict:
    """Expand ``root`` depth-first; a node seen before becomes a reference."""
    seen = set()

    def node(key):
        label = key_str(key)
        rule, children, value = engine.deps[key]
        if label in seen:
            return {"key": label, "ref": True, "value": value}
        seen.add(label)
        return {
            "key": label,
            "rule": rule,
            "value": value,
            "children": [node(c) for c in dict.fromkeys(children)],
        }

    return node(root)


def trace_count(n: int, d: int, conds: Iterable[int]) -> dict:
    """Count on a fresh recording engine and return the root trace node."""
    e = Engine(record=True)
    conds = tuple(conds)
    e.count(n, d, conds)
    return build(e, ("N", n, d, conds))


def write(path, tree: dict, query: Optional[dict] = None) -> None:
    doc = {"query": query, "trace": tree} if query else tree
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=1, ensure_ascii=False)
        fh.write("\n")


def walk(tree: dict):
    yield tree
    for c in tree.get("children", ()):
        yield from walk(c)
