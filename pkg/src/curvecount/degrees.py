"""Schubert degrees N_{d,n}(a.) by the section-shift recursion.

For a one-dimensional family ``Q`` with sections ``u, v`` the pullback of the
hyperplane class, dotted with ``s_v``, gives

    N(Q; a_v + 1) = N(Q; a_u + 1) + d N(merge(u, v)) - lin(Q; u, v) + d m_u(Q)

where ``lin`` is the degree sum over fibre components carrying ``v`` but not
``u`` and ``m_u = -s_u^2``.  Repeating it moves codimension from one entry
into another until an entry becomes a hyperplane (length drops) or exceeds
``n`` (the count vanishes).  ``m_u`` comes from the three-section relation,
so everything reduces to lower degree or lower length, bottoming out in the
Schubert calculus of lines.
"""
from __future__ import annotations

import threading
from typing import Dict, Iterable, List, Optional, Tuple

from . import boundary
from .model import (
    DimensionMismatch,
    InvalidInput,
    Problem,
    as_conds,
    canonicalize,
    length,
    sort_desc,
)
from .schubert import line_count

Key = Tuple[int, int, Tuple[int, ...]]


class IntegralityError(AssertionError):
    """An intersection number came out non-integral or negative."""


class MemoStore:
    """Canonical key ``(n, d, descending conds)`` -> count.

    Values for a key are unique, so concurrent writers can race harmlessly.
    """

    def __init__(self, data: Optional[Dict[Key, int]] = None):
        self._data: Dict[Key, int] = {}
        self._lock = threading.Lock()
        for k, v in (data or {}).items():
            self.put(k, v)

    @staticmethod
    def check_key(key: Key) -> None:
        n, d, conds = key
        if list(conds) != sorted(conds, reverse=True) or any(a < 2 or a > n for a in conds):
            raise ValueError(f"non-canonical memo key {key}")

    def get(self, key: Key) -> Optional[int]:
        return self._data.get(key)

    def put(self, key: Key, value: int) -> None:
        self.check_key(key)
        if not isinstance(value, int) or value < 0:
            raise IntegralityError(f"count for {key} is {value!r}")
        with self._lock:
            old = self._data.setdefault(key, value)
        if old != value:
            raise IntegralityError(f"conflicting values for {key}: {old} vs {value}")

    def items(self):
        with self._lock:
            return sorted(self._data.items())

    def __contains__(self, key):
        return key in self._data

    def __len__(self):
        return len(self._data)


class Engine:
    """Memoized evaluator for counts, m-values and boundary sums.

    With ``record=True`` every evaluated quantity also stores its rule tag
    and the keys it was computed from (used to build derivation traces).
    """

    def __init__(self, store: Optional[MemoStore] = None, record: bool = False):
        self.store = store if store is not None else MemoStore()
        self.record = record
        self.deps: Dict[tuple, Tuple[str, List[tuple], int]] = {}
        self._m: Dict[tuple, int] = {}
        self._bd: Dict[tuple, int] = {}

    # -- counts -----------------------------------------------------------

    def count(self, n: int, d: int, conds: Iterable[int], pivots: Optional[Tuple[int, int]] = None) -> int:
        """N_{d,n}(conds).  ``pivots=(grow, shrink)`` overrides the top-level
        shift pair (indices into the descending canonical vector)."""
        p = Problem(n, d, as_conds(conds))
        if p.excess != 0:
            raise DimensionMismatch(p.excess)
        canon, factor, vanishes = canonicalize(p)
        raw_key = ("N", n, d, p.conds)
        if vanishes:
            self._note(raw_key, "vanish", [], 0)
            return 0
        if pivots is not None:
            if d == 1:
                raise InvalidInput("pivots only apply for d >= 2")
            value = factor * self._chain(n, d, canon.conds, *pivots, key=None)
        else:
            value = factor * self._canonical(n, d, canon.conds)
        if raw_key[3] != canon.conds:
            self._note(raw_key, "hyperplane-rule", [("N", n, d, canon.conds)], value)
        return value

    def _canonical(self, n: int, d: int, conds: Tuple[int, ...]) -> int:
        key = (n, d, conds)
        hit = self.store.get(key)
        if hit is not None and (not self.record or ("N",) + key in self.deps):
            return hit
        if d == 1:
            value = line_count(n, conds)
            self._note(("N",) + key, "base-schubert", [], value)
        else:
            if len(conds) < 4:
                raise AssertionError(f"d >= 2 count with fewer than 4 conditions: {key}")
            value = self._chain(n, d, conds, 0, 1, key=("N",) + key)
        self.store.put(key, value)
        return value

    def _chain(self, n, d, vec, grow, shrink, key) -> int:
        if grow == shrink or not (0 <= grow < len(vec) and 0 <= shrink < len(vec)):
            raise InvalidInput(f"bad pivot pair {(grow, shrink)} for {vec}")
        v = list(vec)
        start_len = length(vec)
        total = 0
        children = []
        while v[grow] <= n and v[shrink] > 1:
            q = Problem(n, d, tuple(v)).bump(shrink, -1)
            merged = q.merge(grow, shrink)
            assert length(merged.conds) < start_len
            total += d * self.count(n, d, merged.conds)
            total -= self.linear_sum(q, grow, shrink)
            total += d * self.m_section(q, grow)
            children += [("N", n, d, merged.conds), self._bd_key("BLS", q, grow, shrink), self._m_key(q, grow)]
            v[grow] += 1
            v[shrink] -= 1
        assert v[grow] > n or length(v) < start_len
        total += self.count(n, d, tuple(v))
        children.append(("N", n, d, tuple(v)))
        if total < 0:
            raise IntegralityError(f"negative count {total} for N_{d},{n}{tuple(vec)}")
        if key is not None:
            self._note(key, "eq9-shift", children, total)
        return total

    # -- section self-intersections --------------------------------------

    def _m_key(self, p: Problem, i: int) -> tuple:
        others = sort_desc(a for t, a in enumerate(p.conds) if t != i)
        return ("m", p.n, p.d, p.conds[i], others)

    def m_section(self, p: Problem, i: int, companions: Optional[Tuple[int, int]] = None) -> int:
        """m_i = -s_i^2 from three sections i, j, l.

        Fewer than three conditions (only possible at d = 1) are padded with
        hyperplanes, which leave the family unchanged there.
        """
        if p.excess != 1:
            raise DimensionMismatch(p.excess, expected=1)
        if len(p.conds) < 3:
            if p.d != 1:
                raise AssertionError(f"padding needed at d={p.d}: {p}")
            p = p.replace(p.conds + (1,) * (3 - len(p.conds)))
        key = self._m_key(p, i)
        if companions is None:
            hit = self._m.get(key)
            if hit is not None:
                return hit
            others = sorted((t for t in range(len(p.conds)) if t != i), key=lambda t: (-p.conds[t], t))
            j, l = others[0], others[1]
        else:
            j, l = companions
            if len({i, j, l}) != 3:
                raise InvalidInput(f"companions {companions} must be distinct from {i}")
        twice = self.dot_R(p, i, j) + self.dot_R(p, i, l) - self.dot_R(p, j, l)
        if twice % 2:
            raise IntegralityError(f"odd doubled m for {p}, section {i}: {twice}")
        merges = [p.merge(i, j), p.merge(i, l), p.merge(j, l)]
        for q in merges:
            assert len(q.conds) < len(p.conds)
        value = twice // 2 - self.count(p.n, p.d, merges[0].conds) - self.count(p.n, p.d, merges[1].conds)
        value += self.count(p.n, p.d, merges[2].conds)
        if companions is None:
            self._m[key] = value
            self._note(
                key,
                "eq4-m",
                [self._bd_key("sR", p, i, j), self._bd_key("sR", p, i, l), self._bd_key("sR", p, j, l)]
                + [("N", p.n, p.d, q.conds) for q in merges],
                value,
            )
        return value

    def m_two_section(self, p: Problem, i: int, j: int) -> int:
        """m_i when ``a_i == a_j``: then m_i = m_j by monodromy."""
        if p.conds[i] != p.conds[j]:
            raise InvalidInput("two-section formula needs equal codimensions")
        twice = self.dot_R(p, i, j)
        if twice % 2:
            raise IntegralityError(f"odd s.R for equal sections of {p}")
        return twice // 2 - self.count(p.n, p.d, p.merge(i, j).conds)

    # -- boundary sums ----------------------------------------------------

    def _bd_key(self, kind: str, p: Problem, i: int, j: Optional[int] = None) -> tuple:
        rest = sort_desc(a for t, a in enumerate(p.conds) if t not in (i, j))
        if kind == "sR":
            return (kind, p.n, p.d, tuple(sorted((p.conds[i], p.conds[j]))), rest)
        head = (p.conds[i],) if j is None else (p.conds[i], p.conds[j])
        return (kind, p.n, p.d, head, rest)

    def _boundary(self, kind, fn, p, *pins) -> int:
        key = self._bd_key(kind, p, *pins)
        hit = self._bd.get(key)
        if hit is not None:
            return hit
        seen: List[tuple] = []

        def count(n, d, conds):
            if d >= p.d:
                raise AssertionError(f"boundary subquery at degree {d} >= {p.d}")
            if self.record:
                seen.append(("N", n, d, tuple(conds)))
            return self.count(n, d, conds)

        value = fn(p, *pins, count)
        self._bd[key] = value
        self._note(key, "eq5-splitting", list(dict.fromkeys(seen)), value)
        return value

    def dot_R(self, p: Problem, i: int, j: int) -> int:
        return self._boundary("sR", boundary.section_dot_R, p, i, j)

    def linear_sum(self, p: Problem, i: int, j: int) -> int:
        return self._boundary("BLS", boundary.boundary_linear_sum, p, i, j)

    def square_sum(self, p: Problem, i: int) -> int:
        return self._boundary("BSS", boundary.boundary_square_sum, p, i)

    def lower_count(self, n, d, conds) -> int:
        return self.count(n, d, conds)

    # -- cross-checks -------------------------------------------------------

    def check_eq7(self, p: Problem, i: int = 0) -> int:
        """Residual of ``L^2 = 2d L.s_i + d^2 m_i - sum (deg F)^2``."""
        if p.excess != 1:
            raise DimensionMismatch(p.excess, expected=1)
        d = p.d
        lhs = self.count(p.n, d, (2,) + p.conds)
        rhs = 2 * d * self.count(p.n, d, p.bump(i).conds) + d * d * self.m_section(p, i) - self.square_sum(p, i)
        self._note(("eq7", p.n, d, p.conds, i), "eq7-check", [], lhs - rhs)
        return lhs - rhs

    def check_eq8(self, p: Problem) -> int:
        """Residual of the point-section case ``a_1 = n``, ``a_2 + a_3 > n``."""
        if p.excess != 1:
            raise DimensionMismatch(p.excess, expected=1)
        c = p.conds
        if len(c) < 3 or c[0] != p.n or c[1] + c[2] <= p.n:
            raise InvalidInput(f"check_eq8 needs a_1 = n and a_2 + a_3 > n, got {c}")
        d = p.d
        lhs = self.count(p.n, d, (2,) + c)
        rhs = d * d * self.m_section(p, 0) - self.square_sum(p, 0)
        self._note(("eq8", p.n, d, c), "eq8-check", [], lhs - rhs)
        return lhs - rhs

    # -- trace bookkeeping ----------------------------------------------------

    def _note(self, key, rule, children, value) -> None:
        if self.record:
            self.deps[key] = (rule, children, value)


_default = Engine()


def default_engine() -> Engine:
    return _default


def degree_count(n: int, d: int, conds: Iterable[int]) -> int:
    return _default.count(n, d, conds)


def m_section(p: Problem, i: int, companions=None) -> int:
    return _default.m_section(p, i, companions)


def check_eq7(p: Problem, i: int = 0) -> int:
    return _default.check_eq7(p, i)


def check_eq8(p: Problem) -> int:
    return _default.check_eq8(p)
