"""Reducible fibres of a one-dimensional family.

A reducible member is ``C1 u C2`` with degrees ``d1 + d2 = d``, the labeled
conditions split as ``S1 | S2``, and each side sweeping out a locus that the
other side must meet.  Side ``i`` moves in a family of dimension ``delta_i``;
its swept locus has degree ``N_{d_i}(S_i, c_i)`` with node codimension
``c_i = delta_i + 1``, and the two loci meet in the Bezout product of those
degrees.

Every function takes ``count``, a callable ``count(n, d, conds) -> int`` for
excess-0 counts at strictly smaller degree.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations, product
from math import comb
from typing import Callable, Iterator, List, Optional, Sequence, Tuple

from .model import DimensionMismatch, InvalidInput, Problem, _family_dimension

CountFn = Callable[[int, int, Tuple[int, ...]], int]


@dataclass(frozen=True)
class Splitting:
    d1: int
    d2: int
    S1: Tuple[int, ...]  # condition indices on the side carrying pin1
    S2: Tuple[int, ...]
    delta1: int
    delta2: int
    c1: int
    c2: int
    weight: int


def _require_one_dim(p: Problem) -> None:
    if p.excess != 1:
        raise DimensionMismatch(p.excess, expected=1)


def side_dimension(n: int, d: int, codims: Sequence[int]) -> int:
    return _family_dimension(n, d) - sum(a - 1 for a in codims)


def _side_weight(n, d1, d2, side1, side2, count, d):
    """Weight of one (d1, side1 | d2, side2) configuration, or None if invalid."""
    delta1 = side_dimension(n, d1, side1)
    delta2 = side_dimension(n, d2, side2)
    if not (0 <= delta1 <= n - 2 and 0 <= delta2 <= n - 2):
        return None
    c1, c2 = delta1 + 1, delta2 + 1
    assert c1 + c2 == n, (n, d, side1, side2, c1, c2)
    q1 = tuple(side1) + (c1,)
    q2 = tuple(side2) + (c2,)
    assert d1 < d and d2 < d
    assert side_dimension(n, d1, q1) == 0 and side_dimension(n, d2, q2) == 0
    w = count(n, d1, q1)
    if w:
        w *= count(n, d2, q2)
    return delta1, delta2, c1, c2, w


def enumerate_splittings(
    p: Problem, pin1: int, pin2: Optional[int], count: CountFn
) -> List[Splitting]:
    """All valid splittings with ``pin1`` in S1 and ``pin2`` (if given) in S2.

    Conditions are labeled; this is the reference enumeration that the
    grouped sums below must reproduce.
    """
    _require_one_dim(p)
    k = len(p.conds)
    if pin1 == pin2:
        raise InvalidInput("pin1 and pin2 must differ")
    free = [t for t in range(k) if t not in (pin1, pin2)]
    out = []
    for r in range(len(free) + 1):
        for chosen in combinations(free, r):
            S1 = tuple(sorted((pin1,) + chosen))
            S2 = tuple(t for t in range(k) if t not in S1)
            side1 = [p.conds[t] for t in S1]
            side2 = [p.conds[t] for t in S2]
            for d1 in range(1, p.d):
                d2 = p.d - d1
                res = _side_weight(p.n, d1, d2, side1, side2, count, p.d)
                if res is None:
                    continue
                delta1, delta2, c1, c2, w = res
                out.append(Splitting(d1, d2, S1, S2, delta1, delta2, c1, c2, w))
    return out


def _grouped(n, d, head1, head2, rest, count) -> Iterator[Tuple[int, int, int]]:
    """Yield (d1, d2, multiplicity * weight) grouping equal free codimensions."""
    items = sorted(Counter(rest).items())
    for counts in product(*(range(m + 1) for _, m in items)):
        mult = 1
        side1 = list(head1)
        side2 = list(head2)
        for (v, m), c in zip(items, counts):
            mult *= comb(m, c)
            side1 += [v] * c
            side2 += [v] * (m - c)
        for d1 in range(1, d):
            res = _side_weight(n, d1, d - d1, side1, side2, count, d)
            if res is not None and res[4]:
                yield d1, d - d1, mult * res[4]


def _rest(p: Problem, *pins: int) -> Tuple[int, ...]:
    return tuple(a for t, a in enumerate(p.conds) if t not in pins)


def section_dot_R(p: Problem, i: int, j: int, count: CountFn) -> int:
    """Intersection number ``s_i . R_j``: fibres separating sections i and j."""
    _require_one_dim(p)
    if i == j:
        raise InvalidInput("sections must differ")
    return sum(w for _, _, w in _grouped(p.n, p.d, [p.conds[i]], [p.conds[j]], _rest(p, i, j), count))


def boundary_square_sum(p: Problem, i: int, count: CountFn) -> int:
    """Sum of ``(deg F)^2`` over fibre components not meeting section i."""
    _require_one_dim(p)
    return sum(d2 * d2 * w for _, d2, w in _grouped(p.n, p.d, [p.conds[i]], [], _rest(p, i), count))


def boundary_linear_sum(p: Problem, i: int, j: int, count: CountFn) -> int:
    """Sum of ``deg F`` over components meeting section j but not section i."""
    _require_one_dim(p)
    if i == j:
        raise InvalidInput("sections must differ")
    return sum(d2 * w for _, d2, w in _grouped(p.n, p.d, [p.conds[i]], [p.conds[j]], _rest(p, i, j), count))


def contracted_component_sum(p: Problem, i: int, weights: Sequence[int], count: CountFn) -> int:
    """Sum over reducible fibres of ``max(0, n - 2 - delta_w)`` for the component
    carrying section i, where ``delta_w`` is that component's family dimension
    after each condition j is relaxed to ramification weight ``weights[j]``.

    Inside a thickened family of dimension n - 1 such a component is swept by
    a divisor whose image has dimension ``min(delta_w, n - 2) + 1``, so the
    map to P^n ramifies along it to the returned order.
    """
    _require_one_dim(p)
    if len(weights) != len(p.conds):
        raise InvalidInput("one weight per condition")
    pairs = [(a, w) for t, (a, w) in enumerate(zip(p.conds, weights)) if t != i]
    items = sorted(Counter(pairs).items())
    total = 0
    for counts in product(*(range(m + 1) for _, m in items)):
        mult = 1
        side1 = [p.conds[i]]
        side2 = []
        w1 = weights[i]
        for ((a, w), m), c in zip(items, counts):
            mult *= comb(m, c)
            side1 += [a] * c
            side2 += [a] * (m - c)
            w1 += w * c
        for d1 in range(1, p.d):
            order = max(0, p.n - 2 - (_family_dimension(p.n, d1) - w1))
            if not order:
                continue
            res = _side_weight(p.n, d1, p.d - d1, side1, side2, count, p.d)
            if res is not None:
                total += mult * order * res[4]
    return total


def labeled_sums(p: Problem, i: int, j: Optional[int], count: CountFn) -> dict:
    """The three sums recomputed from :func:`enumerate_splittings` (test route)."""
    sp = enumerate_splittings(p, i, j, count)
    out = {"square": sum(s.d2**2 * s.weight for s in sp)}
    if j is not None:
        out["dot_R"] = sum(s.weight for s in sp)
        out["linear"] = sum(s.d2 * s.weight for s in sp)
    return out
