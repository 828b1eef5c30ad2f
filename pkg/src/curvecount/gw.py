"""Genus-0 Gromov-Witten invariants of P^n with linear-subspace insertions.

Independent cross-check for :mod:`curvecount.degrees`: the only code shared
with it is the line-count floor from :mod:`curvecount.schubert`.  Higher
degrees come from the associativity (WDVV) relation applied to the four
classes ``H^(a-1), H, H^b, H^c``, which expresses an invariant through ones
with fewer insertions, lower degree, or codimension moved from the smallest
insertion into the largest.
"""
from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import product
from math import comb
from typing import Iterable, Tuple

from .model import DimensionMismatch, InvalidInput, as_conds, sort_desc
from .schubert import line_count

# (n, max degree) envelopes the oracle is sized for; d <= 1 is always allowed.
ENVELOPE = {3: 4, 4: 2}


class OutsideEnvelope(InvalidInput):
    pass


def supported(n: int, d: int) -> bool:
    return d <= 1 or d <= ENVELOPE.get(n, 0)


def gw_invariant(n: int, d: int, codims: Iterable[int]) -> int:
    """``<H^a1, ..., H^ak>_d`` for P^n; insertions must have excess 0."""
    codims = as_conds(codims)
    if n < 3 or d < 1:
        raise InvalidInput(f"need n >= 3 and d >= 1, got n={n}, d={d}")
    excess = (n + 1) * d + n - 3 - sum(a - 1 for a in codims)
    if excess != 0:
        raise DimensionMismatch(excess)
    if not supported(n, d):
        raise OutsideEnvelope(
            f"gw oracle envelope is n=3: d<=4, n=4: d<=2 (and d<=1 for any n); got n={n}, d={d}"
        )
    return _gw(n, d, sort_desc(codims))


def _gw(n: int, d: int, ins: Tuple[int, ...]) -> int:
    """Any insertion list; returns 0 where the invariant vanishes."""
    if any(a > n or a < 0 for a in ins):
        return 0
    if sum(a - 1 for a in ins) != (n + 1) * d + n - 3:
        return 0
    if d == 0:
        # only the 3-point classical intersection survives
        return 1 if len(ins) == 3 else 0
    if any(a == 0 for a in ins):
        return 0
    hyper = sum(1 for a in ins if a == 1)
    rest = sort_desc(a for a in ins if a > 1)
    return d**hyper * _gw_reduced(n, d, rest)


@lru_cache(maxsize=None)
def _gw_reduced(n: int, d: int, ins: Tuple[int, ...]) -> int:
    if d == 1:
        return line_count(n, ins)
    if len(ins) < 3:
        raise AssertionError(f"WDVV needs 3 insertions at d={d}: {ins}")
    # ins is descending: a = smallest, c = largest, b = any other
    a, c = ins[-1], ins[0]
    b = ins[1]
    S = ins[2:-1]
    return _wdvv(n, d, a, b, c, S)


def _sub_multisets(S: Tuple[int, ...]):
    """Yield (S1, S2, multiplicity) over labeled splits of S, grouped."""
    items = sorted(Counter(S).items())
    for counts in product(*(range(m + 1) for _, m in items)):
        mult = 1
        S1, S2 = [], []
        for (v, m), c in zip(items, counts):
            mult *= comb(m, c)
            S1 += [v] * c
            S2 += [v] * (m - c)
        yield tuple(S1), tuple(S2), mult


def _wdvv(n, d, a, b, c, S):
    # Associativity for (T_i, T_j | T_k, T_l) = (H^(a-1), H | H^b, H^c):
    #   sum <H^(a-1), H, S1, e>_d1 <e', H^b, H^c, S2>_d2
    # = sum <H^(a-1), H^b, S1, e>_d1 <e', H, H^c, S2>_d2
    # with e' the dual codimension n - e.  The (d1 = 0, S1 = {}) term of the
    # left side is the target <H^a, H^b, H^c, S>_d.
    lhs = 0
    rhs = 0
    for d1 in range(d + 1):
        d2 = d - d1
        for S1, S2, mult in _sub_multisets(S):
            for e in range(n + 1):
                f = n - e
                if not (d1 == 0 and not S1):
                    lhs += mult * _gw(n, d1, (a - 1, 1) + S1 + (e,)) * _gw(n, d2, (f, b, c) + S2)
                rhs += mult * _gw(n, d1, (a - 1, b) + S1 + (e,)) * _gw(n, d2, (f, 1, c) + S2)
    return rhs - lhs
