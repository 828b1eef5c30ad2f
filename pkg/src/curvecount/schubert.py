"""Schubert calculus on the Grassmannian G(1, n) of lines in P^n.

Classes are indexed by partitions ``(l1, l2)`` in the 2 x (n-1) box; a formal
sum is a ``dict`` from partition to integer coefficient.  Meeting a linear
subspace of codimension ``a`` is the special class ``sigma_{a-1}``.

Two independent routes are provided: the Pieri chain (:func:`line_count`)
and a dense multiplication table built from two-variable Schur polynomials
written as bialternants (:func:`line_count_table`).
"""
from __future__ import annotations

from collections import defaultdict
from functools import lru_cache
from typing import Dict, Iterable, List, Tuple

from .model import DimensionMismatch, InvalidInput, as_conds

Partition = Tuple[int, int]
Cycle = Dict[Partition, int]


def basis(n: int) -> List[Partition]:
    """All partitions in the 2 x (n-1) box, ordered by codimension."""
    out = [(l1, l2) for l1 in range(n) for l2 in range(l1 + 1)]
    return sorted(out, key=lambda p: (p[0] + p[1], p))


def point_class(n: int) -> Partition:
    return (n - 1, n - 1)


def complement(lam: Partition, n: int) -> Partition:
    return (n - 1 - lam[1], n - 1 - lam[0])


def pieri_product(cls: Cycle, k: int, n: int) -> Cycle:
    """Multiply a formal sum by the special class ``sigma_k``."""
    if not 1 <= k <= n - 1:
        raise InvalidInput(f"special class index k={k} outside [1, {n - 1}]")
    out: Cycle = defaultdict(int)
    for (l1, l2), c in cls.items():
        if not (n - 1 >= l1 >= l2 >= 0):
            raise InvalidInput(f"partition {(l1, l2)} not in the 2x{n - 1} box")
        if c == 0:
            continue
        total = l1 + l2 + k
        # mu1 >= l1 >= mu2 >= l2, mu1 <= n-1
        for mu2 in range(l2, l1 + 1):
            mu1 = total - mu2
            if l1 <= mu1 <= n - 1:
                out[(mu1, mu2)] += c
    return {p: c for p, c in out.items() if c}


def _check(n: int, conds) -> tuple:
    conds = as_conds(conds)
    if n < 2:
        raise InvalidInput(f"n must be >= 2, got {n}")
    if any(a > n for a in conds):
        raise InvalidInput(f"codimension exceeds n={n}: {conds}")
    excess = 2 * (n - 1) - sum(a - 1 for a in conds)
    if excess != 0:
        raise DimensionMismatch(excess)
    return conds


def line_count(n: int, conds: Iterable[int]) -> int:
    """Number of lines in P^n meeting generic subspaces of codimensions ``conds``."""
    conds = _check(n, conds)
    cyc: Cycle = {(0, 0): 1}
    for a in sorted(conds, reverse=True):
        if a > 1:
            cyc = pieri_product(cyc, a - 1, n)
    return cyc.get(point_class(n), 0)


# -- independent oracle: bialternant multiplication table --------------------
#
# s_lam(x1, x2) * (x1 - x2) = x1^(l1+1) x2^l2 - x1^l2 x2^(l1+1).  Multiplying
# two Schur polynomials and one Vandermonde factor gives an antisymmetric
# polynomial whose x1^p x2^q (p > q) coefficients are the Schur expansion.
# Classes with l1 > n-1 are exactly the ones killed in H*(G(1, n)).

Poly = Dict[Tuple[int, int], int]


def _alternant(lam: Partition) -> Poly:
    l1, l2 = lam
    return {(l1 + 1, l2): 1, (l2, l1 + 1): -1}


def _schur_poly(lam: Partition) -> Poly:
    # complete homogeneous expansion: s_(l1,l2) = sum over monomials x1^i x2^j
    # with i + j = l1 + l2 and l2 <= i, j  (Jacobi-Trudi for two variables)
    l1, l2 = lam
    total = l1 + l2
    return {(i, total - i): 1 for i in range(l2, l1 + 1)}


def _mul(p: Poly, q: Poly) -> Poly:
    out: Poly = defaultdict(int)
    for (a, b), c in p.items():
        for (e, f), g in q.items():
            out[(a + e, b + f)] += c * g
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def multiplication_table(n: int) -> Dict[Tuple[Partition, Partition], Cycle]:
    """Full structure constants of H*(G(1, n)) in the Schubert basis."""
    table = {}
    B = basis(n)
    for lam in B:
        alt = _alternant(lam)
        for mu in B:
            prod = _mul(alt, _schur_poly(mu))
            cyc: Cycle = {}
            for (p, q), c in prod.items():
                if p > q:
                    nu = (p - 1, q)
                    if nu[0] <= n - 1:
                        cyc[nu] = c
            table[(lam, mu)] = cyc
    return table


def multiply(x: Cycle, y: Cycle, n: int) -> Cycle:
    table = multiplication_table(n)
    out: Cycle = defaultdict(int)
    for lam, a in x.items():
        for mu, b in y.items():
            for nu, c in table[(lam, mu)].items():
                out[nu] += a * b * c
    return {k: v for k, v in out.items() if v}


def line_count_table(n: int, conds: Iterable[int]) -> int:
    """Oracle for :func:`line_count` using the dense multiplication table."""
    conds = _check(n, conds)
    cyc: Cycle = {(0, 0): 1}
    for a in conds:
        cyc = multiply(cyc, {(a - 1, 0): 1}, n)
    return cyc.get(point_class(n), 0)
