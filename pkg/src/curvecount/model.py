"""Condition vectors, dimension bookkeeping and the normalization rules.

A condition vector lists the codimensions ``a_i`` of generic linear subspaces
``A_i`` of P^n that a rational curve is asked to meet.  Subspaces are never
materialized; generic position is assumed throughout.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Tuple

Conds = Tuple[int, ...]


class InvalidInput(ValueError):
    """Raised for malformed problems (n < 3, d < 1, codimension < 1, ...)."""


class DimensionMismatch(ValueError):
    """Raised when a query's excess dimension is not what the query needs."""

    def __init__(self, excess: int, expected: int = 0):
        self.excess = excess
        self.expected = expected
        super().__init__(f"dimension mismatch: excess = {excess}")


def moduli_dimension(n: int, d: int) -> int:
    """Dimension of the space of degree-``d`` rational curves in P^n."""
    if n < 3:
        raise InvalidInput(f"ambient dimension must be >= 3, got n = {n}")
    if d < 1:
        raise InvalidInput(f"degree must be >= 1, got d = {d}")
    return (n + 1) * d + n - 3


def _family_dimension(n: int, d: int) -> int:
    # Same formula without the n >= 3 gate; the boundary sides and the
    # oracle use it for sub-families.
    return (n + 1) * d + n - 3


def length(conds: Iterable[int]) -> int:
    """Number of entries > 1 (hyperplane conditions do not count)."""
    return sum(1 for a in conds if a > 1)


def as_conds(conds: Iterable[int]) -> Conds:
    out = tuple(int(a) for a in conds)
    if any(a < 1 for a in out):
        raise InvalidInput(f"codimensions must be >= 1, got {out}")
    return out


def sort_desc(conds: Iterable[int]) -> Conds:
    return tuple(sorted(conds, reverse=True))


@dataclass(frozen=True)
class Problem:
    """Ambient dimension, degree and an (ordered) condition vector.

    Order matters only for section-indexed operations; counts are symmetric.
    """

    n: int
    d: int
    conds: Conds

    def __post_init__(self):
        moduli_dimension(self.n, self.d)  # validates n, d
        object.__setattr__(self, "conds", as_conds(self.conds))

    @property
    def excess(self) -> int:
        return excess_dimension(self)

    @property
    def length(self) -> int:
        return length(self.conds)

    def key(self) -> tuple:
        return (self.n, self.d, sort_desc(self.conds))

    def replace(self, conds: Iterable[int]) -> "Problem":
        return Problem(self.n, self.d, tuple(conds))

    def merge(self, i: int, j: int) -> "Problem":
        """Replace ``a_i, a_j`` by the single codimension ``a_i + a_j``."""
        if i == j:
            raise InvalidInput("merge needs two distinct sections")
        rest = [a for t, a in enumerate(self.conds) if t not in (i, j)]
        return self.replace([self.conds[i] + self.conds[j]] + rest)

    def bump(self, i: int, by: int = 1) -> "Problem":
        c = list(self.conds)
        c[i] += by
        return self.replace(c)

    def __str__(self):
        return f"N_{{{self.d},{self.n}}}({','.join(map(str, self.conds))})"


def excess_dimension(p: Problem) -> int:
    return moduli_dimension(p.n, p.d) - sum(a - 1 for a in p.conds)


class Canonical(NamedTuple):
    problem: Problem
    factor: int
    vanishes: bool


def canonicalize(p: Problem) -> Canonical:
    """Strip hyperplane entries (each one is a factor ``d``) and sort.

    ``vanishes`` is set when some codimension exceeds ``n``: no curve meets
    the empty subspace.
    """
    kept = [a for a in p.conds if a > 1]
    factor = p.d ** (len(p.conds) - len(kept))
    vanishes = any(a > p.n for a in kept)
    return Canonical(Problem(p.n, p.d, sort_desc(kept)), factor, vanishes)


def problem(n: int, d: int, conds: Iterable[int]) -> Problem:
    return Problem(n, d, tuple(conds))
