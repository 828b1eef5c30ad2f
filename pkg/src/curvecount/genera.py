"""Canonical degree of a one-dimensional incidence family B(a.).

Thicken some conditions ``A_i ⊆ A_i^+`` (codimension ``a_i^+``) and drop the
rest so that the thickened family ``B^+`` has dimension ``n - 1``; its
universal curve ``X^+`` then maps to P^n.  Riemann-Hurwitz for that map,
restricted to the surface ``X`` over ``B`` and dotted with one section, gives
``deg K_{B^+}|_B``; adjunction adds the normal degrees of ``B`` in each
``B_i``.

The ramification divisor restricted to ``X`` is

    sum_i (a_i^+ - 1) s_i  +  sum_F max(0, n - 2 - delta^+(F)) F

over sections and over reducible-fibre components ``F`` that the map
contracts (``delta^+(F)`` is the dimension of F's own family inside B^+).
That is the whole ramification only when the map is birational; otherwise
it also branches along entire fibres, which this method cannot see.  A
thickening is therefore *valid* only if exactly one curve of B^+ passes
through a general point of P^n.

For n >= 4 a birational map can also contract whole sub-families of curves
lying in special linear spans (e.g. all lines of a plane meeting three
planes of P^4 in lines); those are not counted here, so genus queries are
limited to n = 3.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Optional, Tuple

from . import boundary
from .degrees import Engine, default_engine
from .model import DimensionMismatch, InvalidInput, Problem, moduli_dimension, sort_desc


class NoThickening(InvalidInput):
    pass


@dataclass(frozen=True)
class ThickeningSpec:
    """``plus[i]`` is the thickened codimension of condition i, or None if dropped."""

    plus: Tuple[Optional[int], ...]

    @property
    def ell(self) -> int:
        return sum(1 for a in self.plus if a is not None)

    @property
    def retained(self) -> Tuple[int, ...]:
        return tuple(i for i, a in enumerate(self.plus) if a is not None)

    @property
    def dropped(self) -> Tuple[int, ...]:
        return tuple(i for i, a in enumerate(self.plus) if a is None)

    @property
    def weights(self) -> Tuple[int, ...]:
        """Ramification order ``a_i^+ - 1`` along each section (0 if dropped)."""
        return tuple(0 if a is None else a - 1 for a in self.plus)


@dataclass(frozen=True)
class GenusReport:
    deg_K: int
    genus_if_connected: int
    thickening_used: ThickeningSpec

    def as_dict(self) -> dict:
        return {
            "deg_K": self.deg_K,
            "genus_if_connected": self.genus_if_connected,
            "thickening": list(self.thickening_used.plus),
        }


GENUS_DIMENSIONS = (3,)


def _require(p: Problem) -> None:
    if p.n not in GENUS_DIMENSIONS:
        raise InvalidInput(f"genus computation is supported for n = 3 only, got n = {p.n}")
    if p.excess != 1:
        raise DimensionMismatch(p.excess, expected=1)
    if any(a > p.n for a in p.conds):
        raise InvalidInput(f"empty family: a codimension exceeds n in {p.conds}")


def budget(p: Problem) -> int:
    return moduli_dimension(p.n, p.d) - (p.n - 1)


def sheets(p: Problem, t: ThickeningSpec, engine: Optional[Engine] = None) -> int:
    """Degree of the thickened universal curve over P^n."""
    e = engine or default_engine()
    return e.count(p.n, p.d, tuple(t.plus[i] for i in t.retained) + (p.n,))


def validate_thickening(p: Problem, t: ThickeningSpec, engine: Optional[Engine] = None) -> None:
    if len(t.plus) != len(p.conds):
        raise InvalidInput("thickening must cover every condition")
    for a, ap in zip(p.conds, t.plus):
        if ap is not None and not 2 <= ap <= a:
            raise InvalidInput(f"thickened codimension {ap} outside [2, {a}]")
    if sum(t.weights) != budget(p):
        raise InvalidInput(f"thickened family must have dimension n-1 = {p.n - 1}")
    D = sheets(p, t, engine)
    if D != 1:
        raise InvalidInput(f"thickened family covers P^{p.n} with {D} sheets; need a birational one")


def greedy_thickening(p: Problem) -> ThickeningSpec:
    """Keep the largest conditions whole until the dimension budget runs out."""
    if p.excess != 1:
        raise DimensionMismatch(p.excess, expected=1)
    left = budget(p)
    order = sorted(range(len(p.conds)), key=lambda i: (-p.conds[i], i))
    plus = [None] * len(p.conds)
    for i in order:
        if left == 0 or p.conds[i] < 2:
            break
        ap = min(p.conds[i], left + 1)
        plus[i] = ap
        left -= ap - 1
    if left:
        raise NoThickening(f"no thickening of {p} reaches dimension n-1")
    return ThickeningSpec(tuple(plus))


def _budget_thickenings(p: Problem) -> Iterator[ThickeningSpec]:
    b = budget(p)
    choices = [[None] + list(range(2, a + 1)) for a in p.conds]
    for plus in product(*choices):
        if sum(0 if a is None else a - 1 for a in plus) == b:
            yield ThickeningSpec(plus)


def all_thickenings(p: Problem, engine: Optional[Engine] = None) -> Iterator[ThickeningSpec]:
    """Every valid thickening (exhaustive; small problems only)."""
    _require(p)
    for t in _budget_thickenings(p):
        if sheets(p, t, engine) == 1:
            yield t


def choose_thickening(p: Problem, engine: Optional[Engine] = None) -> ThickeningSpec:
    """The greedy thickening if it is valid, else the first valid one found."""
    _require(p)
    try:
        t = greedy_thickening(p)
        if sheets(p, t, engine) == 1:
            return t
    except NoThickening:
        pass
    for t in all_thickenings(p, engine):
        return t
    raise NoThickening(f"no birational thickening exists for {p}")


def canonical_degree(p: Problem, t: ThickeningSpec, section: Optional[int] = None,
                     engine: Optional[Engine] = None) -> int:
    """deg K_B, evaluating the Riemann-Hurwitz relation on ``section``.

    ``section`` defaults to the first retained condition; any section gives
    the same answer.
    """
    _require(p)
    e = engine or default_engine()
    validate_thickening(p, t, e)
    n, d, k = p.n, p.d, len(p.conds)
    N = lambda q: e.count(n, d, q.conds)
    m = [e.m_section(p, i) for i in range(k)]
    w = t.weights
    s = t.retained[0] if section is None else section

    # -(n+1) L + rho = K_{X/B} + pi^* K_{B+}|_B with K_{X/B} = -2 s_s - m_s F + R_s
    base = -(n + 1) * N(p.bump(s)) - (w[s] + 1) * m[s]
    base += sum(w[i] * N(p.merge(s, i)) for i in range(k) if i != s)
    base += boundary.contracted_component_sum(p, s, w, e.lower_count)

    normal = 0
    for i in range(k):
        if t.plus[i] is not None:
            normal += (p.conds[i] - t.plus[i]) * N(p.bump(i))
        else:
            normal += p.conds[i] * N(p.bump(i)) + m[i]
    value = base + normal
    e._note(("genus", n, d, p.conds, t.plus, s), "genus-eq10-13",
            [("N", n, d, p.bump(s).conds)] + [e._m_key(p, i) for i in range(k)], value)
    return value


def genus_report(p: Problem, engine: Optional[Engine] = None) -> GenusReport:
    """deg K_B and the genus B would have if it were connected."""
    p = p.replace(sort_desc(p.conds))
    t = choose_thickening(p, engine)
    deg_k = canonical_degree(p, t, engine=engine)
    if deg_k % 2:
        raise AssertionError(f"odd canonical degree {deg_k} for {p}")
    return GenusReport(deg_k, 1 + deg_k // 2, t)
