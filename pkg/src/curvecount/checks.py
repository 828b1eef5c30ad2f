"""Identity suites run by ``curvecount selfcheck`` and the acceptance tests.

Each suite yields ``(key, ok, detail)`` triples; :func:`run` collects them.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Callable, Dict, Iterator, List, Optional, Tuple

from . import gw
from .degrees import Engine
from .genera import GENUS_DIMENSIONS, all_thickenings, canonical_degree
from .model import InvalidInput, Problem, moduli_dimension
from .schubert import line_count_table

Result = Tuple[tuple, bool, str]


def vectors(total: int, hi: int, lo: int = 2) -> Iterator[Tuple[int, ...]]:
    """Descending vectors with entries in [lo, hi] and ``sum(a - 1) == total``."""
    if total == 0:
        yield ()
        return
    for a in range(min(hi, total + 1), lo - 1, -1):
        for rest in vectors(total - (a - 1), a, lo):
            yield (a,) + rest


def count_problems(n: int, d: int) -> List[Problem]:
    """Every canonical excess-0 problem (entries in [2, n])."""
    return [Problem(n, d, v) for v in vectors(moduli_dimension(n, d), n)]


def family_problems(n: int, d: int) -> List[Problem]:
    """Every excess-1 problem with entries in [2, n]."""
    return [Problem(n, d, v) for v in vectors(moduli_dimension(n, d) - 1, n)]


def _k(p: Problem, *extra) -> tuple:
    return (p.n, p.d, p.conds) + extra


# -- count suites --------------------------------------------------------------


def suite_lines(e: Engine, n: int, d_max: int) -> Iterator[Result]:
    for p in count_problems(n, 1):
        a, b = e.count(n, 1, p.conds), line_count_table(n, p.conds)
        yield _k(p), a == b, f"pieri {a} vs table {b}"


def suite_oracle(e: Engine, n: int, d_max: int) -> Iterator[Result]:
    for d in range(1, d_max + 1):
        if not gw.supported(n, d):
            continue
        for p in count_problems(n, d):
            a, b = e.count(n, d, p.conds), gw.gw_invariant(n, d, p.conds)
            yield _k(p), a == b, f"recursion {a} vs oracle {b}"


def suite_permutation(e: Engine, n: int, d_max: int) -> Iterator[Result]:
    for d in range(1, d_max + 1):
        for p in count_problems(n, d):
            base = e.count(n, d, p.conds)
            for q in {p.conds[::-1], p.conds[1:] + p.conds[:1]}:
                v = e.count(n, d, q)
                yield _k(p, q), v == base, f"{v} vs {base}"


def suite_hyperplane(e: Engine, n: int, d_max: int) -> Iterator[Result]:
    for d in range(1, d_max + 1):
        for p in count_problems(n, d):
            base = e.count(n, d, p.conds)
            v = e.count(n, d, p.conds + (1,))
            yield _k(p), v == d * base, f"{v} vs d * {base}"


def pivot_pairs(conds: Tuple[int, ...]) -> List[Tuple[int, int]]:
    """One (grow, shrink) pair per distinct value pair; equal entries are interchangeable."""
    out, seen = [], set()
    for g, s in permutations(range(len(conds)), 2):
        tag = (conds[g], conds[s])
        if tag not in seen:
            seen.add(tag)
            out.append((g, s))
    return out


def suite_pivots(e: Engine, n: int, d_max: int) -> Iterator[Result]:
    for d in range(2, d_max + 1):
        for p in count_problems(n, d):
            base = e.count(n, d, p.conds)
            for piv in pivot_pairs(p.conds):
                v = e.count(n, d, p.conds, pivots=piv)
                yield _k(p, piv), v == base, f"pivots {piv}: {v} vs {base}"


def suite_integrality(e: Engine, n: int, d_max: int) -> Iterator[Result]:
    for key, v in e.store.items():
        yield key, isinstance(v, int) and v >= 0, f"stored value {v!r}"
    for key, v in e._m.items():
        yield key, isinstance(v, int), f"m value {v!r}"


# -- one-dimensional family suites ---------------------------------------------


def _padded(p: Problem) -> Problem:
    if len(p.conds) < 3:
        return p.replace(p.conds + (1,) * (3 - len(p.conds)))
    return p


def suite_section_pair_sum(e: Engine, n: int, d_max: int) -> Iterator[Result]:
    for d in range(1, d_max + 1):
        for p in family_problems(n, d):
            p = _padded(p)
            for i, j in combinations(range(len(p.conds)), 2):
                lhs = e.m_section(p, i) + e.m_section(p, j)
                rhs = e.dot_R(p, j, i) - 2 * e.count(n, d, p.merge(i, j).conds)
                yield _k(p, i, j), lhs == rhs, f"{lhs} vs {rhs}"


def suite_equal_sections(e: Engine, n: int, d_max: int) -> Iterator[Result]:
    """Equal codimensions: m_i = m_j, and the two-section value agrees."""
    for d in range(1, d_max + 1):
        for p in family_problems(n, d):
            p = _padded(p)
            for i, j in combinations(range(len(p.conds)), 2):
                if p.conds[i] != p.conds[j]:
                    continue
                mi, mj, m2 = e.m_section(p, i), e.m_section(p, j), e.m_two_section(p, i, j)
                yield _k(p, i, j), mi == mj == m2, f"m_i={mi} m_j={mj} two-section={m2}"


def suite_companions(e: Engine, n: int, d_max: int) -> Iterator[Result]:
    for d in range(1, d_max + 1):
        for p in family_problems(n, d):
            p = _padded(p)
            k = len(p.conds)
            for i in range(k):
                base = e.m_section(p, i)
                others = [t for t in range(k) if t != i]
                for j, l in combinations(others, 2):
                    v = e.m_section(p, i, companions=(j, l))
                    yield _k(p, i, (j, l)), v == base, f"{v} vs {base}"


def suite_dot_r_symmetry(e: Engine, n: int, d_max: int) -> Iterator[Result]:
    for d in range(1, d_max + 1):
        for p in family_problems(n, d):
            for i, j in combinations(range(len(p.conds)), 2):
                a, b = e.dot_R(p, i, j), e.dot_R(p, j, i)
                yield _k(p, i, j), a == b, f"{a} vs {b}"


def suite_square_relation(e: Engine, n: int, d_max: int) -> Iterator[Result]:
    for d in range(1, d_max + 1):
        for p in family_problems(n, d):
            for i in range(len(p.conds)):
                r = e.check_eq7(p, i)
                yield _k(p, i), r == 0, f"residual {r}"


def suite_point_section(e: Engine, n: int, d_max: int) -> Iterator[Result]:
    for d in range(1, d_max + 1):
        for p in family_problems(n, d):
            c = p.conds
            if len(c) >= 3 and c[0] == n and c[1] + c[2] > n:
                r = e.check_eq8(p)
                yield _k(p), r == 0, f"residual {r}"


def suite_genus(e: Engine, n: int, d_max: int) -> Iterator[Result]:
    """Thickening and section independence plus parity (n = 3 only)."""
    if n not in GENUS_DIMENSIONS:
        return
    for d in range(1, d_max + 1):
        for p in family_problems(n, d):
            vals = {}
            for t in all_thickenings(p, e):
                for s in t.retained:
                    vals[(t.plus, s)] = canonical_degree(p, t, section=s, engine=e)
            if not vals:
                continue
            distinct = set(vals.values())
            ok = len(distinct) == 1 and next(iter(distinct)) % 2 == 0
            yield _k(p), ok, f"values {sorted(distinct)}"


SUITES: Dict[str, Callable[[Engine, int, int], Iterator[Result]]] = {
    "lines": suite_lines,
    "oracle": suite_oracle,
    "permutation": suite_permutation,
    "hyperplane": suite_hyperplane,
    "pivots": suite_pivots,
    "section-pair-sum": suite_section_pair_sum,
    "equal-sections": suite_equal_sections,
    "companions": suite_companions,
    "dot-R-symmetry": suite_dot_r_symmetry,
    "square-relation": suite_square_relation,
    "point-section": suite_point_section,
    "genus": suite_genus,
    "integrality": suite_integrality,
}


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: List[Tuple[tuple, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


@dataclass
class SelfcheckConfig:
    n: int
    d_max: int
    suites: Tuple[str, ...] = tuple(SUITES)

    def __post_init__(self):
        if self.n < 3:
            raise InvalidInput(f"selfcheck needs n >= 3, got n = {self.n}")
        if self.d_max < 1:
            raise InvalidInput(f"selfcheck needs d-max >= 1, got {self.d_max}")
        unknown = set(self.suites) - set(SUITES)
        if unknown:
            raise InvalidInput(f"unknown suites {sorted(unknown)}")


def run(cfg: SelfcheckConfig, engine: Optional[Engine] = None) -> List[SuiteResult]:
    e = engine or Engine()
    out = []
    for name in cfg.suites:
        res = SuiteResult(name)
        for key, ok, detail in SUITES[name](e, cfg.n, cfg.d_max):
            res.checked += 1
            if not ok:
                res.failures.append((key, detail))
        out.append(res)
    return out
