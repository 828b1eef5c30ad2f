"""Probe thickening dependence of deg K_B outside the supported range (n >= 4).

Lifts the n = 3 restriction for the duration of the run and prints the
value per birational thickening.  For P^4 (3,3,2) the family is one ruling
of a quadric surface, so the true value is -2; thickening (2,2,2) gives -3
because all lines in one special plane belong to B^+ and the map contracts
that sub-family, a ramification term the formula does not include.
"""
import argparse
from dataclasses import dataclass

from curvecount import genera
from curvecount.genera import _budget_thickenings, canonical_degree, sheets
from curvecount.model import Problem


@dataclass
class ProbeConfig:
    n: int = 4
    d: int = 1
    conds: tuple = (3, 3, 2)


def probe(cfg: ProbeConfig) -> None:
    genera.GENUS_DIMENSIONS = (cfg.n,)
    p = Problem(cfg.n, cfg.d, cfg.conds)
    for t in _budget_thickenings(p):
        D = sheets(p, t)
        val = canonical_degree(p, t) if D == 1 else None
        print(f"{t.plus}: sheets {D}, deg K {val}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=4)
    ap.add_argument("--d", type=int, default=1)
    ap.add_argument("--conds", default="3,3,2")
    a = ap.parse_args()
    probe(ProbeConfig(a.n, a.d, tuple(int(x) for x in a.conds.split(","))))
