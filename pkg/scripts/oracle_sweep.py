"""Compare the recursion with the WDVV oracle on every canonical problem."""
import argparse
import time
from dataclasses import dataclass, field

from curvecount import gw
from curvecount.checks import count_problems
from curvecount.degrees import Engine


@dataclass
class SweepConfig:
    envelope: list = field(default_factory=lambda: [(3, 1), (3, 2), (3, 3), (3, 4), (4, 1), (4, 2), (5, 1), (6, 1)])


def sweep(cfg: SweepConfig) -> int:
    e = Engine()
    mismatches = 0
    for n, d in cfg.envelope:
        t = time.perf_counter()
        probs = count_problems(n, d)
        bad = [p.conds for p in probs if e.count(n, d, p.conds) != gw.gw_invariant(n, d, p.conds)]
        mismatches += len(bad)
        print(f"n={n} d={d}: {len(probs):4d} problems, {len(bad)} mismatches  ({time.perf_counter() - t:.3f}s)")
        for c in bad:
            print("   MISMATCH", c)
    return mismatches


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--pair", action="append", metavar="N,D", help="restrict to these (n, d) pairs")
    args = ap.parse_args()
    cfg = SweepConfig()
    if args.pair:
        cfg.envelope = [tuple(int(x) for x in s.split(",")) for s in args.pair]
    raise SystemExit(1 if sweep(cfg) else 0)
