"""deg K_B for every one-dimensional family in P^3, across all valid thickenings."""
import argparse
from dataclasses import dataclass

from curvecount.checks import family_problems
from curvecount.genera import all_thickenings, canonical_degree


@dataclass
class SurveyConfig:
    d_max: int = 3


def survey(cfg: SurveyConfig) -> None:
    for d in range(1, cfg.d_max + 1):
        for p in family_problems(3, d):
            ts = list(all_thickenings(p))
            vals = sorted({canonical_degree(p, t, section=s) for t in ts for s in t.retained})
            status = "no birational thickening" if not ts else f"deg K = {vals}"
            print(f"d={d} {p.conds}: {len(ts)} valid thickenings, {status}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--d-max", type=int, default=3)
    survey(SurveyConfig(ap.parse_args().d_max))
