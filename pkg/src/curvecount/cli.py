"""``curvecount`` command line: count, genus, table, selfcheck."""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import List, Optional

from . import cache as cachefile
from . import checks, gw, trace
from .degrees import Engine, MemoStore
from .genera import genus_report
from .model import DimensionMismatch, InvalidInput, Problem


def _conds(text: str):
    try:
        return tuple(int(a) for a in text.split(",") if a.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"conds must be comma-separated integers, got {text!r}")


def _engine(args) -> Engine:
    store = MemoStore()
    if getattr(args, "cache", None) and os.path.exists(args.cache):
        cachefile.load(args.cache, store)
    return Engine(store)


def cmd_count(args) -> int:
    e = _engine(args)
    value = e.count(args.n, args.d, args.conds)
    if args.trace:
        tree = trace.trace_count(args.n, args.d, args.conds)
        trace.write(args.trace, tree, {"n": args.n, "d": args.d, "conds": list(args.conds)})
    if args.cache:
        cachefile.save(args.cache, e.store)
    print(value)
    return 0


def cmd_genus(args) -> int:
    e = _engine(args)
    rep = genus_report(Problem(args.n, args.d, args.conds), e)
    if args.cache:
        cachefile.save(args.cache, e.store)
    print(json.dumps(rep.as_dict()))
    return 0


def table_rows(n: int, d_max: int, engine: Optional[Engine] = None):
    """(d, conds, N) for every canonical excess-0 vector, ordered by d then conds."""
    for d in range(1, d_max + 1):
        if not gw.supported(n, d):
            raise InvalidInput(
                "table envelope is d <= 1 for any n, n=3: d <= 4, n=4: d <= 2; "
                f"got n={n}, d-max={d_max}"
            )
    e = engine or Engine()
    rows = []
    for d in range(1, d_max + 1):
        for p in sorted(checks.count_problems(n, d), key=lambda p: p.conds):
            rows.append((d, p.conds, e.count(n, d, p.conds)))
    return rows


def cmd_table(args) -> int:
    rows = table_rows(args.n, args.d_max, _engine(args))
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["d", "conds", "N"])
        for d, conds, v in rows:
            w.writerow([d, ";".join(map(str, conds)), v])
        sys.stdout.write(buf.getvalue())
    else:
        recs = [json.dumps({"d": d, "conds": list(c), "N": v}, separators=(",", ":")) for d, c, v in rows]
        sys.stdout.write("[\n" + ",\n".join(recs) + "\n]\n")
    return 0


def cmd_selfcheck(args) -> int:
    cfg = checks.SelfcheckConfig(args.n, args.d_max)
    status = 0
    for res in checks.run(cfg, _engine(args)):
        print(f"{res.name}: {res.checked} checked, {len(res.failures)} failed")
        for key, detail in res.failures[:5]:
            print(f"  FAIL {key}: {detail}")
            status = 1
    print("selfcheck " + ("FAILED" if status else "passed"))
    return status


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="curvecount", description=__doc__)
    sub = ap.add_subparsers(dest="cmd", required=True)

    def query(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--d", type=int, required=True)
        p.add_argument("--conds", type=_conds, required=True, help="comma-separated codimensions")
        p.add_argument("--cache", metavar="PATH")
        p.set_defaults(fn=fn)
        return p

    query("count", cmd_count, "number of rational curves meeting the conditions").add_argument(
        "--trace", metavar="PATH", help="write the derivation tree as JSON"
    )
    query("genus", cmd_genus, "canonical degree of a one-dimensional family")

    t = sub.add_parser("table", help="all counts up to a degree")
    t.add_argument("--n", type=int, required=True)
    t.add_argument("--d-max", type=int, required=True)
    t.add_argument("--format", choices=("json", "csv"), default="csv")
    t.add_argument("--cache", metavar="PATH")
    t.set_defaults(fn=cmd_table)

    s = sub.add_parser("selfcheck", help="run the identity suites")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--d-max", type=int, required=True)
    s.add_argument("--cache", metavar="PATH")
    s.set_defaults(fn=cmd_selfcheck)
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except DimensionMismatch as exc:
        print(str(exc), file=sys.stderr)
        return 2
    except (InvalidInput, cachefile.CacheError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
