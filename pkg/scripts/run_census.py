"""Run the full enumeration census across moduli and print JSON reports.

Example:
    python3 scripts/run_census.py --m 5 --m 7 --horizon 4096 --both-protocols
"""
from __future__ import annotations

import argparse
import json
import sys
import time

from rankpart import run_census, run_census_both


def parse_args(argv: list[str] | None = None) -> argparse.Namespace:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--m", action="append", type=int, default=None,
                        help="modulus to survey, repeatable (default: 5 7 9 11)")
    parser.add_argument("--horizon", type=int, default=4096)
    parser.add_argument("--both-protocols", action="store_true")
    parser.add_argument("--output", default=None, help="write JSON here instead of stdout")
    return parser.parse_args(argv)


def main(argv: list[str] | None = None) -> int:
    args = parse_args(argv)
    moduli = args.m or [5, 7, 9, 11]
    docs = []
    for m in moduli:
        started = time.perf_counter()
        if args.both_protocols:
            reports = run_census_both(m, args.horizon)
        else:
            reports = [run_census(m, args.horizon)]
        elapsed = time.perf_counter() - started
        for r in reports:
            doc = r.to_dict()
            doc["seconds"] = round(elapsed, 2)
            docs.append(doc)
        print(f"m={m}: heads={reports[0].heads} groups={reports[0].dedup_groups} "
              f"classes={[r.classes for r in reports]} dead={len(reports[0].non_extendable)} "
              f"({elapsed:.1f}s)", file=sys.stderr)
    text = json.dumps(docs, indent=2, sort_keys=True)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
