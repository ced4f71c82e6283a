#!/usr/bin/env python3
"""Sweep the spherical-class screen over a degree range.

Prints one line per degree: the verdict, surviving candidates, and listed
squares.  Use --json-lines for machine consumption.
"""

from __future__ import annotations

import argparse
import json
import sys

from loophomology.screener import screen_degree
from loophomology.spaces import qs0_space, qsn_space, space_from_dict


def load_space(selector: str, n: int | None):
    if selector == "qs0":
        return qs0_space()
    if selector == "qsn":
        if n is None:
            raise SystemExit("--space qsn needs --n")
        return qsn_space(n)
    with open(selector, encoding="utf-8") as fh:
        return space_from_dict(json.load(fh))


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--space", required=True, help="qs0, qsn, or a description file")
    ap.add_argument("--n", type=int, default=None)
    ap.add_argument("--max-degree", type=int, default=12)
    ap.add_argument("--loop", type=int, default=None, help="loop filtration cut")
    ap.add_argument("--json-lines", action="store_true")
    args = ap.parse_args()

    space = load_space(args.space, args.n)
    for degree in range(1, args.max_degree + 1):
        report = screen_degree(space, degree, loop=args.loop)
        if args.json_lines:
            print(json.dumps(report.to_dict(), sort_keys=True))
            continue
        cands = ", ".join(str(c) for c in report.candidates) or "-"
        squares = ", ".join(str(s) for s in report.squares) or "-"
        print(f"d={degree:<3} {report.verdict:<28} candidates: {cands}   squares: {squares}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
