#!/usr/bin/env python3
"""Run the desk-scale certification suites and print a timing table."""

from __future__ import annotations

import argparse
import sys
import time

from loophomology.certify import SUITES, run_suites


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--suite", action="append", choices=sorted(SUITES),
                    help="run one suite (repeatable, default all)")
    ap.add_argument("--max-degree", type=int, default=None,
                    help="override each suite's default degree cap")
    ap.add_argument("--jobs", type=int, default=1, help="parallel degree fan-out")
    args = ap.parse_args()

    names = args.suite or list(SUITES)
    failures = 0
    for name in names:
        start = time.monotonic()
        (result,) = run_suites([name], max_degree=args.max_degree, jobs=args.jobs)
        elapsed = time.monotonic() - start
        mark = "pass" if result.passed else "FAIL"
        print(f"{name:<20} {mark}  {elapsed:7.2f}s  {result.details}")
        failures += not result.passed
    return 3 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
