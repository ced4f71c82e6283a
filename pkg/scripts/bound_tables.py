#!/usr/bin/env python3
"""Tabulate generator-dimension maxima, printed bounds, and thresholds.

Every row shows the closed-form value next to the exhaustive oracle; rows
where the two disagree are marked so neither number is silently preferred.
"""

from __future__ import annotations

import argparse
import sys

from loophomology.screener import (
    bounds_report,
    immersion_threshold_report,
    max_generator_dim,
    max_generator_dim_exhaustive,
)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-l", type=int, default=8)
    ap.add_argument("--max-k", type=int, default=4)
    args = ap.parse_args()

    print("# max generator dimension (closed form vs exhaustive), base dim 1")
    for l in range(1, args.max_l + 1):
        closed = max_generator_dim(l, 1)
        brute = max_generator_dim_exhaustive(l, 1)
        flag = "" if closed == brute else "  <-- MISMATCH"
        print(f"l={l:<3} closed={closed:<8} exhaustive={brute}{flag}")

    print("\n# doubled bounds: printed form vs oracle")
    for l in range(2, args.max_l + 1):
        r = bounds_report(l, -1)
        mark = " discrepancy" if r.discrepancy else ""
        print(f"s-minus-1 l={l:<3} printed={r.printed:<8} oracle={r.oracle}{mark}")
    for l in range(2, args.max_l + 1):
        for k in range(0, args.max_k + 1):
            r = bounds_report(l, k)
            mark = " discrepancy" if r.discrepancy else ""
            print(f"main-1    l={l} k={k:<3} printed={r.printed:<8} oracle={r.oracle}{mark}")

    print("\n# immersion thresholds n_min(d, k)")
    for d in range(1, args.max_l + 1):
        row = []
        for k in range(1, args.max_k + 1):
            t = immersion_threshold_report(d, k)
            row.append(f"k={k}:{t.n_min}({t.oracle_n_min})")
        print(f"d={d:<3} " + "  ".join(row))
    print("\nparenthesized values use the exhaustive oracle in place of the printed form")
    return 0


if __name__ == "__main__":
    sys.exit(main())
