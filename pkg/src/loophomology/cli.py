"""Command-line front end.

Subcommands:

  basis                print the monomial basis of one degree of one space
  screen               spherical-candidate screen for one degree
  bounds               printed closed-form bound next to the exhaustive oracle
  immersion-threshold  smallest codimension threshold past the degree bound
  stable-range         the stable-range inequality as a yes/no query
  verify               run the certification suites

Exit codes: 0 success, 2 malformed input, 3 counterexample or failed suite,
4 degree budget exceeded.  Output is deterministic: the same invocation
prints the same bytes.

Spaces are selected with --space: the built-in ids "qs0" and "qsn" (the
latter takes --n), or a path to a UTF-8 JSON file with fields  model
("qs0" | "qsn" | "sigma2"), n, cells, sq_action.  Unknown fields are
rejected rather than ignored.
"""

from __future__ import annotations

import argparse
import json
import sys

from .certify import SUITES, ensure_degree_allowed, run_suites
from .errors import CounterexampleFound, DegreeBudgetExceeded, LoopHomologyError
from .f2algebra import basis_enumerate
from .screener import bounds_report, immersion_threshold_report, screen_degree, stable_range_check
from .spaces import SpaceDesc, qs0_space, qsn_space, space_from_dict


def _load_space(args: argparse.Namespace) -> SpaceDesc:
    name = args.space
    if name == "qs0":
        return qs0_space()
    if name == "qsn":
        if getattr(args, "n", None) is None:
            raise ValueError("--space qsn needs --n")
        return qsn_space(args.n)
    with open(name, encoding="utf-8") as fh:
        return space_from_dict(json.load(fh))


def _print_json(payload: dict) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def _cmd_basis(args: argparse.Namespace) -> int:
    space = _load_space(args)
    ensure_degree_allowed(args.degree)
    basis = basis_enumerate(space, args.degree, args.charge)
    if args.json:
        _print_json({"basis": [str(m) for m in basis]})
    else:
        for m in basis:
            print(m)
    return 0


def _cmd_screen(args: argparse.Namespace) -> int:
    space = _load_space(args)
    ensure_degree_allowed(args.degree)
    report = screen_degree(space, args.degree, args.loop)
    if args.json:
        _print_json(report.to_dict())
        return 0
    print(f"space {report.space.label}")
    print(f"degree {report.degree}")
    print(f"loop {report.loop if report.loop is not None else 'unrestricted'}")
    print(f"verdict {report.verdict}")
    for c in report.candidates:
        print(f"candidate {c}")
    for s in report.squares:
        print(f"square {s}")
    maxima = report.bounds["max_generator_dim"]
    for l in sorted(maxima, key=int):
        print(f"bound l={l} max_generator_dim {maxima[l]}")
    return 0


def _cmd_bounds(args: argparse.Namespace) -> int:
    rep = bounds_report(args.l, args.k)
    flag = "true" if rep.discrepancy else "false"
    print(f"printed {rep.printed}, oracle {rep.oracle}, discrepancy={flag}")
    return 0


def _cmd_immersion_threshold(args: argparse.Namespace) -> int:
    rep = immersion_threshold_report(args.d, args.k)
    flag = "true" if rep.discrepancy else "false"
    print(f"n_min {rep.n_min}")
    print(f"printed {rep.n_min}, oracle {rep.oracle_n_min}, discrepancy={flag}")
    return 0


def _cmd_stable_range(args: argparse.Namespace) -> int:
    print("true" if stable_range_check(args.d, args.n, args.l) else "false")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    names = args.suite or None
    results = run_suites(names, max_degree=args.max_degree, jobs=args.jobs)
    failed = False
    for r in results:
        if r.passed:
            print(f"{r.name} pass")
        else:
            failed = True
            print(f"{r.name} fail: {r.details}")
    return 3 if failed else 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="loophomology",
        description="mod-2 homology of iterated loop spaces: bases, screens, bounds",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    basis = sub.add_parser("basis", help="monomial basis of one degree")
    basis.add_argument("--space", required=True, help="qs0, qsn, or a JSON file path")
    basis.add_argument("--n", type=int, help="sphere dimension for --space qsn")
    basis.add_argument("--degree", type=int, required=True)
    basis.add_argument("--charge", type=int, help="component selector (qs0 only)")
    basis.add_argument("--json", action="store_true")
    basis.set_defaults(fn=_cmd_basis)

    screen = sub.add_parser("screen", help="spherical-candidate screen")
    screen.add_argument("--space", required=True, help="qs0, qsn, or a JSON file path")
    screen.add_argument("--n", type=int, help="sphere dimension for --space qsn")
    screen.add_argument("--degree", type=int, required=True)
    screen.add_argument("--loop", type=int, help="loop filtration level")
    screen.add_argument("--json", action="store_true")
    screen.set_defaults(fn=_cmd_screen)

    bounds = sub.add_parser("bounds", help="printed bound vs exhaustive oracle")
    bounds.add_argument("--l", type=int, required=True)
    bounds.add_argument("--k", type=int, required=True, help="-1 selects the one-cell-below case")
    bounds.set_defaults(fn=_cmd_bounds)

    thr = sub.add_parser("immersion-threshold", help="smallest n past the bound")
    thr.add_argument("--d", type=int, required=True)
    thr.add_argument("--k", type=int, required=True)
    thr.set_defaults(fn=_cmd_immersion_threshold)

    srange = sub.add_parser("stable-range", help="d + l < 2(n + l - 1) query")
    srange.add_argument("--d", type=int, required=True)
    srange.add_argument("--n", type=int, required=True)
    srange.add_argument("--l", type=int, required=True)
    srange.set_defaults(fn=_cmd_stable_range)

    verify = sub.add_parser("verify", help="run certification suites")
    verify.add_argument(
        "--suite",
        action="append",
        choices=sorted(SUITES),
        help="run one suite (repeatable); default is all of them",
    )
    verify.add_argument("--max-degree", type=int, help="override the sweep cap")
    verify.add_argument("--jobs", type=int, default=1, help="parallel degree fan-out")
    verify.set_defaults(fn=_cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except DegreeBudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except CounterexampleFound as exc:
        print(f"counterexample: {exc}", file=sys.stderr)
        return 3
    except (LoopHomologyError, ValueError, TypeError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
