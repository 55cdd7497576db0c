"""Command-line surface: check documents, realize figures, enumerate pairing
patterns, run theorem verification campaigns.

Exit codes are a contract: 0 success/realizable, 1 mathematical failure,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .conditions import (
    AngleAssignment,
    AngleError,
    Tolerances,
    realizability_verdict,
)
from .figure import FigureError, parse_document
from .patterns import MAX_FAN, enumerate_patterns
from .realize import RealizationError, realize
from .svg import render_svg
from .theorems import BUILDERS, SCENARIO_NAMES, run_verification

EXIT_OK = 0
EXIT_MATH = 1
EXIT_USAGE = 2


def _fmt(x: float) -> str:
    s = "%.9g" % x
    return "0" if s == "-0" else s


def _fail(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return EXIT_USAGE


def _load(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise FigureError(f"cannot read {path}: {exc.strerror}") from exc
    figure, rows = parse_document(text)
    if rows is None:
        raise FigureError("no assignment present")
    return figure, AngleAssignment.from_rows(rows)


# -- check ---------------------------------------------------------------------

def cmd_check(args) -> int:
    try:
        figure, angles = _load(args.path)
    except (FigureError, AngleError, ValueError) as exc:
        return _fail(str(exc))
    tol = Tolerances.measured() if args.measured else Tolerances(
        pi_sum=args.tol_pi, two_pi=args.tol_two_pi,
        sine_log=args.tol_sine, pairing=args.tol_pairing)
    verdict = realizability_verdict(figure, angles, tol)
    if args.json:
        doc = {
            "figure": figure.name,
            "realizable": verdict.realizable,
            "via": verdict.via,
            "conditions": {
                name: {
                    "passed": rep.passed,
                    "violations": [
                        {"locus": v.locus, "residual": float(_fmt(v.residual)),
                         "detail": v.detail}
                        for v in rep.violations],
                }
                for name, rep in verdict.reports.items()},
        }
        print(json.dumps(doc, indent=2))
    else:
        for rep in verdict.reports.values():
            print(rep)
        tail = f"via {verdict.via}" if verdict.realizable else "conditions violated"
        print(f"realizable: {'yes' if verdict.realizable else 'no'} ({tail})")
    return EXIT_OK if verdict.realizable else EXIT_MATH


# -- realize -------------------------------------------------------------------

def cmd_realize(args) -> int:
    try:
        figure, angles = _load(args.path)
    except (FigureError, AngleError, ValueError) as exc:
        return _fail(str(exc))
    try:
        real = realize(figure, angles, tol=args.tol,
                       require_convex=not args.allow_nonconvex)
    except RealizationError as exc:
        print(f"realization failed: {exc}", file=sys.stderr)
        return EXIT_MATH
    worst = max((r.worst for r in real.closure_residuals), default=0.0)
    if args.json:
        doc = {
            "figure": figure.name,
            "coordinates": {k: [float(_fmt(x)), float(_fmt(y))]
                            for k, (x, y) in sorted(real.coords.items())},
            "worst_closure_residual": float(_fmt(worst)),
            "warnings": list(real.warnings),
        }
        print(json.dumps(doc, indent=2))
    else:
        for label, (x, y) in sorted(real.coords.items()):
            print(f"{label} {_fmt(x)} {_fmt(y)}")
        if real.closure_residuals:
            print(f"worst closure residual: {_fmt(worst)} deg")
    for w in real.warnings:
        print(f"warning: {w}", file=sys.stderr)
    if args.svg:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(render_svg(real, figure, annotate_angles=args.annotate))
        print(f"svg written to {args.svg}", file=sys.stderr)
    return EXIT_OK


# -- patterns ------------------------------------------------------------------

def cmd_patterns(args) -> int:
    if not (2 <= args.n <= MAX_FAN):
        return _fail(f"--n out of range: need 2 <= n <= {MAX_FAN}")
    classes = enumerate_patterns(args.n)
    if args.json:
        doc = [{"canonical": str(c.canonical), "signature": c.signature,
                "members": c.members} for c in classes]
        print(json.dumps(doc, indent=2))
    elif args.signatures_only:
        counts: dict = {}
        for c in classes:
            counts[c.signature] = counts.get(c.signature, 0) + 1
        for sig in sorted(counts, key=lambda s: (s.count("d"), s)):
            print(f"{sig} {counts[sig]}")
    else:
        for c in classes:
            print(c)
        print(f"total: {len(classes)} classes")
    return EXIT_OK


# -- theorems ------------------------------------------------------------------

def cmd_theorems(args) -> int:
    names = SCENARIO_NAMES if args.run == "all" else (args.run,)
    for name in names:
        if name not in SCENARIO_NAMES:
            return _fail(f"unknown scenario {name!r}; valid: "
                         + ", ".join(SCENARIO_NAMES) + ", all")
    tol = args.tol if args.tol is not None else (1e-6 if args.stress else 1e-9)
    reports = [run_verification(n, trials=args.trials, seed=args.seed,
                                claim_tol=tol, coordinate_tol=tol,
                                stress=args.stress)
               for n in names]
    if args.json:
        doc = [{
            "scenario": r.scenario, "trials": r.trials, "seed": r.seed,
            "passed": r.passed,
            "max_claim_deviation": float(_fmt(r.max_claim_dev)),
            "max_coordinate_deviation": float(_fmt(r.max_coordinate_dev)),
            "failures": [
                {"trial": f.index, "params": f.params, "error": f.error}
                for f in r.failures],
        } for r in reports]
        print(json.dumps(doc, indent=2))
    else:
        for r in reports:
            print(r.summary())
        if args.trials == 1 and len(reports) == 1:
            rec = reports[0].records[0]
            print("params: " + ", ".join(
                f"{k}={_fmt(v)}" for k, v in rec.params.items()))
            sc = BUILDERS[reports[0].scenario](*rec.params.values())
            for check, dev in sc.checks.items():
                print(f"{check}: deviation {_fmt(dev)}")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_MATH


# -- dispatch ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="trifig",
        description="Realizability of angle assignments on triangulated figures")
    sub = p.add_subparsers(dest="command", required=True)
    defaults = Tolerances()

    c = sub.add_parser("check", help="run the realizability conditions on a document")
    c.add_argument("path")
    c.add_argument("--json", action="store_true")
    c.add_argument("--measured", action="store_true",
                   help="tolerance preset for angle maps measured off coordinates")
    c.add_argument("--tol-pi", type=float, default=defaults.pi_sum)
    c.add_argument("--tol-two-pi", type=float, default=defaults.two_pi)
    c.add_argument("--tol-sine", type=float, default=defaults.sine_log)
    c.add_argument("--tol-pairing", type=float, default=defaults.pairing)
    c.set_defaults(fn=cmd_check)

    r = sub.add_parser("realize", help="construct coordinates for a document")
    r.add_argument("path")
    r.add_argument("--svg", metavar="OUT")
    r.add_argument("--annotate", action="store_true",
                   help="annotate the SVG with measured angles")
    r.add_argument("--tol", type=float, default=1e-7,
                   help="join residual budget in degrees")
    r.add_argument("--allow-nonconvex", action="store_true")
    r.add_argument("--json", action="store_true")
    r.set_defaults(fn=cmd_realize)

    q = sub.add_parser("patterns", help="enumerate fan pairing-pattern classes")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--signatures-only", action="store_true")
    q.add_argument("--json", action="store_true")
    q.set_defaults(fn=cmd_patterns)

    t = sub.add_parser("theorems", help="run scenario verification campaigns")
    t.add_argument("--run", default="all",
                   help="scenario name or 'all'")
    t.add_argument("--trials", type=int, default=100)
    t.add_argument("--seed", type=int, default=0)
    t.add_argument("--tol", type=float, default=None,
                   help="deviation budget (default 1e-9, or 1e-6 with --stress)")
    t.add_argument("--stress", action="store_true",
                   help="sample near-degenerate parameters")
    t.add_argument("--json", action="store_true")
    t.set_defaults(fn=cmd_theorems)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors already; keep its convention
        return int(exc.code or 0)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
