"""twistmoyal command line: verify, spectrum, eval."""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import format_element, parse_element
from .numeric import DivisionAtPole, NumericConfig, NumericPoint, evaluate
from .states import MAX_LEVEL, LevelTooLarge
from .suites import SUITE_NAMES, BadConfig, SuiteConfig, render_table, run_suite, spectrum_table


def _pair(text: str) -> tuple[float, float]:
    try:
        a, b = (float(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected two comma-separated numbers, got {text!r}")
    return a, b


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="twistmoyal", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a conformance suite")
    v.add_argument("--suite", required=True, choices=SUITE_NAMES + ("all",))
    v.add_argument("--max-level", type=int, default=8)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--theta", type=float, default=1.0)
    v.add_argument("--omega", type=_pair, default=(0.0, 0.0), help="RE,IM")
    v.add_argument("--nodes", type=int, default=48)
    v.add_argument("--cases", type=int, default=200, help="random cases per property")
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.add_argument("-v", "--verbose", action="store_true")

    s = sub.add_parser("spectrum", help="engine vs printed single-sided energies")
    s.add_argument("--side", choices=("right", "left"), default="right")
    s.add_argument("--max-level", type=int, default=8)
    s.add_argument("--omega-zero", action="store_true")
    s.add_argument("--method", choices=("series", "mu_operator", "bracket"), default="series")
    s.add_argument("--format", choices=("text", "json"), default="text")

    e = sub.add_parser("eval", help="evaluate a canonical element at a real point")
    e.add_argument("--expr", required=True)
    e.add_argument("--at", type=_pair, required=True, help="x1,x2")
    e.add_argument("--theta", type=float, default=1.0)
    e.add_argument("--omega", type=_pair, default=(0.0, 0.0))
    return p


def _verify(args) -> int:
    try:
        numeric = NumericConfig(theta_val=args.theta, omega_val=complex(*args.omega),
                                quadrature_nodes=args.nodes)
        cfg = SuiteConfig(seed=args.seed, max_level=args.max_level, random_cases=args.cases,
                          numeric=numeric)
        cfg.validate()
    except (ValueError, BadConfig) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    names = SUITE_NAMES if args.suite == "all" else (args.suite,)
    reports = [run_suite(n, cfg) for n in names]
    if args.format == "json":
        if len(reports) == 1:
            print(reports[0].to_json())
        else:
            print(json.dumps([r.to_dict() for r in reports], sort_keys=True, indent=1, ensure_ascii=False))
    else:
        print("\n\n".join(r.render_text(args.verbose) for r in reports))
    return 0 if all(r.ok for r in reports) else 1


def _spectrum(args) -> int:
    try:
        rows = spectrum_table(args.side, args.max_level, "zero" if args.omega_zero else "symbolic",
                              args.method)
    except LevelTooLarge as exc:
        print(f"error: {exc} (max {MAX_LEVEL})", file=sys.stderr)
        return 2
    if args.format == "json":
        print(json.dumps([r.to_dict() for r in rows], indent=1, ensure_ascii=False))
    else:
        print(render_table(rows))
    return 0


def _eval(args) -> int:
    try:
        f = parse_element(args.expr)
    except ValueError as exc:
        print(f"error: cannot parse expression: {exc}", file=sys.stderr)
        return 2
    pt = NumericPoint.from_real(*args.at, args.theta, complex(*args.omega))
    try:
        z = evaluate(f, pt)
    except DivisionAtPole as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"{format_element(f)} at x = ({args.at[0]}, {args.at[1]}): {z.real:.12g} {z.imag:+.12g}i")
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return {"verify": _verify, "spectrum": _spectrum, "eval": _eval}[args.command](args)
