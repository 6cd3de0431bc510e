"""Command line driver.

Subcommands: validate, fedosov, atiyah, verify.  Exit status: 0 when all
reported checks pass, 1 when structure validation or an identity check
fails, 2 for usage, file, or schema problems, 3 when an internal
consistency guard trips (always a bug, never bad input data).
"""

from __future__ import annotations

import argparse
import sys
import time

from .algebroid import CheckResult, validate_structure
from .atiyah import atiyah_dg, atiyah_lie_pair, check_atiyah_comparison
from .errors import InternalInvariantError, LoadError, ValidationFailure
from .expressions import element_str, parse_rational, poly_str
from .fedosov import build_fedosov, flatness_defects
from .homotopy import iota_star
from .loader import load_chart
from .report import build_payload, render_json, render_text
from .suites import SUITE_NAMES, run_suites


def _rational(text: str):
    try:
        return parse_rational(text)
    except (LoadError, ValueError) as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _fiber_bound(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 2:
        raise argparse.ArgumentTypeError("the fiber degree bound must be at least 2")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="liepair",
        description=(
            "Construct and machine-check the flat fiberwise differential and "
            "the two Atiyah cocycles of a Lie pair presented in coordinates."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_bound=True):
        p.add_argument("--input", required=True, help="chart description file (JSON)")
        p.add_argument("--output", help="write the report here instead of stdout")
        p.add_argument(
            "--format", choices=("json", "text"), default="text", help="report format"
        )
        p.add_argument(
            "--gamma-param",
            type=_rational,
            default=None,
            metavar="RATIONAL",
            help="value bound to the parameter gamma (overrides the file)",
        )
        if with_bound:
            p.add_argument(
                "--max-b-degree",
                type=_fiber_bound,
                default=4,
                help="fiber degree at which power series data is truncated",
            )

    common(sub.add_parser("validate", help="check the structure axioms"), with_bound=False)
    common(sub.add_parser("fedosov", help="build the flat differential and check it"))
    common(sub.add_parser("atiyah", help="compute both cocycles and compare them"))
    verify = sub.add_parser("verify", help="run identity check suites")
    common(verify)
    verify.add_argument(
        "--suite",
        choices=SUITE_NAMES + ("all",),
        default="all",
        help="which suite to run",
    )
    return parser


def _load(args):
    overrides = {}
    if args.gamma_param is not None:
        overrides["gamma"] = args.gamma_param
    return load_chart(args.input, param_overrides=overrides)


def _base_extra(chart, args):
    extra = {
        "matched": chart.alg.matched,
        "params": {k: str(v) for k, v in sorted(chart.params.items())},
    }
    if getattr(args, "max_b_degree", None) is not None:
        extra["max_b_degree"] = args.max_b_degree
    return extra


def _emit(args, payload) -> int:
    text = render_json(payload) if args.format == "json" else render_text(payload)
    if not text.endswith("\n"):
        text += "\n"
    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            raise LoadError(f"cannot write {args.output}: {exc}")
    else:
        sys.stdout.write(text)
    return 0 if payload["passed"] else 1


def cmd_validate(args) -> int:
    started = time.monotonic()
    chart = _load(args)
    report = validate_structure(chart.alg)
    extra = _base_extra(chart, args)
    extra["elapsed_seconds"] = round(time.monotonic() - started, 3)
    payload = build_payload("validate", args.input, report.checks, extra)
    return _emit(args, payload)


def cmd_fedosov(args) -> int:
    started = time.monotonic()
    chart = _load(args)
    report = validate_structure(chart.alg)
    if not report.passed:
        extra = _base_extra(chart, args)
        extra["elapsed_seconds"] = round(time.monotonic() - started, 3)
        return _emit(args, build_payload("fedosov", args.input, report.checks, extra))
    fd = build_fedosov(chart.alg, args.max_b_degree)
    checks = list(report.checks)
    defects = flatness_defects(fd)
    checks.append(
        CheckResult(
            "differential_squares_to_zero",
            not defects,
            [f"D^2 on {g}: {element_str(v)}" for g, v in sorted(defects.items())][:8],
        )
    )
    names = chart.variables
    extra = _base_extra(chart, args)
    extra["window"] = fd.window
    extra["correction_field"] = {
        f"b{l + 1}": element_str(v, names) for l, v in sorted(fd.x_field.comps.items())
    }
    extra["elapsed_seconds"] = round(time.monotonic() - started, 3)
    return _emit(args, build_payload("fedosov", args.input, checks, extra))


def cmd_atiyah(args) -> int:
    started = time.monotonic()
    chart = _load(args)
    report = validate_structure(chart.alg)
    if not report.passed:
        extra = _base_extra(chart, args)
        extra["elapsed_seconds"] = round(time.monotonic() - started, 3)
        return _emit(args, build_payload("atiyah", args.input, report.checks, extra))
    alg = chart.alg
    names = chart.variables
    fd = build_fedosov(alg, args.max_b_degree)
    dg = iota_star(atiyah_dg(fd))
    extra = _base_extra(chart, args)
    extra["dg_cocycle_restricted"] = {
        f"({i + 1},{j + 1})->{k + 1}": element_str(v, names)
        for (i, j, k), v in sorted(dg.comps.items())
    }
    checks = []
    if alg.matched:
        pair = atiyah_lie_pair(alg)
        extra["pair_cocycle"] = {
            f"alpha{a + 1}; ({j + 1},{k + 1})->{l + 1}": poly_str(v, names)
            for (a, j, k, l), v in sorted(pair.comps.items())
        }
        checks.append(
            CheckResult("pair_cocycle_symmetric", pair.is_symmetric(), [])
        )
        resid = check_atiyah_comparison(fd)
        residuals = []
        if resid:
            residuals = [
                f"({i + 1},{j + 1})->{k + 1}: {element_str(v, names)}"
                for (i, j, k), v in sorted(resid.comps.items())
            ][:8]
        checks.append(CheckResult("cocycle_comparison", not resid, residuals))
    extra["elapsed_seconds"] = round(time.monotonic() - started, 3)
    return _emit(args, build_payload("atiyah", args.input, checks, extra))


def cmd_verify(args) -> int:
    started = time.monotonic()
    chart = _load(args)
    checks = run_suites(chart.alg, args.suite, max_b=args.max_b_degree)
    extra = _base_extra(chart, args)
    extra["suite"] = args.suite
    extra["elapsed_seconds"] = round(time.monotonic() - started, 3)
    return _emit(args, build_payload("verify", args.input, checks, extra))


_COMMANDS = {
    "validate": cmd_validate,
    "fedosov": cmd_fedosov,
    "atiyah": cmd_atiyah,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except LoadError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValidationFailure as exc:
        for check in exc.report.failing():
            print(f"FAIL {check.name}", file=sys.stderr)
        return 1
    except InternalInvariantError as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
