"""Command-line interface.

Subcommands wire the library end to end: ``convert`` (prior -> membership),
``invert`` (membership -> calibrated prior), ``update`` (membership + data ->
membership), ``figure1`` (the standard demonstration curves), ``cuts`` and
``risk``.

Output conventions (see README for the format reference):

* curve CSV: one curve per file or stream, a single ``theta,<name>`` header
  line, rows with 17 significant digits;
* with ``--out`` the curve goes to that file (``figure1``: files in that
  directory) and the report to stdout; without it the curve is printed to
  stdout followed by the report as ``# ``-prefixed lines;
* exit status: 0 success, 1 validation error, 2 numerical/feasibility error.

Identical inputs produce byte-identical outputs.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from .cuts import gamma_cut
from .decision import LossParams, prior_to_membership, risk
from .errors import NumericalError, ValidationError
from .grid import DEFAULT_GRID_SIZE, integrate_values
from .inverse import calibrate_a2zero, calibrate_b2, membership_to_prior, uniqueness_report
from .showcase import EXPORT_POINTS, build_showcase
from .specs import build_density, build_likelihood, build_membership, parse_spec
from .update import posterior

DEFAULT_GAMMAS = tuple(k / 10 for k in range(1, 11))


class _Parser(argparse.ArgumentParser):
    """argparse reports usage problems as validation errors (exit status 1)."""

    def error(self, message):
        raise ValidationError(message)


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _load_spec(text: str) -> dict:
    """Inline JSON if the argument looks like an object, else a file path."""
    text = text.strip()
    if text.startswith("{"):
        return parse_spec(text)
    path = Path(text)
    if not path.exists():
        raise ValidationError(f"spec file not found: {text}")
    return parse_spec(path.read_text())


def _parse_gammas(raw: str | None):
    if raw is None:
        return DEFAULT_GAMMAS
    try:
        gammas = tuple(float(part) for part in raw.split(","))
    except ValueError:
        raise ValidationError(f"--gamma must be a comma-separated list of numbers, got {raw!r}")
    if not gammas:
        raise ValidationError("--gamma list is empty")
    return gammas


def _curve_lines(name: str, thetas, values) -> list[str]:
    lines = [f"theta,{name}"]
    lines.extend(f"{_fmt(t)},{_fmt(v)}" for t, v in zip(thetas, values))
    return lines


def _emit(out, curve_lines: list[str] | None, report: list[str], stdout) -> None:
    """Curve to --out (or stdout); report to stdout as '# ' lines."""
    if curve_lines is not None:
        if out:
            Path(out).write_text("\n".join(curve_lines) + "\n", newline="\n")
        else:
            for line in curve_lines:
                print(line, file=stdout)
    for line in report:
        print(f"# {line}", file=stdout)


def _cut_report_lines(m, gammas) -> list[str]:
    lines = []
    for g in gammas:
        cut = gamma_cut(m, g)
        if cut.is_empty:
            lines.append(f"gamma_cut {float(g)!r}: (empty)")
        else:
            parts = " | ".join(f"[{a!r}, {b!r}]" for a, b in cut.intervals)
            lines.append(f"gamma_cut {float(g)!r}: {parts}")
    return lines


def cmd_convert(args, stdout) -> int:
    params = LossParams(args.a1, args.a2, args.b1, args.b2)
    prior = build_density(_load_spec(args.prior), args.grid)
    m = prior_to_membership(params, prior)
    th = params.thresholds()
    # the optimal membership is a nondecreasing function of the density level
    order = np.argsort(prior.values, kind="stable")
    monotone = bool(np.all(np.diff(m.values[order]) >= -args.tol))
    report = [
        f"n = {m.n}",
        f"t_lo = {th.t_lo!r}",
        f"t_hi = {th.t_hi!r}",
        f"monotone_link = {'ok' if monotone else 'violated'}",
    ]
    report.extend(_cut_report_lines(m, _parse_gammas(args.gamma)))
    _emit(args.out, _curve_lines("membership", m.thetas, m.values), report, stdout)
    return 0


def cmd_invert(args, stdout) -> int:
    m = build_membership(_load_spec(args.membership), args.grid)
    if args.a2zero:
        if args.r1 is None:
            raise ValidationError("--a2zero requires --r1")
        if args.a1 is not None or args.a2 is not None or args.b1 is not None:
            raise ValidationError("--a2zero uses --r1; do not pass --a1/--a2/--b1")
        res = calibrate_a2zero(args.r1, m)
        prior, params = res.prior, res.params
        report = [
            f"n = {m.n}",
            f"r1 = {res.rates.r1!r}",
            f"r2 = {res.rates.r2!r}",
            f"a1 = {params.a1!r}",
            f"b1 = {params.b1!r}",
            f"b2 = {params.b2!r}",
        ]
    else:
        if args.r1 is not None:
            raise ValidationError("--r1 is only meaningful with --a2zero")
        if args.a1 is None or args.a2 is None or args.b1 is None:
            raise ValidationError("invert requires --a1, --a2 and --b1 (or --a2zero with --r1)")
        cal = calibrate_b2(args.a1, args.a2, args.b1, m)
        params = cal.loss_params
        prior = membership_to_prior(params, m)
        report = [
            f"n = {m.n}",
            f"c1 = {cal.c1!r}",
            f"c2 = {cal.c2!r}",
            f"b1_max = {cal.b1_max!r}",
            f"b2 = {cal.b2!r}",
        ]
    back = prior_to_membership(params, prior)
    sup_err = float(np.max(np.abs(back.values - m.values)))
    rep = uniqueness_report(m)
    report.extend(
        [
            f"min_membership = {rep.min_value!r}",
            f"max_membership = {rep.max_value!r}",
            f"strictly_interior = {rep.strictly_interior}",
            f"zero_measure = {rep.zero_measure!r}",
            f"one_measure = {rep.one_measure!r}",
            f"roundtrip_sup_error = {sup_err!r}",
            f"roundtrip = {'ok' if sup_err <= args.tol else 'exceeds tol'}",
        ]
    )
    _emit(args.out, _curve_lines("prior", prior.thetas, prior.values), report, stdout)
    return 0


def cmd_update(args, stdout) -> int:
    params = LossParams(args.a1, args.a2, args.b1, args.b2)
    m = build_membership(_load_spec(args.membership), args.grid)
    lik = build_likelihood(_load_spec(args.likelihood), args.grid)
    prior = membership_to_prior(params, m)
    evidence = integrate_values(prior.values * lik.values, prior.step)
    updated = prior_to_membership(params, posterior(prior, lik))
    report = [f"n = {m.n}", f"evidence = {evidence!r}"]
    _emit(args.out, _curve_lines("updated_membership", updated.thetas, updated.values), report, stdout)
    return 0


def cmd_cuts(args, stdout) -> int:
    m = build_membership(_load_spec(args.membership), args.grid)
    gammas = _parse_gammas(args.gamma)
    lines = ["gamma,component,lo,hi"]
    counts = []
    for g in gammas:
        cut = gamma_cut(m, g)
        counts.append(f"gamma_cut {float(g)!r}: {cut.n_components} component(s)")
        for k, (a, b) in enumerate(cut.intervals):
            lines.append(f"{_fmt(g)},{k},{_fmt(a)},{_fmt(b)}")
    report = [f"n = {m.n}"] + counts
    _emit(args.out, lines, report, stdout)
    return 0


def cmd_risk(args, stdout) -> int:
    params = LossParams(args.a1, args.a2, args.b1, args.b2)
    prior = build_density(_load_spec(args.prior), args.grid)
    m = build_membership(_load_spec(args.membership), args.grid)
    value = risk(params, m, prior)
    lines = ["quantity,value", f"risk,{_fmt(value)}"]
    report = [f"n = {m.n}"]
    _emit(args.out, lines, report, stdout)
    return 0


def cmd_figure1(args, stdout) -> int:
    res = build_showcase(n=args.grid, export_points=EXPORT_POINTS)
    outdir = Path(args.out) if args.out else Path("figure1")
    outdir.mkdir(parents=True, exist_ok=True)
    written = []

    def _write(name: str, curve_name: str, values) -> None:
        path = outdir / name
        path.write_text(
            "\n".join(_curve_lines(curve_name, res.export_thetas, values)) + "\n",
            newline="\n",
        )
        written.append(name)

    _write("membership.csv", "membership", res.membership_curve)
    for k, case in enumerate(res.cases, start=1):
        _write(f"prior_{k}.csv", f"prior {case.case.label}", case.curve)

    print("label,a1,a2,b1,b1_max,b2,prior_max,prior_argmax", file=stdout)
    for case in res.cases:
        c = case.case
        print(
            f"{c.label},{_fmt(c.a1)},{_fmt(c.a2)},{_fmt(c.b1)},{_fmt(case.b1_max)},"
            f"{_fmt(case.b2)},{_fmt(case.prior_max)},{_fmt(case.prior_argmax)}",
            file=stdout,
        )
    report = [
        f"n = {res.n}",
        f"export_points = {len(res.export_thetas)}",
        f"ranking = {' > '.join(res.ranking)}",
        f"files = {', '.join((outdir / name).as_posix() for name in written)}",
    ]
    for line in report:
        print(f"# {line}", file=stdout)
    return 0


def _add_loss_flags(sub, required=True):
    sub.add_argument("--a1", type=float, required=required, help="linear miss penalty")
    sub.add_argument("--a2", type=float, required=required, help="quadratic miss penalty")
    sub.add_argument("--b1", type=float, required=required, help="linear size penalty")
    sub.add_argument("--b2", type=float, required=required, help="quadratic size penalty")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fuzzyprior", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--grid", type=int, default=DEFAULT_GRID_SIZE, metavar="N",
                        help="default sample count for named families (odd, >= 3)")
    common.add_argument("--out", metavar="PATH", help="write the curve/table here instead of stdout")
    common.add_argument("--tol", type=float, default=1e-6, metavar="X",
                        help="tolerance for the report's self-checks")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("convert", parents=[common],
                       help="prior density -> optimal membership curve + cut report")
    p.add_argument("--prior", required=True, help="function spec (inline JSON or file path)")
    _add_loss_flags(p)
    p.add_argument("--gamma", help="comma-separated cut levels (default 0.1..1.0)")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("invert", parents=[common],
                       help="membership -> calibrated prior curve + calibration report")
    p.add_argument("--membership", required=True, help="function spec (inline JSON or file path)")
    p.add_argument("--a1", type=float, help="linear miss penalty")
    p.add_argument("--a2", type=float, help="quadratic miss penalty")
    p.add_argument("--b1", type=float, help="linear size penalty (must be <= 1/c1)")
    p.add_argument("--a2zero", action="store_true",
                   help="use the linear-miss parametrization driven by --r1")
    p.add_argument("--r1", type=float, help="lower crisp rate for --a2zero")
    p.set_defaults(func=cmd_invert)

    p = sub.add_parser("update", parents=[common],
                       help="membership + likelihood -> updated membership curve")
    p.add_argument("--membership", required=True, help="function spec (inline JSON or file path)")
    p.add_argument("--likelihood", required=True, help="function spec (inline JSON or file path)")
    _add_loss_flags(p)
    p.set_defaults(func=cmd_update)

    p = sub.add_parser("figure1", parents=[common],
                       help="emit the standard demonstration curves and constants table")
    p.set_defaults(func=cmd_figure1)

    p = sub.add_parser("cuts", parents=[common], help="membership -> gamma-cut table")
    p.add_argument("--membership", required=True, help="function spec (inline JSON or file path)")
    p.add_argument("--gamma", help="comma-separated cut levels (default 0.1..1.0)")
    p.set_defaults(func=cmd_cuts)

    p = sub.add_parser("risk", parents=[common],
                       help="expected loss of a membership under a prior")
    p.add_argument("--prior", required=True, help="function spec (inline JSON or file path)")
    p.add_argument("--membership", required=True, help="function spec (inline JSON or file path)")
    _add_loss_flags(p)
    p.set_defaults(func=cmd_risk)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args, sys.stdout)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except NumericalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
