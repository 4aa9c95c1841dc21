"""Batch command-line front end.

Records stream in as JSON lines ({"delta": ["1", "0", "14", ...]}) or bare
integer CSV, reports stream out as JSON lines (or a flat CSV table), and the
exit code is the batch verdict: 0 all pass, 1 any check failed, 2 any error.
Every flag has a DELTAROOTS_* environment override."""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time
from fractions import Fraction

from . import __version__
from .analysis import quartic_analysis, strip_check
from .catalog import counterexample_deltas, export_catalog, gorenstein_deltas
from .errors import DeltaRootsError, ParseError, TargetOutOfRangeError
from .plotting import render_figure
from .polynomial import from_delta
from .realize import BoundaryRealization, construct, realized_roots_exact, solve_parameter
from .report import (
    emit_plot_data,
    exit_code,
    process_record,
    read_records,
    report_to_json,
    reports_to_csv,
    run_batch,
    write_plot_data,
)
from .roots import SolverConfig, classify_roots, find_roots
from .sampling import random_admissible_point, random_symmetric_delta

ENV_PREFIX = "DELTAROOTS_"


def _env_default(name: str, fallback, cast):
    raw = os.environ.get(ENV_PREFIX + name)
    if raw is None:
        return fallback
    return cast(raw)


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--precision", type=int,
        default=_env_default("PRECISION", 128, int),
        help="working precision in bits (default 128)",
    )
    parser.add_argument(
        "--max-iter", type=int,
        default=_env_default("MAX_ITER", 200, int),
        help="solver iteration cap (default 200)",
    )
    parser.add_argument(
        "--seed", type=int,
        default=_env_default("SEED", 0, int),
        help="random seed for sweep subcommands",
    )
    parser.add_argument(
        "--jobs", type=int,
        default=_env_default("JOBS", 1, int),
        help="worker processes for batch subcommands",
    )
    parser.add_argument("--format", choices=("json", "csv"), default="json")
    parser.add_argument("--output", default="-", help="report destination (default stdout)")
    parser.add_argument("--plot-data", default=None, metavar="FILE",
                        help="also write scatter/boundary rows as TSV")
    parser.add_argument("--figure", default=None, metavar="FILE",
                        help="also render the scatter to an image file")


def _options(args, command: str, checks=(), strip="half", solve=True) -> dict:
    return {
        "command": command,
        "precision_bits": args.precision,
        "max_iterations": args.max_iter,
        "checks": tuple(checks),
        "strip": strip,
        "solve": solve,
    }


def _write_reports(reports: list[dict], args) -> None:
    out = sys.stdout if args.output == "-" else open(args.output, "w")
    try:
        if args.format == "csv":
            reports_to_csv(reports, out)
        else:
            for report in reports:
                out.write(report_to_json(report) + "\n")
    finally:
        if out is not sys.stdout:
            out.close()
    if args.plot_data or args.figure:
        rows = emit_plot_data(reports)
        if args.plot_data:
            with open(args.plot_data, "w") as fh:
                write_plot_data(rows, fh)
        if args.figure:
            render_figure(rows, args.figure)


def _read_input_records(args) -> list[dict]:
    if args.input == "-":
        return read_records(sys.stdin)
    with open(args.input) as fh:
        return read_records(fh)


def _batch_main(args, command: str, checks, solve=True) -> int:
    try:
        records = _read_input_records(args)
    except ParseError as exc:
        print(f"parse error at line {exc.line_number}: {exc}", file=sys.stderr)
        return 2
    options = _options(args, command, checks, getattr(args, "strip", "half"), solve)
    reports = run_batch(records, options, jobs=args.jobs)
    _write_reports(reports, args)
    return exit_code(reports)


def cmd_roots(args) -> int:
    return _batch_main(args, "roots", checks=())


def cmd_verify(args) -> int:
    checks = [c.strip() for c in args.check.split(",") if c.strip()]
    solve = any(c in ("strip", "norm") for c in checks) or not checks
    return _batch_main(args, "verify", checks=checks, solve=solve)


def cmd_counterexample(args) -> int:
    records = [
        {"delta": entry.delta.as_strings(), "label": entry.label}
        for entry in counterexample_deltas()
    ]
    options = _options(args, "counterexample", checks=("strip",), strip="half")
    reports = run_batch(records, options, jobs=args.jobs)
    _write_reports(reports, args)
    return exit_code(reports)


def cmd_catalog(args) -> int:
    if args.export:
        with open(args.export, "w") as fh:
            json.dump(export_catalog(), fh, indent=2)
    entries = gorenstein_deltas(args.dim)
    records = [
        {"delta": entry.delta.as_strings(), "label": entry.label}
        for entry in entries
    ]
    checks = [c.strip() for c in args.check.split(",") if c.strip()] if args.check else []
    options = _options(args, "catalog", checks=checks, strip=args.strip)
    reports = run_batch(records, options, jobs=args.jobs)
    _write_reports(reports, args)
    return exit_code(reports)


def cmd_realize(args) -> int:
    started = time.perf_counter()
    report = {
        "label": f"realize-d{args.d}",
        "command": "realize",
        "target": args.target,
        "precision_bits": args.precision,
        "status": "ok",
        "version": __version__,
    }
    code = 0
    try:
        target = Fraction(args.target)
        solved = solve_parameter(args.d, target)
        if isinstance(solved, BoundaryRealization):
            report["boundary"] = solved.description
            report["delta"] = solved.delta.as_strings()
            rs = classify_roots(
                find_roots(from_delta(solved.delta), SolverConfig(args.precision, args.max_iter)),
                from_delta(solved.delta),
            )
        else:
            plan = construct(args.d, solved)
            pair = realized_roots_exact(plan)
            report["weight"] = str(plan.weight)
            report["delta"] = plan.delta.as_strings()
            report["reduced_quadratic"] = [str(c) for c in plan.reduced_quadratic]
            report["exact_roots"] = {
                "center": str(pair.center),
                "scale": str(pair.scale),
                "radicand": str(pair.radicand),
            }
            rational = pair.rational_pair()
            if rational is not None:
                report["rational_roots"] = [str(r) for r in rational]
            rs = classify_roots(
                find_roots(from_delta(plan.delta), SolverConfig(args.precision, args.max_iter)),
                from_delta(plan.delta),
            )
        report["roots"] = [
            {"re": float(r.re), "im": float(r.im), "real": r.is_real_certified}
            for r in rs.roots
        ]
        report["passed"] = True
    except (TargetOutOfRangeError, DeltaRootsError, ValueError) as exc:
        report["status"] = "error"
        report["error"] = f"{type(exc).__name__}: {exc}"
        code = 2
    report["elapsed_ms"] = round(1000.0 * (time.perf_counter() - started), 3)
    _write_reports([report], args)
    return code


def cmd_quartic(args) -> int:
    started = time.perf_counter()
    report = {
        "label": f"quartic-d{args.d}",
        "command": "quartic",
        "precision_bits": args.precision,
        "status": "ok",
        "version": __version__,
    }
    code = 0
    try:
        qa = quartic_analysis(Fraction(args.b), Fraction(args.c), args.d)
        report.update(
            {
                "b": str(qa.b),
                "c": str(qa.c),
                "d": qa.d,
                "quadratic": [str(x) for x in qa.quadratic_coeffs],
                "discriminant": str(qa.discriminant),
                "region": qa.region,
                "root_modulus": qa.root_modulus,
                "root_real_part": qa.root_real_part,
                "real_part_magnitude": qa.real_part_magnitude,
                "bound": qa.bound,
                "passed": qa.passed,
            }
        )
        if args.cross_check:
            from .analysis import family_delta

            p = from_delta(family_delta(qa.b, qa.c, args.d))
            rs = find_roots(p, SolverConfig(args.precision, args.max_iter))
            check = strip_check(rs, args.d, "half_strip", p)
            report["cross_check_passed"] = check.passed
            report["agrees"] = check.passed == qa.passed
            if not report["agrees"]:
                report["passed"] = False
        code = 0 if report["passed"] else 1
    except (DeltaRootsError, ValueError) as exc:
        report["status"] = "error"
        report["error"] = f"{type(exc).__name__}: {exc}"
        code = 2
    report["elapsed_ms"] = round(1000.0 * (time.perf_counter() - started), 3)
    _write_reports([report], args)
    return code


def cmd_sweep(args) -> int:
    rng = random.Random(args.seed)
    if args.family == "quartic":
        started = time.perf_counter()
        agrees = 0
        failures = []
        for _ in range(args.count):
            b, c = random_admissible_point(rng, args.d, c_cap=args.c_cap)
            qa = quartic_analysis(b, c, args.d)
            entry_ok = qa.passed and qa.region.endswith("complex_regime")
            if args.cross_check:
                from .analysis import family_delta

                p = from_delta(family_delta(b, c, args.d))
                rs = find_roots(p, SolverConfig(args.precision, args.max_iter))
                check = strip_check(rs, args.d, "half_strip", p)
                entry_ok = entry_ok and (check.passed == qa.passed)
            if entry_ok:
                agrees += 1
            else:
                failures.append({"b": str(b), "c": str(c)})
        report = {
            "label": f"sweep-quartic-d{args.d}",
            "command": "sweep",
            "count": args.count,
            "seed": args.seed,
            "agreed": agrees,
            "failures": failures[:20],
            "passed": not failures,
            "status": "ok",
            "version": __version__,
            "elapsed_ms": round(1000.0 * (time.perf_counter() - started), 3),
        }
        _write_reports([report], args)
        return 0 if report["passed"] else 1

    records = []
    for i in range(args.count):
        degree = rng.randint(2, args.max_degree)
        v = random_symmetric_delta(rng, degree, allow_zero_head=args.allow_zero_head)
        records.append({"delta": v.as_strings(), "label": f"sweep{i}"})
    options = _options(args, "sweep", checks=("real-strip", "funceq"), solve=False)
    reports = run_batch(records, options, jobs=args.jobs)
    _write_reports(reports, args)
    return exit_code(reports)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="deltaroots",
        description="Solve and certify roots of delta-vector polynomials in batch.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p_roots = sub.add_parser("roots", help="locate all roots for each input record")
    p_roots.add_argument("--input", default="-", help="records file (default stdin)")
    _add_common(p_roots)
    p_roots.set_defaults(func=cmd_roots)

    p_verify = sub.add_parser("verify", help="run checks against each input record")
    p_verify.add_argument("--input", default="-")
    p_verify.add_argument(
        "--check", default="strip",
        help="comma list of strip,norm,funceq,real-strip (default strip)",
    )
    p_verify.add_argument("--strip", choices=("half", "full", "floor"), default="half")
    _add_common(p_verify)
    p_verify.set_defaults(func=cmd_verify)

    p_cat = sub.add_parser("catalog", help="run the built-in low-dimension catalogs")
    p_cat.add_argument("--dim", type=int, required=True, choices=(2, 3))
    p_cat.add_argument("--check", default="strip")
    p_cat.add_argument("--strip", choices=("half", "full", "floor"), default="half")
    p_cat.add_argument("--export", default=None, metavar="FILE",
                       help="write the versioned catalog JSON here")
    _add_common(p_cat)
    p_cat.set_defaults(func=cmd_catalog)

    p_counter = sub.add_parser(
        "counterexample", help="run the half-strip check on the built-in violators"
    )
    _add_common(p_counter)
    p_counter.set_defaults(func=cmd_counterexample)

    p_real = sub.add_parser("realize", help="hit a target real root exactly")
    p_real.add_argument("--d", type=int, required=True)
    p_real.add_argument("--target", required=True, help="rational target, e.g. -6/5")
    _add_common(p_real)
    p_real.set_defaults(func=cmd_realize)

    p_quartic = sub.add_parser("quartic", help="discriminant-region analysis at d=4 or 5")
    p_quartic.add_argument("--d", type=int, required=True, choices=(4, 5))
    p_quartic.add_argument("--b", required=True)
    p_quartic.add_argument("--c", required=True)
    p_quartic.add_argument("--cross-check", action="store_true")
    _add_common(p_quartic)
    p_quartic.set_defaults(func=cmd_quartic)

    p_sweep = sub.add_parser("sweep", help="randomized grid sweeps")
    p_sweep.add_argument("--family", choices=("quartic", "delta"), default="delta")
    p_sweep.add_argument("--d", type=int, default=4, choices=(4, 5),
                         help="family degree for --family quartic")
    p_sweep.add_argument("--count", type=int, default=100)
    p_sweep.add_argument("--max-degree", type=int, default=10)
    p_sweep.add_argument("--c-cap", type=float, default=250.0)
    p_sweep.add_argument("--cross-check", action="store_true")
    p_sweep.add_argument("--allow-zero-head", action="store_true")
    _add_common(p_sweep)
    p_sweep.set_defaults(func=cmd_sweep)

    return parser


_NEGATIVE_VALUE_FLAGS = ("--target", "--b", "--c")


def _merge_negative_values(argv: list[str]) -> list[str]:
    """Let `--target -6/5` parse: argparse reads bare '-6/5' as a flag."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _NEGATIVE_VALUE_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    args = build_parser().parse_args(_merge_negative_values(list(argv)))
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
