"""Batch report pipeline: records in, verdict reports out.

A record is a small dict ({"delta": [...], "label": ...}); processing one
record never throws, errors are embedded in the report so a bad line cannot
kill a batch.  Reports are plain dicts ready for JSON lines or CSV, and the
whole pipeline is deterministic for a fixed input and configuration (timing
fields excluded)."""

from __future__ import annotations

import concurrent.futures
import json
import math
import time
from fractions import Fraction

from . import __version__
from .analysis import BoundCheck, norm_check, resolve_strip, strip_check
from .errors import DeltaRootsError, InconclusiveCheckError, ParseError
from .polynomial import check_functional_equation, from_delta, validate_delta
from .roots import RootSet, SolverConfig, classify_roots, find_roots
from .sturm import certify_real_strip

STRIP_NAMES = {"half": "half_strip", "full": "full_strip", "floor": "floor_strip"}


def parse_record(line: str, line_number: int) -> dict:
    """One input record: a JSON object {"delta": [...]} with entries as
    'p/q' strings, or a bare comma-separated integer vector."""
    text = line.strip()
    if not text:
        raise ParseError("empty record", line_number)
    if text.startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad JSON: {exc}", line_number) from exc
        if not isinstance(obj, dict) or "delta" not in obj:
            raise ParseError("record needs a 'delta' field", line_number)
        entries = [str(e) for e in obj["delta"]]
        label = str(obj.get("label", f"line{line_number}"))
        return {"delta": entries, "label": label}
    try:
        entries = [str(int(part)) for part in text.split(",")]
    except ValueError as exc:
        raise ParseError(f"bad integer vector: {exc}", line_number) from exc
    return {"delta": entries, "label": f"line{line_number}"}


def read_records(lines) -> list[dict]:
    records = []
    for i, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        records.append(parse_record(line, i))
    return records


def _root_dict(root) -> dict:
    return {
        "re": float(root.re),
        "im": float(root.im),
        "residual": root.residual,
        "error_radius": root.error_radius,
        "real": root.is_real_certified,
    }


def _check_dict(check: BoundCheck) -> dict:
    out = {
        "kind": check.kind,
        "passed": check.passed,
        "lower": None if check.lower is None else str(check.lower),
        "upper": None if check.upper is None else str(check.upper),
        "radius": None if check.radius is None else str(check.radius),
        "margins": list(check.margins),
        "violators": [
            {"re": float(r.re), "im": float(r.im)} for r in check.violators
        ],
    }
    if check.note:
        out["note"] = check.note
    return out


def process_record(payload: dict) -> dict:
    """Worker for one record; top-level so it pickles into process pools."""
    record = payload["record"]
    options = payload["options"]
    started = time.perf_counter()
    report = {
        "index": payload["index"],
        "label": record.get("label", ""),
        "command": options["command"],
        "input": {"delta": record["delta"]},
        "precision_bits": options["precision_bits"],
        "status": "ok",
        "version": __version__,
    }
    try:
        v = validate_delta(record["delta"])
        p = from_delta(v)
        report["degree"] = v.degree
        report["symmetric"] = v.is_symmetric
        cfg = SolverConfig(
            precision_bits=options["precision_bits"],
            max_iterations=options["max_iterations"],
        )
        checks = []
        rs: RootSet | None = None
        if options.get("solve", True):
            rs = classify_roots(find_roots(p, cfg), p)
        for name in options.get("checks", ()):
            if name == "strip":
                kind = STRIP_NAMES[options.get("strip", "half")]
                try:
                    checks.append(strip_check(rs, v.degree, kind, p))
                except InconclusiveCheckError:
                    rs, check = resolve_strip(p, v.degree, kind, cfg)
                    checks.append(check)
            elif name == "norm":
                checks.append(norm_check(rs, v.degree))
            elif name == "funceq":
                ok = check_functional_equation(p)
                checks.append(
                    BoundCheck(
                        kind="functional_equation",
                        lower=None, upper=None, radius=None,
                        margins=(), passed=ok, violators=(),
                    )
                )
            elif name == "real-strip":
                cert = certify_real_strip(v)
                checks.append(
                    BoundCheck(
                        kind="real_strip",
                        lower=cert.lower, upper=cert.upper, radius=None,
                        margins=(), passed=cert.passed, violators=(),
                        note=f"exact count outside: {cert.outside_count}",
                    )
                )
            else:
                raise DeltaRootsError(f"unknown check {name!r}")
        if rs is not None:
            report["roots"] = [_root_dict(r) for r in rs.roots]
        report["checks"] = [_check_dict(c) for c in checks]
        report["passed"] = all(c.passed for c in checks)
    except DeltaRootsError as exc:
        report["status"] = "error"
        report["error"] = f"{type(exc).__name__}: {exc}"
    report["elapsed_ms"] = round(1000.0 * (time.perf_counter() - started), 3)
    return report


def run_batch(records: list[dict], options: dict, jobs: int = 1) -> list[dict]:
    """Process records in order; `jobs` > 1 fans out to worker processes
    (results re-assemble in input order)."""
    payloads = [
        {"index": i, "record": rec, "options": options}
        for i, rec in enumerate(records)
    ]
    if jobs <= 1:
        return [process_record(p) for p in payloads]
    with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(process_record, payloads, chunksize=4))


def exit_code(reports: list[dict]) -> int:
    """0 all checks pass, 1 any check failed, 2 any record errored."""
    if any(r.get("status") != "ok" for r in reports):
        return 2
    if any(not r.get("passed", True) for r in reports):
        return 1
    return 0


# -- plot data ----------------------------------------------------------------

_DISK_SAMPLES = 128


def emit_plot_data(reports: list[dict]) -> list[dict]:
    """Scatter rows (kind, label, re, im) for every root in the reports plus
    one polyline per distinct check boundary.  Plain rows, no rendering."""
    rows: list[dict] = []
    max_im = 1.0
    for report in reports:
        for root in report.get("roots", ()):
            max_im = max(max_im, abs(root["im"]))
    span = 1.1 * max_im
    seen_boundaries = set()
    for report in reports:
        label = report.get("label", "")
        for root in report.get("roots", ()):
            rows.append(
                {"kind": "root", "label": label, "re": root["re"], "im": root["im"]}
            )
        for check in report.get("checks", ()):
            kind = check["kind"]
            if kind.endswith("_strip") and check.get("lower") is not None:
                for side in ("lower", "upper"):
                    x = float(Fraction(check[side]))
                    key = (kind, side, x)
                    if key in seen_boundaries:
                        continue
                    seen_boundaries.add(key)
                    boundary_label = f"{kind}.{side}@{check[side]}"
                    rows.append(
                        {"kind": "boundary", "label": boundary_label, "re": x, "im": -span}
                    )
                    rows.append(
                        {"kind": "boundary", "label": boundary_label, "re": x, "im": span}
                    )
            elif kind == "norm_disk" and check.get("radius") is not None:
                radius = float(Fraction(check["radius"]))
                key = (kind, radius)
                if key in seen_boundaries:
                    continue
                seen_boundaries.add(key)
                boundary_label = f"norm_disk@{check['radius']}"
                for i in range(_DISK_SAMPLES + 1):
                    theta = 2.0 * math.pi * i / _DISK_SAMPLES
                    rows.append(
                        {
                            "kind": "boundary",
                            "label": boundary_label,
                            "re": -0.5 + radius * math.cos(theta),
                            "im": radius * math.sin(theta),
                        }
                    )
    return rows


def write_plot_data(rows: list[dict], fh) -> None:
    fh.write("kind\tlabel\tre\tim\n")
    for row in rows:
        fh.write(f"{row['kind']}\t{row['label']}\t{row['re']!r}\t{row['im']!r}\n")


def report_to_json(report: dict) -> str:
    return json.dumps(report, separators=(",", ":"))


CSV_COLUMNS = (
    "index",
    "label",
    "degree",
    "status",
    "passed",
    "re",
    "im",
    "residual",
    "error_radius",
    "real",
)


def reports_to_csv(reports: list[dict], fh) -> None:
    """Flat per-root table; reports without roots emit one row with the
    root columns empty."""
    fh.write(",".join(CSV_COLUMNS) + "\n")
    for report in reports:
        base = [
            str(report.get("index", "")),
            str(report.get("label", "")),
            str(report.get("degree", "")),
            report.get("status", ""),
            str(report.get("passed", "")),
        ]
        roots = report.get("roots", [])
        if not roots:
            fh.write(",".join(base + [""] * 5) + "\n")
            continue
        for root in roots:
            fh.write(
                ",".join(
                    base
                    + [
                        repr(root["re"]),
                        repr(root["im"]),
                        repr(root["residual"]),
                        repr(root["error_radius"]),
                        str(root["real"]),
                    ]
                )
                + "\n"
            )
