"""Report pipeline details not covered by the CLI round trips."""

import io
from fractions import Fraction as F

import pytest

from deltaroots import (
    SolverConfig,
    construct,
    find_roots,
    from_delta,
    resolve_strip,
    solve_parameter,
    validate_delta,
)
from deltaroots.errors import NoConvergenceError
from deltaroots.report import (
    emit_plot_data,
    exit_code,
    process_record,
    reports_to_csv,
    run_batch,
)


def make_payload(delta, checks=("strip",), strip="half", precision=128):
    return {
        "index": 0,
        "record": {"delta": [str(x) for x in delta], "label": "t"},
        "options": {
            "command": "verify",
            "precision_bits": precision,
            "max_iterations": 200,
            "checks": checks,
            "strip": strip,
            "solve": True,
        },
    }


class TestResolveLadder:
    def test_margin_below_first_slack_escalates(self):
        # root at 1 - 1e-21: inside the strip but within the 53-bit slack,
        # so the check must escalate precision instead of guessing
        target = F(1) - F(1, 10**21)
        plan = construct(4, solve_parameter(4, target))
        p = from_delta(plan.delta)
        rs, check = resolve_strip(p, 4, "floor_strip", SolverConfig(precision_bits=53))
        assert check.passed
        assert rs.precision_bits > 53

    def test_no_escalation_when_conclusive(self):
        p = from_delta(validate_delta((1, 7, 1)))
        rs, check = resolve_strip(p, 2, "half_strip", SolverConfig(precision_bits=64))
        assert check.passed
        assert rs.precision_bits == 64


class TestNoConvergence:
    def test_partial_results_attached(self):
        p = from_delta(validate_delta((1, 0, 0, 0, 14, 0, 0, 0, 1)))
        with pytest.raises(NoConvergenceError) as err:
            find_roots(p, SolverConfig(precision_bits=128, max_iterations=2))
        partial = err.value.partial
        assert partial is not None and len(partial.roots) == 8


class TestBatch:
    def test_exit_codes(self):
        ok = {"status": "ok", "passed": True}
        fail = {"status": "ok", "passed": False}
        err = {"status": "error"}
        assert exit_code([ok, ok]) == 0
        assert exit_code([ok, fail]) == 1
        assert exit_code([ok, fail, err]) == 2

    def test_process_record_embeds_errors(self):
        payload = make_payload(["1", "-1", "1"])
        report = process_record(payload)
        assert report["status"] == "error"
        assert "NegativeEntry" in report["error"]

    def test_batch_order_preserved_across_processes(self):
        payload_opts = make_payload(["1", "1"])["options"]
        records = [{"delta": ["1", str(b), "1"], "label": f"r{b}"} for b in range(6)]
        serial = run_batch(records, payload_opts, jobs=1)
        parallel = run_batch(records, payload_opts, jobs=3)
        for a, b in zip(serial, parallel):
            a.pop("elapsed_ms"), b.pop("elapsed_ms")
        assert serial == parallel

    def test_csv_flat_table(self):
        payload = make_payload(["1", "7", "1"])
        report = process_record(payload)
        buf = io.StringIO()
        reports_to_csv([report], buf)
        lines = buf.getvalue().splitlines()
        assert lines[0].startswith("index,label,degree,status,passed")
        assert len(lines) == 3  # header + two roots
        assert lines[1].split(",")[1] == "t"

    def test_plot_rows_include_disk_boundary(self):
        payload = make_payload(["1", "1", "1", "1", "1"], checks=("norm",))
        report = process_record(payload)
        rows = emit_plot_data([report])
        kinds = {r["kind"] for r in rows}
        assert kinds == {"root", "boundary"}
        disk = [r for r in rows if r["label"].startswith("norm_disk")]
        assert len(disk) == 129  # closed circle polyline
