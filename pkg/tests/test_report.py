"""Tests for report rendering."""

import json

from bvh.models import CheckStatus, Command, OutputFormat
from bvh.report import emit_report, report_document
from bvh.schemas import CheckResult, Report


def _sample_report():
    report = Report(command=Command.VERIFY, group="cyclic:4", p=2)
    report.results["summary"] = {"passed": 1, "failed": 1, "skipped": 0}
    report.results["matrix"] = [[1, 0], [0, 1]]
    report.checks = [
        CheckResult(name="ok", status=CheckStatus.PASSED, detail="fine"),
        CheckResult(
            name="broken", status=CheckStatus.FAILED, detail="bad", witness="(1, 2)"
        ),
    ]
    report.passed = False
    return report


def test_empty_report_is_schema_only():
    assert report_document(Report()) == {"schema": "bvh/1"}
    assert json.loads(emit_report(Report(), OutputFormat.JSON)) == {"schema": "bvh/1"}


def test_json_document():
    document = json.loads(emit_report(_sample_report(), OutputFormat.JSON))
    assert document["command"] == "verify"
    assert document["passed"] is False
    assert document["checks"][1]["witness"] == "(1, 2)"
    assert "witness" not in document["checks"][0]
    assert Report.model_validate(document).results == _sample_report().results


def test_output_is_deterministic():
    first = emit_report(_sample_report(), OutputFormat.JSON)
    assert first == emit_report(_sample_report(), OutputFormat.JSON)
    assert first.endswith("}\n")


def test_text_rendering():
    text = emit_report(_sample_report())
    lines = text.splitlines()
    assert lines[:4] == ["schema: bvh/1", "command: verify", "group: cyclic:4", "p: 2"]
    assert "[summary]" in lines
    assert "    1   0" in lines
    assert any(line.startswith("  failed  broken") and "witness: (1, 2)" in line
               for line in lines)
    assert lines[-1] == "passed: False"
