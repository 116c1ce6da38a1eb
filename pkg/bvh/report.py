"""Rendering of report envelopes as JSON or plain-text tables."""

import json
from typing import Any

from bvh.models import CheckStatus, OutputFormat
from bvh.schemas import Report


def report_document(report: Report) -> dict[str, Any]:
    """JSON-ready dict; an empty report is just its schema tag."""
    if report.command is None and not report.results and not report.checks:
        return {"schema": report.schema_version}
    return report.model_dump(mode="json", by_alias=True, exclude_none=True)


def _text_value(value: Any, indent: str) -> list[str]:
    if isinstance(value, dict):
        lines = []
        for key, item in value.items():
            if isinstance(item, (dict, list)) and item and not _is_flat(item):
                lines.append(f"{indent}{key}:")
                lines.extend(_text_value(item, indent + "  "))
            else:
                lines.append(f"{indent}{key}: {_inline(item)}")
        return lines
    if isinstance(value, list):
        if value and all(isinstance(row, list) for row in value):
            return [indent + " ".join(f"{a:>3}" for a in row) for row in value]
        lines = []
        for item in value:
            if isinstance(item, dict):
                lines.append(f"{indent}-")
                lines.extend(_text_value(item, indent + "  "))
            else:
                lines.append(f"{indent}- {_inline(item)}")
        return lines
    return [f"{indent}{_inline(value)}"]


def _is_flat(value: Any) -> bool:
    items = value.values() if isinstance(value, dict) else value
    return all(not isinstance(item, (dict, list)) for item in items)


def _inline(value: Any) -> str:
    if isinstance(value, list):
        return "[" + ", ".join(_inline(v) for v in value) + "]"
    if isinstance(value, dict):
        return "{" + ", ".join(f"{k}: {_inline(v)}" for k, v in value.items()) + "}"
    return str(value)


def _text(report: Report) -> str:
    document = report_document(report)
    header = [f"schema: {document['schema']}"]
    for key in ("command", "group", "p"):
        if key in document:
            header.append(f"{key}: {document[key]}")
    lines = header
    for key, value in document.get("results", {}).items():
        lines.append("")
        lines.append(f"[{key}]")
        lines.extend(_text_value(value, "  "))
    checks = report.checks
    if checks:
        width = max(len(c.name) for c in checks)
        lines.append("")
        lines.append("[checks]")
        for c in checks:
            line = f"  {c.status.value:<7} {c.name:<{width}}  {c.detail}"
            if c.witness and c.status is CheckStatus.FAILED:
                line += f"  witness: {c.witness}"
            lines.append(line.rstrip())
    if "passed" in document and document.get("command"):
        lines.append("")
        lines.append(f"passed: {document['passed']}")
    return "\n".join(lines) + "\n"


def emit_report(report: Report, output_format: OutputFormat = OutputFormat.TEXT) -> str:
    """Deterministic rendering: sorted keys and fixed indentation for JSON."""
    if output_format is OutputFormat.JSON:
        return json.dumps(report_document(report), sort_keys=True, indent=2,
                          ensure_ascii=False) + "\n"
    return _text(report)
