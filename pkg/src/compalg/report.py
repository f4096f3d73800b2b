"""Report assembly and emission.

The JSON document is the source of truth: ``{"entries": [{entry, checks:
[{name, verdict, details}]}], "summary": {...}}`` with sorted keys, so two
identical runs emit byte-identical output.  The text rendering is a stable
table carrying the same information, details included.
"""

from __future__ import annotations

import json

from .catalog import EntryReport


def build_document(reports: list[EntryReport]) -> dict:
    reports = sorted(reports, key=lambda r: r.entry)
    verdicts: dict[str, int] = {}
    for rep in reports:
        for check in rep.checks:
            verdicts[check.verdict] = verdicts.get(check.verdict, 0) + 1
    return {
        "entries": [rep.to_dict() for rep in reports],
        "summary": {
            "entries": len(reports),
            "checks": sum(len(rep.checks) for rep in reports),
            "verdicts": dict(sorted(verdicts.items())),
        },
    }


def render_json(document: dict) -> str:
    return json.dumps(document, sort_keys=True, indent=2) + "\n"


def _details_text(details: dict, indent: str) -> list[str]:
    lines = []
    for key in sorted(details):
        value = details[key]
        lines.append(f"{indent}{key} = {json.dumps(value, sort_keys=True)}")
    return lines


def render_text(document: dict) -> str:
    lines = []
    for entry in document["entries"]:
        lines.append(f"entry {entry['entry']}")
        for check in entry["checks"]:
            lines.append(f"  {check['name']:<46} {check['verdict']}")
            if check["details"]:
                lines.extend(_details_text(check["details"], "      "))
    summary = document["summary"]
    verdict_text = " ".join(f"{k}={v}" for k, v in summary["verdicts"].items())
    lines.append(
        f"summary: {summary['entries']} entries, {summary['checks']} checks | {verdict_text}"
    )
    return "\n".join(lines) + "\n"


def emit_report(document: dict, fmt: str) -> str:
    if fmt == "json":
        return render_json(document)
    if fmt == "text":
        return render_text(document)
    raise ValueError(f"unknown format {fmt!r}")
