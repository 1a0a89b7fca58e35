"""
Render verification reports.

Text tables for the terminal, Markdown for committed reports, and a JSON dump
that keeps every measured value.
"""

import json
from pathlib import Path
from typing import Iterable, List, Union

from shared_lib.models import SuiteReport


def _fmt(value: float) -> str:
    return f"{value:.6g}"


def render_text(reports: Iterable[SuiteReport]) -> str:
    """One block per suite: a row per check and a PASS/FAIL summary line."""
    lines: List[str] = []
    for report in reports:
        width = max([len(c.name) for c in report.checks] + [5])
        lines.append(f"== {report.suite} ({report.seconds:.1f} s) ==")
        lines.append(f"{'check':<{width}}  {'measured':>12}  {'expected':>12}  {'tolerance':>12}  status")
        for c in report.checks:
            status = "PASS" if c.passed else "FAIL"
            lines.append(
                f"{c.name:<{width}}  {_fmt(c.measured):>12}  {_fmt(c.expected):>12}  "
                f"{_fmt(c.tolerance):>12}  {status}"
            )
            if c.detail:
                lines.append(f"{'':<{width}}    {c.detail}")
        failed = sum(not c.passed for c in report.checks)
        verdict = "PASS" if report.passed else f"FAIL ({failed} of {len(report.checks)} checks)"
        lines.append(f"{report.suite}: {verdict}")
        lines.append("")
    return "\n".join(lines)


def render_markdown(reports: Iterable[SuiteReport]) -> str:
    lines = ["# Verification report", ""]
    for report in reports:
        lines.append(f"## {report.suite} ({'PASS' if report.passed else 'FAIL'}, {report.seconds:.1f} s)")
        lines.append("")
        lines.append("| Check | Measured | Expected | Tolerance | Status | Detail |")
        lines.append("|-------|----------|----------|-----------|--------|--------|")
        for c in report.checks:
            lines.append(
                f"| {c.name} | {_fmt(c.measured)} | {_fmt(c.expected)} | {_fmt(c.tolerance)} "
                f"| {'PASS' if c.passed else 'FAIL'} | {c.detail} |"
            )
        lines.append("")
    return "\n".join(lines)


def to_json(reports: Iterable[SuiteReport]) -> str:
    return json.dumps([r.model_dump() for r in reports], indent=2)


def write_report(path: Union[str, Path], reports: List[SuiteReport]) -> Path:
    """Write reports as Markdown (.md) or JSON (anything else)."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    text = render_markdown(reports) if path.suffix == ".md" else to_json(reports)
    with open(path, "w", encoding="utf-8") as f:
        f.write(text)
    return path
