"""Verification suites and report rendering."""

from .suites import SUITES, Budget, CheckList, run_suite
from .report import render_text, render_markdown, to_json, write_report

__all__ = [
    "SUITES",
    "Budget",
    "CheckList",
    "run_suite",
    "render_text",
    "render_markdown",
    "to_json",
    "write_report",
]
