"""Utility functions shared by the simulator, analysis and evaluation packages."""

import json
import math
import sys
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Dict, Iterator, List, Optional


def get_current_timestamp() -> datetime:
    """Get current UTC timestamp."""
    return datetime.now(timezone.utc)


def ensure_log_dir(log_dir: str) -> Path:
    """Ensure log directory exists."""
    log_path = Path(log_dir)
    log_path.mkdir(parents=True, exist_ok=True)
    return log_path


def append_jsonl(file_path: Path, data: Dict[str, Any]) -> None:
    """
    Append a JSON object to a JSONL file.

    Args:
        file_path: Path to the JSONL file
        data: Dictionary to append (will be serialized to JSON)
    """
    ensure_log_dir(file_path.parent)

    with open(file_path, "a", encoding="utf-8") as f:
        json.dump(data, f, ensure_ascii=False, default=str)
        f.write("\n")


def iter_jsonl(file_path: Path) -> Iterator[Dict[str, Any]]:
    """Yield the JSON objects of a JSONL file, skipping blank lines."""
    with open(file_path, encoding="utf-8") as f:
        for line_no, line in enumerate(f, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                yield json.loads(line)
            except json.JSONDecodeError as e:
                raise ValueError(f"{file_path}:{line_no}: invalid JSON ({e.msg})") from e


def log(component: str, message: str) -> None:
    """Print a tagged status line to stderr (stdout carries command output)."""
    print(f"[{component}] {message}", file=sys.stderr, flush=True)


def geometric_schedule(t_max: int, ratio: float, start: int = 1) -> List[int]:
    """
    Integer times start, start*ratio, start*ratio^2, ... up to t_max.

    Points are rounded to the nearest integer and deduplicated, so the grid
    10^2..10^6 with ratio 10^(1/4) has 17 points.
    """
    if ratio <= 1.0:
        raise ValueError(f"geometric ratio must exceed 1, got {ratio}")
    if start < 1:
        raise ValueError(f"schedule start must be >= 1, got {start}")
    log_ratio = math.log10(ratio)
    times: List[int] = []
    i = 0
    while True:
        t = int(round(start * 10 ** (i * log_ratio)))
        if t > t_max:
            break
        if not times or t > times[-1]:
            times.append(t)
        i += 1
    return times


def parse_schedule(descriptor: str, t_max: Optional[int], default_start: int = 100) -> List[int]:
    """
    Expand a checkpoint descriptor into sorted unique times in [1, t_max].

    Accepted forms: ``geometric:RATIO``, ``geometric:RATIO:START`` and
    ``list:T1,T2,...``.
    """
    kind, _, rest = descriptor.partition(":")
    if t_max is None:
        return []
    if kind == "geometric":
        ratio_text, _, start_text = rest.partition(":")
        try:
            ratio = float(ratio_text)
            start = int(start_text) if start_text else min(default_start, t_max)
        except ValueError as e:
            raise ValueError(f"invalid geometric schedule: {descriptor!r}") from e
        return geometric_schedule(t_max, ratio, start)
    if kind == "list":
        try:
            times = sorted({int(item) for item in rest.split(",") if item.strip()})
        except ValueError as e:
            raise ValueError(f"invalid checkpoint list: {descriptor!r}") from e
        if times and (times[0] < 1 or times[-1] > t_max):
            raise ValueError(f"checkpoints must lie in [1, {t_max}]: {descriptor!r}")
        return times
    raise ValueError(f"unknown checkpoint schedule kind: {kind!r}")
