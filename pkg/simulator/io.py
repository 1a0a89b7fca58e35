"""
Simulation output files.

JSONL: a header object then one record per line. CSV: ``# `` plus the header
JSON, a column line, then one row per record. Rows are written in walker-id
then time (or cycle) order, so identical runs give identical bytes.
"""

import csv
import io
import json
from pathlib import Path
from typing import Iterable, List, Tuple, Union

from pydantic import BaseModel, ValidationError

from shared_lib.models import CheckpointRecord, CycleRecord, OutputFormat, RunConfig, RunHeader

from .engines.records import CheckpointTable, CycleTable

COLUMNS = {
    "checkpoint": ["walker_id", "t", "z", "x"],
    "cycle": ["walker_id", "k", "t_k", "z_k", "m", "n", "initial", "truncated"],
}
RECORD_TYPES = {"checkpoint": CheckpointRecord, "cycle": CycleRecord}

Record = Union[CheckpointRecord, CycleRecord]


def make_header(config: RunConfig) -> RunHeader:
    """
    Header for a run, with threads and output normalised (1, None) so the
    header depends only on what determines the records.
    """
    replayable = config.model_copy(update={"threads": 1, "output": None})
    return RunHeader(schema=config.record_schema, config=replayable, seed=config.master_seed)


def _header_json(header: RunHeader) -> str:
    return header.model_dump_json(by_alias=True)


def _records(data: Union[CheckpointTable, CycleTable, Iterable[Record]]) -> List[Record]:
    if isinstance(data, (CheckpointTable, CycleTable)):
        return data.records()
    return list(data)


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def serialize(header: RunHeader, data, fmt: OutputFormat = OutputFormat.JSONL) -> str:
    """Render a header and its records as file text."""
    records = _records(data)
    expected = RECORD_TYPES[header.schema_name]
    if any(not isinstance(r, expected) for r in records):
        raise ValueError(f"records do not match schema {header.schema_name!r}")
    if fmt == OutputFormat.JSONL:
        lines = [_header_json(header)] + [r.model_dump_json() for r in records]
        return "\n".join(lines) + "\n"

    columns = COLUMNS[header.schema_name]
    buffer = io.StringIO()
    buffer.write("# " + _header_json(header) + "\n")
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for record in records:
        writer.writerow([_csv_cell(getattr(record, col)) for col in columns])
    return buffer.getvalue()


def write_output(path: Union[str, Path], header: RunHeader, data,
                 fmt: OutputFormat = OutputFormat.JSONL) -> Path:
    """Write a simulation output file (parent directories are created)."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    text = serialize(header, data, fmt)
    with open(path, "w", encoding="utf-8", newline="") as f:
        f.write(text)
    return path


def _parse_header(text: str, source: str) -> RunHeader:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValueError(f"{source}: header is not valid JSON ({e.msg})") from e
    if not isinstance(obj, dict) or obj.get("type") != "header":
        raise ValueError(f"{source}: first line is not a header object")
    try:
        return RunHeader.model_validate(obj)
    except ValidationError as e:
        raise ValueError(f"{source}: invalid header ({e.error_count()} errors)") from e


def _csv_value(column: str, text: str):
    if text == "":
        return None
    if column in ("initial", "truncated"):
        return text == "true"
    return int(text)


def parse(text: str, source: str = "<text>") -> Tuple[RunHeader, List[Record]]:
    """Parse file text into its header and validated records."""
    lines = text.splitlines()
    if not lines:
        raise ValueError(f"{source}: empty file")
    if lines[0].startswith("# "):
        header = _parse_header(lines[0][2:], source)
        columns = COLUMNS[header.schema_name]
        reader = csv.reader(lines[1:])
        found = next(reader, None)
        if found != columns:
            raise ValueError(f"{source}: schema mismatch, columns {found} != {columns}")
        rows = [dict(zip(columns, (_csv_value(c, v) for c, v in zip(columns, row)))) for row in reader if row]
    else:
        header = _parse_header(lines[0], source)
        rows = []
        for line_no, line in enumerate(lines[1:], start=2):
            if not line.strip():
                continue
            try:
                rows.append(json.loads(line))
            except json.JSONDecodeError as e:
                raise ValueError(f"{source}:{line_no}: invalid JSON ({e.msg})") from e

    model = RECORD_TYPES[header.schema_name]
    try:
        records = [model.model_validate(row) for row in rows]
    except ValidationError as e:
        raise ValueError(f"{source}: row does not match schema {header.schema_name!r}: {e}") from e
    return header, records


def read_output(path: Union[str, Path]) -> Tuple[RunHeader, List[Record]]:
    """Read and validate a simulation output file."""
    path = Path(path)
    with open(path, encoding="utf-8") as f:
        return parse(f.read(), str(path))


def read_table(path: Union[str, Path]) -> Tuple[RunHeader, Union[CheckpointTable, CycleTable]]:
    """read_output with the records converted to a columnar table."""
    header, records = read_output(path)
    if header.schema_name == "cycle":
        return header, CycleTable.from_records(records)
    return header, CheckpointTable.from_records(records)


def write_rows(path: Union[str, Path], rows: List[dict]) -> Path:
    """Write plain dict rows (analysis output) as JSONL."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        for row in rows:
            f.write(json.dumps(row, default=_json_default) + "\n")
    return path


def _json_default(value):
    if isinstance(value, BaseModel):
        return value.model_dump()
    return str(value)


def write_columns(path: Union[str, Path], rows: List[dict]) -> Path:
    """
    Plot-ready whitespace-separated columns with a ``# name ...`` header line.

    Missing values are written as ``nan``.
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    columns = list(rows[0]) if rows else []
    with open(path, "w", encoding="utf-8") as f:
        f.write("# " + " ".join(columns) + "\n")
        for row in rows:
            f.write(" ".join("nan" if row[c] is None else str(row[c]) for c in columns) + "\n")
    return path
