"""Tests for the output file formats."""

import json

import numpy as np
import pytest

from shared_lib.models import CheckpointRecord, CycleRecord, OutputFormat, RunConfig
from simulator.engines.records import CheckpointTable, CycleTable
from simulator.ensemble import run_config
from simulator.io import (
    COLUMNS,
    make_header,
    parse,
    read_output,
    read_table,
    serialize,
    write_columns,
    write_output,
    write_rows,
)


@pytest.fixture
def direct_config() -> RunConfig:
    return RunConfig(gamma=0.25, t_max=1000, n_walkers=3, checkpoints="list:10,100,1000", master_seed=11)


@pytest.fixture
def cycle_config() -> RunConfig:
    return RunConfig(gamma=0.25, engine="cycles", k_max=5, n_walkers=2, master_seed=11)


class TestHeader:

    def test_execution_details_are_normalised(self, direct_config):
        config = direct_config.model_copy(update={"threads": 4, "output": "somewhere.jsonl"})
        header = make_header(config)
        assert header.config.threads == 1 and header.config.output is None
        assert header.schema_name == "checkpoint" and header.seed == 11
        assert make_header(direct_config) == header

    def test_cycle_schema(self, cycle_config):
        assert make_header(cycle_config).schema_name == "cycle"


class TestJsonl:

    def test_layout_and_parse(self, direct_config):
        table = run_config(direct_config)
        text = serialize(make_header(direct_config), table)
        lines = text.splitlines()
        assert json.loads(lines[0])["type"] == "header"
        assert json.loads(lines[0])["schema"] == "checkpoint"
        assert len(lines) == 1 + 9
        header, records = parse(text)
        assert header == make_header(direct_config)
        assert records == table.records()

    def test_schema_mismatch_on_write(self, direct_config):
        record = CycleRecord(k=1, t_k=2, z_k=2, m=0, n=1, initial=True)
        with pytest.raises(ValueError):
            serialize(make_header(direct_config), [record])

    def test_parse_errors(self, direct_config):
        header_line = make_header(direct_config).model_dump_json(by_alias=True)
        with pytest.raises(ValueError, match="empty"):
            parse("")
        with pytest.raises(ValueError, match="header"):
            parse('{"walker_id": 0, "t": 1, "z": 1}\n')
        with pytest.raises(ValueError, match="invalid JSON"):
            parse(header_line + "\n{not json}\n")
        with pytest.raises(ValueError, match="schema"):
            parse(header_line + '\n{"walker_id": 0, "k": 1}\n')

    def test_records_are_validated(self, direct_config):
        header_line = make_header(direct_config).model_dump_json(by_alias=True)
        with pytest.raises(ValueError):
            parse(header_line + '\n{"walker_id": 0, "t": 5, "z": 9, "x": 1}\n')


class TestCsv:

    def test_layout_and_parse(self, cycle_config):
        table = run_config(cycle_config)
        text = serialize(make_header(cycle_config), table, OutputFormat.CSV)
        lines = text.splitlines()
        assert lines[0].startswith("# {")
        assert lines[1] == ",".join(COLUMNS["cycle"])
        assert lines[2].endswith(",true,false")
        header, records = parse(text)
        assert header.schema_name == "cycle"
        assert records == table.records()

    def test_missing_positions(self):
        config = RunConfig(gamma=0.25, engine="cycles", t_max=100, n_walkers=2,
                           checkpoints="list:10,100", master_seed=1)
        table = run_config(config)
        assert table.x is None
        _, records = parse(serialize(make_header(config), table, OutputFormat.CSV))
        assert all(r.x is None for r in records)

    def test_column_mismatch(self, direct_config):
        text = "# " + make_header(direct_config).model_dump_json(by_alias=True) + "\nwalker_id,t,z\n0,1,1\n"
        with pytest.raises(ValueError, match="schema mismatch"):
            parse(text)


class TestFiles:

    def test_write_and_read(self, tmp_path, cycle_config):
        table = run_config(cycle_config)
        path = write_output(tmp_path / "nested" / "run.jsonl", make_header(cycle_config), table)
        header, records = read_output(path)
        assert len(records) == 10
        header, loaded = read_table(path)
        assert isinstance(loaded, CycleTable)
        assert np.array_equal(loaded.z_k, table.z_k)

    def test_checkpoint_table_from_file(self, tmp_path, direct_config):
        path = write_output(tmp_path / "run.csv", make_header(direct_config), run_config(direct_config),
                            OutputFormat.CSV)
        _, loaded = read_table(path)
        assert isinstance(loaded, CheckpointTable)
        assert loaded.times().tolist() == [10, 100, 1000]

    def test_rows_and_columns(self, tmp_path):
        rows = [{"k": 1, "value": 0.5, "predicted": None}, {"k": 2, "value": 0.25, "predicted": 0.3}]
        jsonl = write_rows(tmp_path / "rows.jsonl", rows)
        assert [json.loads(line) for line in jsonl.read_text().splitlines()] == rows
        dat = write_columns(tmp_path / "rows.dat", rows)
        assert dat.read_text().splitlines() == ["# k value predicted", "1 0.5 nan", "2 0.25 0.3"]

    def test_checkpoint_record_bounds(self):
        with pytest.raises(ValueError):
            CheckpointRecord(walker_id=0, t=3, z=2, x=-3)
