"""End-to-end tests of the command-line entry point."""

import json

import numpy as np
import pytest

from shared_lib.config import get_settings
from shared_lib.models import RunConfig
from simulator.engines.records import CheckpointTable
from simulator.io import make_header, read_output, write_output
from simulator.main import EXIT_FAILED, EXIT_OK, EXIT_USAGE, main


@pytest.fixture(autouse=True)
def isolated_settings(tmp_path, monkeypatch):
    monkeypatch.setenv("LOG_DIR", str(tmp_path / "logs"))
    monkeypatch.setenv("T_SAMPLER_RESOLUTION", "20")
    monkeypatch.setenv("BOOTSTRAP_RESAMPLES", "50")
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


def simulate(*args) -> int:
    return main(["simulate", *map(str, args)])


class TestPredict:

    def test_prints_prediction(self, capsys):
        assert main(["predict", "--gamma", "0.25"]) == EXIT_OK
        prediction = json.loads(capsys.readouterr().out)
        assert prediction["nu"] == pytest.approx(2.0 / 3.0)
        assert prediction["regime"] == "superdiffusive"

    def test_bad_gamma_is_usage_error(self):
        assert main(["predict", "--gamma", "abc"]) == EXIT_USAGE
        assert main(["predict"]) == EXIT_USAGE


class TestSimulate:

    def test_cycles_to_stdout(self, capsys):
        assert simulate("--gamma", 0.25, "--engine", "cycles", "--k-max", 10, "--seed", 1) == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert len(lines) == 11
        assert json.loads(lines[0])["schema"] == "cycle"

    def test_missing_gamma(self):
        assert simulate("--t-max", 100) == EXIT_USAGE

    def test_invalid_horizon(self):
        assert simulate("--gamma", 0.25, "--engine", "direct", "--k-max", 10) == EXIT_USAGE

    def test_repeatable_across_runs_and_threads(self, tmp_path):
        common = ["--gamma", 0.25, "--t-max", 2000, "--walkers", 16, "--seed", 9]
        a, b, c = tmp_path / "a.jsonl", tmp_path / "b.jsonl", tmp_path / "c.jsonl"
        assert simulate(*common, "--out", a) == EXIT_OK
        assert simulate(*common, "--out", b) == EXIT_OK
        assert simulate(*common, "--threads", 2, "--out", c) == EXIT_OK
        assert a.read_bytes() == b.read_bytes() == c.read_bytes()

    def test_replay(self, tmp_path):
        original, replayed = tmp_path / "run.csv", tmp_path / "replay.csv"
        assert simulate("--gamma", 0.5, "--engine", "cycles", "--t-max", 1000, "--walkers", 5,
                        "--format", "csv", "--out", original) == EXIT_OK
        assert simulate("--replay", original, "--out", replayed) == EXIT_OK
        assert original.read_bytes() == replayed.read_bytes()

    def test_scenario_preset(self, tmp_path):
        out = tmp_path / "quick.jsonl"
        assert simulate("--scenario", "quick_direct", "--out", out) == EXIT_OK
        header, records = read_output(out)
        assert header.config.master_seed == 7 and len(records) == 200 * 9

    def test_unwritable_output(self, tmp_path):
        blocker = tmp_path / "file.txt"
        blocker.write_text("x")
        assert simulate("--gamma", 0.0, "--t-max", 1000, "--out", blocker / "sub" / "run.jsonl") == EXIT_USAGE


class TestAnalyze:

    @pytest.fixture
    def run_file(self, tmp_path):
        times = np.array([100, 316, 1000, 3162, 10_000], dtype=np.int64)
        z = np.rint(np.outer(np.linspace(0.5, 2.0, 6), times ** (2.0 / 3.0))).astype(np.int64)
        table = CheckpointTable(walker_id=np.repeat(np.arange(6), times.size), t=np.tile(times, 6), z=z.ravel())
        config = RunConfig(gamma=0.25, t_max=10_000, n_walkers=6,
                           checkpoints="list:" + ",".join(map(str, times)), master_seed=1)
        return write_output(tmp_path / "run.jsonl", make_header(config), table)

    def test_writes_summary_and_data(self, run_file, capsys):
        assert main(["analyze", str(run_file)]) == EXIT_OK
        printed = capsys.readouterr().out.split()
        summary = run_file.with_suffix(".summary.jsonl")
        assert str(summary) in printed
        rows = [json.loads(line) for line in summary.read_text().splitlines()]
        assert [r["type"] for r in rows].count("summary") == 5
        nu = next(r for r in rows if r["type"] == "nu")
        assert nu["nu_hat"] == pytest.approx(2.0 / 3.0, abs=0.01)
        for kind in ("growth", "laplace", "ecdf"):
            assert (run_file.parent / f"run.{kind}.dat").exists()

    def test_cycle_file(self, tmp_path):
        out = tmp_path / "cycles.jsonl"
        assert simulate("--gamma", 0.25, "--engine", "cycles", "--k-max", 20, "--walkers", 4, "--out", out) == EXIT_OK
        assert main(["analyze", str(out), "--data-dir", str(tmp_path / "dat")]) == EXIT_OK
        assert (tmp_path / "dat" / "cycles.cycle_growth.dat").exists()

    def test_missing_input(self, tmp_path):
        assert main(["analyze", str(tmp_path / "absent.jsonl")]) == EXIT_USAGE

    def test_bad_lambda_list(self, run_file):
        assert main(["analyze", str(run_file), "--lambdas", "x,y"]) == EXIT_USAGE


class TestVerify:

    def test_analytic(self, tmp_path, capsys):
        report = tmp_path / "report.md"
        assert main(["verify", "analytic", "--out", str(report)]) == EXIT_OK
        assert "analytic: PASS" in capsys.readouterr().out
        assert report.read_text().startswith("# Verification report")

    def test_failing_suite_exits_one(self, capsys):
        # a vanishing tolerance scale turns every statistical band into an exact match
        code = main(["verify", "analytic", "--tolerance-scale", "1e-30"])
        assert code == EXIT_FAILED
        assert "FAIL" in capsys.readouterr().out

    def test_out_of_range_gamma(self):
        assert main(["verify", "regimes", "--gamma", "1.5"]) == EXIT_USAGE

    def test_unknown_suite(self):
        assert main(["verify", "everything"]) == EXIT_USAGE


class TestJournal:

    def test_one_line_per_run(self, tmp_path):
        main(["predict", "--gamma", "0.5"])
        main(["verify", "regimes", "--gamma", "2"])
        entries = [json.loads(line) for line in (tmp_path / "logs" / "runs.jsonl").read_text().splitlines()]
        assert [e["command"] for e in entries] == ["predict", "verify"]
        assert [e["exit_code"] for e in entries] == [EXIT_OK, EXIT_USAGE]
        assert entries[0]["argv"] == ["predict", "--gamma", "0.5"]

    def test_disabled(self, tmp_path, monkeypatch):
        monkeypatch.setenv("RUN_JOURNAL_ENABLED", "false")
        get_settings.cache_clear()
        main(["predict", "--gamma", "0.5"])
        assert not (tmp_path / "logs" / "runs.jsonl").exists()
