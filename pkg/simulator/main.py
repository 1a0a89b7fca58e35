"""
Command-line entry point: predict, simulate, analyze and verify.

Exit codes: 0 success, 1 verification failure, 2 usage, configuration,
input or output error. Status lines go to stderr, results to stdout.
"""

import argparse
import sys
import time
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

# Add project root to path so the sibling packages import from any cwd
_project_root = Path(__file__).parent.parent
if str(_project_root) not in sys.path:
    sys.path.insert(0, str(_project_root))

# Load .env from project root so settings are found regardless of cwd
try:
    from dotenv import load_dotenv
    _env_path = _project_root / ".env"
    if _env_path.exists():
        load_dotenv(_env_path)
except Exception:
    pass

from shared_lib.config import get_settings
from shared_lib.models import Engine, OutputFormat, RunConfig
from shared_lib.rng import BOOTSTRAP_STREAMS, stream
from shared_lib.utils import append_jsonl, ensure_log_dir, get_current_timestamp, log

from analysis.scaling import MIN_CHECKPOINTS, estimate_nu_from_table
from analysis.summary import (
    DEFAULT_LAMBDAS,
    DEFAULT_QS,
    cycle_growth,
    cycle_laplace,
    ecdf_table,
    growth_curve,
    laplace_table,
    summarize_ensemble,
)
from evaluation.report import render_text, write_report
from evaluation.suites import SUITES, Budget, run_suite

from .engines.records import CycleTable
from .io import make_header, read_output, read_table, serialize, write_columns, write_rows
from .models.step_model import predict_regime
from .scenarios import ScenarioExecutor, ScenarioLoader

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

# Seed id of the bootstrap behind nu-hat in analyze
_NU_BOOTSTRAP = 10_000


class CliError(Exception):
    """Usage or configuration problem detected after argument parsing."""


def _float_list(text: str) -> List[float]:
    try:
        values = [float(item) for item in text.split(",") if item.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated list of numbers, got {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("list must not be empty")
    return values


# ============================================================================
# predict
# ============================================================================

def cmd_predict(args: argparse.Namespace) -> int:
    prediction = predict_regime(args.gamma)
    print(prediction.model_dump_json())
    return EXIT_OK


# ============================================================================
# simulate
# ============================================================================

def _config_from_flags(args: argparse.Namespace) -> RunConfig:
    settings = get_settings()
    if args.gamma is None:
        raise CliError("--gamma is required (or use --scenario / --replay)")
    checkpoints = args.checkpoints or f"geometric:{settings.checkpoint_ratio!r}:{settings.checkpoint_start}"
    return RunConfig(
        gamma=args.gamma,
        engine=args.engine,
        t_max=args.t_max,
        k_max=args.k_max,
        n_walkers=args.walkers,
        checkpoints=checkpoints,
        master_seed=settings.default_seed if args.seed is None else args.seed,
        threads=args.threads or settings.default_threads,
        output=args.out,
        format=args.format or OutputFormat.JSONL,
    )


def _simulation_config(args: argparse.Namespace) -> RunConfig:
    if args.replay and args.scenario:
        raise CliError("--replay and --scenario are mutually exclusive")
    if args.replay:
        header, _ = read_output(args.replay)
        update: Dict[str, Any] = {"output": args.out, "threads": args.threads or get_settings().default_threads}
        if args.format:
            update["format"] = OutputFormat(args.format)
        return header.config.model_copy(update=update)
    if args.scenario:
        scenario = ScenarioLoader.load_from_file(args.scenario)
        config = ScenarioLoader.to_config(scenario, threads=args.threads, output=args.out)
        return config.model_copy(update={"format": OutputFormat(args.format)}) if args.format else config
    return _config_from_flags(args)


def cmd_simulate(args: argparse.Namespace, journal: Dict[str, Any]) -> int:
    config = _simulation_config(args)
    journal["config"] = config.model_dump(mode="json")
    name = Path(args.scenario).stem if args.scenario else "run"
    executor = ScenarioExecutor(config, name=name)
    if config.output:
        path = executor.write(config.output)
        journal["output"] = str(path)
        log("Simulator", f"wrote {len(executor.result)} records to {path} in {executor.seconds:.1f} s")
    else:
        result = executor.run()
        sys.stdout.write(serialize(make_header(config), result, config.format))
    return EXIT_OK


# ============================================================================
# analyze
# ============================================================================

def _analyze_checkpoints(table, header, args: argparse.Namespace) -> tuple:
    gamma = header.config.gamma
    summaries = summarize_ensemble(table, gamma, args.lambdas, args.q, seed=header.seed)
    rows: List[dict] = [{"type": "summary", **s.model_dump()} for s in summaries]
    times = table.times()
    try:
        nu = estimate_nu_from_table(table, rng=stream(header.seed, _NU_BOOTSTRAP, BOOTSTRAP_STREAMS))
        rows.append({"type": "nu", **nu.model_dump(), "predicted": predict_regime(gamma).nu})
    except ValueError as e:
        log("Analyze", f"nu-hat skipped ({len(times)} checkpoints, need >= {MIN_CHECKPOINTS} over a decade): {e}")
    data = {
        "growth": growth_curve(summaries),
        "laplace": laplace_table(summaries),
        "ecdf": [row for s in summaries[-1:] for row in ecdf_table(s)],
    }
    return rows, data


def _analyze_cycles(table: CycleTable, header, args: argparse.Namespace) -> tuple:
    gamma = header.config.gamma
    growth = cycle_growth(table, gamma)
    laplace = cycle_laplace(table, gamma, args.lambdas)
    rows = [{"type": "cycle_growth", **row} for row in growth] + [{"type": "cycle_laplace", **row} for row in laplace]
    return rows, {"cycle_growth": growth, "cycle_laplace": laplace}


def cmd_analyze(args: argparse.Namespace, journal: Dict[str, Any]) -> int:
    outputs = []
    for source in args.inputs:
        header, table = read_table(source)
        log("Analyze", f"{source}: {header.schema_name} file, gamma={header.config.gamma}, {len(table)} records")
        if isinstance(table, CycleTable):
            rows, data = _analyze_cycles(table, header, args)
        else:
            rows, data = _analyze_checkpoints(table, header, args)
        rows = [{"source": str(source), **row} for row in rows]

        source_path = Path(source)
        if args.out and len(args.inputs) == 1:
            target = Path(args.out)
        elif args.out:
            target = Path(args.out) / f"{source_path.stem}.summary.jsonl"
        else:
            target = source_path.with_suffix(".summary.jsonl")
        outputs.append(str(write_rows(target, rows)))

        data_dir = Path(args.data_dir) if args.data_dir else target.parent
        for kind, data_rows in data.items():
            if data_rows:
                outputs.append(str(write_columns(data_dir / f"{source_path.stem}.{kind}.dat", data_rows)))
        log("Analyze", f"{source}: wrote {target}")
    journal["output"] = outputs
    print("\n".join(outputs))
    return EXIT_OK


# ============================================================================
# verify
# ============================================================================

def cmd_verify(args: argparse.Namespace, journal: Dict[str, Any]) -> int:
    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    budget = Budget.from_settings(
        samples=args.samples,
        large_samples=args.large_samples,
        walkers=args.walkers,
        t_max=args.t_max,
        k_max=args.k_max,
        cycle_replicas=args.replicas,
        equivalence_samples=args.equivalence_samples,
        equivalence_t=args.equivalence_t,
        tolerance_scale=args.tolerance_scale,
        threads=args.threads,
        seed=args.seed,
    )
    reports = []
    for name in names:
        log("Verify", f"running {name} suite")
        report = run_suite(name, budget, args.gamma)
        log("Verify", f"{name}: {'PASS' if report.passed else 'FAIL'} in {report.seconds:.1f} s")
        reports.append(report)
    print(render_text(reports))
    if args.out:
        journal["output"] = str(write_report(args.out, reports))
    journal["passed"] = all(r.passed for r in reports)
    return EXIT_OK if journal["passed"] else EXIT_FAILED


# ============================================================================
# Argument parsing and dispatch
# ============================================================================

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="boldwalk",
        description="Simulate and verify random walks that step outward from their running maximum.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("predict", help="Print nu, regime and limit law for gamma")
    p.add_argument("--gamma", type=float, required=True)

    p = sub.add_parser("simulate", help="Simulate an ensemble and write its records")
    p.add_argument("--gamma", type=float)
    p.add_argument("--engine", choices=[e.value for e in Engine], default=Engine.DIRECT.value)
    p.add_argument("--t-max", type=int)
    p.add_argument("--k-max", type=int)
    p.add_argument("--walkers", type=int, default=1)
    p.add_argument("--seed", type=int)
    p.add_argument("--checkpoints", help="geometric:RATIO[:START] or list:T1,T2,...")
    p.add_argument("--threads", type=int)
    p.add_argument("--out", help="Output path (stdout when omitted)")
    p.add_argument("--format", choices=[f.value for f in OutputFormat])
    p.add_argument("--scenario", help="Scenario JSON file or bundled preset name")
    p.add_argument("--replay", help="Re-run the configuration stored in an output file")

    p = sub.add_parser("analyze", help="Summarize simulation output files")
    p.add_argument("inputs", nargs="+")
    p.add_argument("--lambdas", type=_float_list, default=list(DEFAULT_LAMBDAS))
    p.add_argument("--q", type=_float_list, default=list(DEFAULT_QS))
    p.add_argument("--out", help="Summary file (one input) or directory (several)")
    p.add_argument("--data-dir", help="Directory for plot-ready .dat files")

    p = sub.add_parser("verify", help="Run verification suites")
    p.add_argument("suite", choices=sorted(SUITES) + ["all"])
    p.add_argument("--gamma", type=float)
    p.add_argument("--samples", type=int)
    p.add_argument("--large-samples", type=int)
    p.add_argument("--walkers", type=int)
    p.add_argument("--t-max", type=int)
    p.add_argument("--k-max", type=int)
    p.add_argument("--replicas", type=int, help="Cycle replicas for k-bounded checks")
    p.add_argument("--equivalence-samples", type=int)
    p.add_argument("--equivalence-t", type=int)
    p.add_argument("--threads", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--tolerance-scale", type=float)
    p.add_argument("--out", help="Report file (.md or .json)")
    return parser


_COMMANDS = {"simulate": cmd_simulate, "analyze": cmd_analyze, "verify": cmd_verify}
_COMPONENTS = {"predict": "Predict", "simulate": "Simulator", "analyze": "Analyze", "verify": "Verify"}


def _write_journal(entry: Dict[str, Any]) -> None:
    settings = get_settings()
    if not settings.run_journal_enabled:
        return
    try:
        append_jsonl(ensure_log_dir(settings.log_dir) / "runs.jsonl", entry)
    except OSError as e:
        log("Journal", f"could not append run journal: {e}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code is not None else EXIT_OK

    component = _COMPONENTS[args.command]
    journal: Dict[str, Any] = {
        "ts": get_current_timestamp().isoformat(),
        "command": args.command,
        "argv": list(argv) if argv is not None else sys.argv[1:],
    }
    started = time.perf_counter()
    try:
        if args.command == "predict":
            code = cmd_predict(args)
        else:
            code = _COMMANDS[args.command](args, journal)
    except (CliError, ValueError, OSError) as e:
        log(component, f"error: {e}")
        code = EXIT_USAGE
    journal["exit_code"] = code
    journal["seconds"] = round(time.perf_counter() - started, 3)
    _write_journal(journal)
    return code

