"""Shared library: settings, record models, random streams and JSONL helpers."""

from .models import (
    Regime,
    LimitLaw,
    Engine,
    OutputFormat,
    RegimePrediction,
    LaplaceGrid,
    WalkerState,
    CheckpointRecord,
    CycleRecord,
    LaplaceEstimate,
    MomentEstimate,
    EnsembleSummary,
    NuEstimate,
    RunConfig,
    RunHeader,
    CheckResult,
    SuiteReport,
)
from .config import Settings, get_settings
from .utils import (
    get_current_timestamp,
    append_jsonl,
    iter_jsonl,
    ensure_log_dir,
    log,
    geometric_schedule,
    parse_schedule,
)
from .rng import stream, walker_stream, walker_streams

__all__ = [
    "Regime",
    "LimitLaw",
    "Engine",
    "OutputFormat",
    "RegimePrediction",
    "LaplaceGrid",
    "WalkerState",
    "CheckpointRecord",
    "CycleRecord",
    "LaplaceEstimate",
    "MomentEstimate",
    "EnsembleSummary",
    "NuEstimate",
    "RunConfig",
    "RunHeader",
    "CheckResult",
    "SuiteReport",
    "Settings",
    "get_settings",
    "get_current_timestamp",
    "append_jsonl",
    "iter_jsonl",
    "ensure_log_dir",
    "log",
    "geometric_schedule",
    "parse_schedule",
    "stream",
    "walker_stream",
    "walker_streams",
]
