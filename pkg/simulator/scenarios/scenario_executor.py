"""Scenario execution: run a RunConfig and write its output file."""

import time
from pathlib import Path
from typing import Any, Dict, Optional, Union

from shared_lib.models import RunConfig
from shared_lib.utils import log

from ..engines.records import CheckpointTable, CycleTable
from ..ensemble import run_config
from ..io import make_header, write_output


class ScenarioExecutor:
    """
    Executes a run configuration reproducibly.

    Every walker stream derives from the configuration's master seed, so
    re-executing the same configuration reproduces the output byte for byte.
    """

    def __init__(self, config: RunConfig, name: str = "run", verbose: bool = True):
        """
        Initialize scenario executor.

        Args:
            config: Validated run configuration
            name: Label used in status lines
            verbose: Print per-partition progress to stderr
        """
        self.config = config
        self.name = name
        self.verbose = verbose
        self.result: Optional[Union[CheckpointTable, CycleTable]] = None
        self.seconds = 0.0

    def _progress(self, done: int, total: int) -> None:
        if self.verbose:
            log("Simulator", f"{self.name}: partition {done}/{total} done")

    def run(self) -> Union[CheckpointTable, CycleTable]:
        """Simulate the ensemble."""
        cfg = self.config
        if self.verbose:
            horizon = f"k_max={cfg.k_max}" if cfg.k_max is not None else f"t_max={cfg.t_max}"
            log("Simulator", f"{self.name}: gamma={cfg.gamma} engine={cfg.engine.value} "
                             f"{horizon} walkers={cfg.n_walkers} seed={cfg.master_seed}")
        started = time.perf_counter()
        self.result = run_config(cfg, progress=self._progress)
        self.seconds = time.perf_counter() - started
        return self.result

    def write(self, path: Optional[Union[str, Path]] = None) -> Path:
        """Write the output file; runs the simulation first if needed."""
        target = path or self.config.output
        if target is None:
            raise ValueError("no output path configured")
        if self.result is None:
            self.run()
        return write_output(target, make_header(self.config), self.result, self.config.format)

    def get_status(self) -> Dict[str, Any]:
        """Summary of the last execution."""
        return {
            "scenario_name": self.name,
            "finished": self.result is not None,
            "rows": 0 if self.result is None else len(self.result),
            "seconds": round(self.seconds, 3),
            "config": self.config.model_dump(mode="json"),
        }
