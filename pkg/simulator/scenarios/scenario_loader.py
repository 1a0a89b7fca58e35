"""Scenario JSON loader and validator."""

import json
from pathlib import Path
from typing import Any, Dict, Optional

from shared_lib.config import get_settings
from shared_lib.models import RunConfig

PRESET_DIR = Path(__file__).parent


class ScenarioLoader:
    """Load and validate scenario JSON files."""

    @staticmethod
    def load_from_file(file_path: str) -> Dict[str, Any]:
        """
        Load scenario from JSON file.

        Args:
            file_path: Path to scenario JSON file, or the name of a bundled preset

        Returns:
            Scenario dictionary
        """
        path = Path(file_path)
        if not path.exists() and (PRESET_DIR / f"{file_path}.json").exists():
            path = PRESET_DIR / f"{file_path}.json"
        with open(path, "r", encoding="utf-8") as f:
            try:
                scenario = json.load(f)
            except json.JSONDecodeError as e:
                raise ValueError(f"{path}: invalid JSON ({e.msg})") from e
        return ScenarioLoader.validate(scenario)

    @staticmethod
    def load_from_dict(scenario_dict: Dict[str, Any]) -> Dict[str, Any]:
        """Validate a scenario given as a dictionary."""
        return ScenarioLoader.validate(dict(scenario_dict))

    @staticmethod
    def validate(scenario: Dict[str, Any]) -> Dict[str, Any]:
        """
        Validate scenario structure.

        Args:
            scenario: Scenario dictionary

        Returns:
            Validated scenario dictionary

        Raises:
            ValueError: If scenario is invalid
        """
        if not isinstance(scenario, dict):
            raise ValueError("Scenario must be a JSON object")
        for field in ("name", "gamma"):
            if field not in scenario:
                raise ValueError(f"Missing required field: {field}")

        settings = get_settings()
        scenario.setdefault("version", "1.0")
        scenario.setdefault("description", "")
        scenario.setdefault("engine", "direct")
        scenario.setdefault("t_max", None)
        scenario.setdefault("k_max", None)
        scenario.setdefault("walkers", 1)
        scenario.setdefault("seed", settings.default_seed)
        scenario.setdefault("checkpoints", f"geometric:{settings.checkpoint_ratio!r}:{settings.checkpoint_start}")
        scenario.setdefault("format", "jsonl")

        if scenario["t_max"] is None and scenario["k_max"] is None:
            raise ValueError("Scenario needs t_max or k_max")
        # Build once so a bad combination fails at load time
        ScenarioLoader.to_config(scenario)
        return scenario

    @staticmethod
    def to_config(scenario: Dict[str, Any], threads: Optional[int] = None,
                  output: Optional[str] = None) -> RunConfig:
        """RunConfig for a validated scenario."""
        return RunConfig(
            gamma=scenario["gamma"],
            engine=scenario["engine"],
            t_max=scenario["t_max"],
            k_max=scenario["k_max"],
            n_walkers=scenario["walkers"],
            checkpoints=scenario["checkpoints"],
            master_seed=scenario["seed"],
            threads=threads or get_settings().default_threads,
            output=output,
            format=scenario["format"],
        )
