"""Scenario loading and execution for the simulator."""

from .scenario_loader import ScenarioLoader
from .scenario_executor import ScenarioExecutor

__all__ = [
    "ScenarioLoader",
    "ScenarioExecutor",
]
