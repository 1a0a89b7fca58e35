"""Bold-walk simulator: model core, engines, ensembles, scenarios and the CLI."""

from .ensemble import run_config, run_cycle_ensemble, run_ensemble, cycles_to_checkpoints
from .io import make_header, serialize, parse, read_output, read_table, write_output

__all__ = [
    "run_config",
    "run_ensemble",
    "run_cycle_ensemble",
    "cycles_to_checkpoints",
    "make_header",
    "serialize",
    "parse",
    "read_output",
    "read_table",
    "write_output",
]
