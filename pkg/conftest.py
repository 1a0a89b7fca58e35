"""pytest configuration: project root on sys.path and the ``slow`` marker."""

import sys
from pathlib import Path

_project_root = Path(__file__).parent
if str(_project_root) not in sys.path:
    sys.path.insert(0, str(_project_root))


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: statistical tests with large budgets (deselect with -m 'not slow')")
