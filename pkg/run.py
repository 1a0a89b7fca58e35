#!/usr/bin/env python3
"""
Launch script for the command-line tool.

This script sets up the Python path to allow imports from shared_lib.
"""

import sys
from pathlib import Path

# Add project root to Python path
project_root = Path(__file__).parent
sys.path.insert(0, str(project_root))

# Now import and run main
from simulator.main import main

if __name__ == "__main__":
    sys.exit(main())
