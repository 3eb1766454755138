#!/usr/bin/env python3
"""Main entry point for rotsync when run as a script."""

import sys
from pathlib import Path

# Add the package to Python path
sys.path.insert(0, str(Path(__file__).parent))

from rotsync.cli import main  # noqa: E402

if __name__ == "__main__":
    main()
