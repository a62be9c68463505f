#!/usr/bin/env python3
"""Launcher for the groupoid command-line tools.

Usage:
    python gpd.py validate specs/pair3.gpd
    python gpd.py norm specs/z4.gpd --element "ind([1])" --p 3
    python gpd.py verify specs/pair3.gpd --theorem 3.7I --samples 20 --seed 0
"""

import sys

# Load environment variables from .env file
try:
    from dotenv import load_dotenv

    load_dotenv()
except ImportError:
    print("python-dotenv not installed, environment variables from .env file won't be loaded", file=sys.stderr)

from groupoids.cli import main


if __name__ == "__main__":
    sys.exit(main())
