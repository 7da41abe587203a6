"""
Main entry point for the GMCC quantum-code toolkit.

This script:
- Initializes logging (stderr, so stdout carries only results)
- Dispatches to the command-line interface
- Exits with the interface's exit code

Usage:
    python main.py field-info --p 3 --k 2
    python main.py qgv --n 78 --k 66 --d 4 --q 5
    python main.py tables --diff
"""

import logging
import sys

from src.cli import run
from src.config import LOG_DATE_FORMAT, LOG_FORMAT, LOG_LEVEL


def setup_logging() -> None:
    """Configure logging with custom format and level."""
    logging.basicConfig(
        level=LOG_LEVEL,
        format=LOG_FORMAT,
        datefmt=LOG_DATE_FORMAT,
        stream=sys.stderr,
    )


if __name__ == "__main__":
    setup_logging()

    try:
        sys.exit(run(sys.argv[1:]))
    except KeyboardInterrupt:
        logging.getLogger(__name__).warning("Interrupted")
        sys.exit(130)
