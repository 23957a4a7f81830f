#!/usr/bin/env python3
"""
Main entry point for nctorus-curvature
"""

import logging
import sys
from typing import Optional, Sequence

from .app import configure, create_app


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Parse arguments, configure, and run one command; returns the exit code"""
    parser = create_app()
    args = parser.parse_args(argv)

    try:
        configure()
    except ValueError as e:
        logging.getLogger("nctorus-curvature").error(f"Failed to load configuration: {e}")
        return 2

    return args.handler(args)


if __name__ == "__main__":
    sys.exit(main())
