"""
App factory for nctorus-curvature

Builds the command-line parser and applies logging and numerical
configuration before a command runs.
"""

import argparse
import logging

from .config import AppConfig, get_config


def configure() -> AppConfig:
    """Set up logging and the numerical defaults from the environment"""
    config = get_config()

    # Setup logging
    logging.basicConfig(
        level=config.log_level, format="%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    )
    logger = logging.getLogger("nctorus-curvature")

    # Set defaults of the numerical evaluators
    from .core.quadrature import QuadratureEvaluator
    from .rearrange import FEvaluator

    QuadratureEvaluator._default_tolerance = config.quad_tol
    FEvaluator._default_backend = config.f_backend

    logger.info(f"Quadrature tolerance: {config.quad_tol}")
    logger.info(f"F backend: {config.f_backend}")
    return config


def create_app() -> argparse.ArgumentParser:
    """Create the command-line parser with every subcommand registered"""
    parser = argparse.ArgumentParser(
        prog="nctorus-curvature",
        description=(
            "Curvature of perturbed metrics on noncommutative tori: compute densities, "
            "compare them with closed forms and run verification suites."
        ),
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    # Import metrics to trigger registration
    from . import metrics  # noqa: F401
    from .tools import register_commands

    register_commands(subparsers)
    return parser
