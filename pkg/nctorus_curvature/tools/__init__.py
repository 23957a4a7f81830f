"""
Command registration for nctorus-curvature
"""

from .commands import register_commands
from .verification import SUITES, run_suite

__all__ = ["SUITES", "register_commands", "run_suite"]
