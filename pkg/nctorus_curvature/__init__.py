"""
nctorus-curvature

Scalar and Ricci curvature of conformally and non-conformally perturbed
metrics on noncommutative tori, computed symbolically from the heat kernel
parametrix and checked against closed-form results.
"""

__version__ = "1.0.0"
__all__ = ["create_app", "get_config", "get_metric"]

# Import metrics to trigger registration
from . import metrics  # noqa: F401
from .app import create_app
from .config import get_config
from .core import get_metric
