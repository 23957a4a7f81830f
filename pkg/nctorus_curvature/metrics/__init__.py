"""
Metric implementations for nctorus-curvature
"""

# Import all metrics to trigger registration
from . import conformal2, conformal3, nonconformal3

__all__ = [
    "conformal3",
    "nonconformal3",
    "conformal2",
]
