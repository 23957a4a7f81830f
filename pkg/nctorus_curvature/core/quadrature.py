"""
Shared quadrature evaluator for spectral functions
"""

import logging
import os
from functools import lru_cache
from typing import Callable, Optional, Tuple

import numpy as np
from scipy import integrate

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def gauss_legendre(n: int) -> Tuple[np.ndarray, np.ndarray]:
    """Gauss-Legendre nodes and weights mapped to [0, 1]"""
    nodes, weights = np.polynomial.legendre.leggauss(n)
    return 0.5 * (nodes + 1.0), 0.5 * weights


class QuadratureEvaluator:
    """Adaptive quadrature with a configurable tolerance"""

    _default_tolerance: float = 1e-10

    def __init__(self, tolerance: Optional[float] = None):
        """Initialize the evaluator with a configurable tolerance"""
        if tolerance is None:
            tolerance = getattr(
                self.__class__,
                "_default_tolerance",
                float(os.getenv("NCG_QUAD_TOL", "1e-10")),
            )
        self.tolerance = tolerance

    def half_line(self, integrand: Callable[[float], float]) -> float:
        """
        Integrate over [0, inf), split at 1 with a transformed tail.

        Args:
            integrand: function of u, integrable at 0 and at infinity

        Returns:
            The value of the integral
        """
        head, head_err = integrate.quad(
            integrand, 0.0, 1.0, epsabs=self.tolerance, epsrel=self.tolerance, limit=200
        )
        # u = 1/v maps [1, inf) onto (0, 1]
        tail, tail_err = integrate.quad(
            lambda v: integrand(1.0 / v) / (v * v) if v > 0 else 0.0,
            0.0,
            1.0,
            epsabs=self.tolerance,
            epsrel=self.tolerance,
            limit=200,
        )
        if head_err + tail_err > 100 * self.tolerance * (1 + abs(head + tail)):
            logger.debug(f"Quadrature error estimate {head_err + tail_err:.3e} above tolerance")
        return float(head + tail)

    def unit_interval(self, integrand: Callable[[float], float]) -> float:
        value, _ = integrate.quad(
            integrand, 0.0, 1.0, epsabs=self.tolerance, epsrel=self.tolerance, limit=200
        )
        return float(value)

    @staticmethod
    def simplex(integrand: Callable[[np.ndarray, np.ndarray], np.ndarray], n: int = 24) -> float:
        """Integrate a smooth vectorized function over 0 <= t <= s <= 1"""
        x, w = gauss_legendre(n)
        s = x[:, None]
        t = s * x[None, :]
        weights = w[:, None] * w[None, :] * s
        return float(np.sum(weights * integrand(s, t)))
