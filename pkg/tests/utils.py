"""
Shared test utilities for nctorus-curvature tests
"""

from fractions import Fraction
from typing import Sequence, Tuple

# Import metrics to trigger registration
import nctorus_curvature.metrics  # noqa: F401
from nctorus_curvature.core import BaseMetric, Coefficient, D, Operator, op, op_sum
from nctorus_curvature.core.words import Word
from nctorus_curvature.logk import CurvatureExpression, reported_value

N = 3


class FlatMetric(BaseMetric):
    """The flat 3-torus: k = 1, every density vanishes. Never registered."""

    @property
    def metric_name(self) -> str:
        return "flat3"

    @property
    def dimension(self) -> int:
        return N

    @property
    def leading_powers(self) -> Tuple[int, ...]:
        return (0, 0, 0)

    @property
    def modular_exponent(self) -> int:
        return 2

    @property
    def radial_power(self) -> int:
        return 0

    @property
    def log_scale(self) -> Fraction:
        return Fraction(1)

    @property
    def normalization(self) -> Coefficient:
        return Coefficient(Fraction(1, 8), pi_half=-7)

    @property
    def density_pi_half(self) -> int:
        return -3

    @property
    def reduction(self) -> str:
        return "spherical"

    def function_operator(self) -> Operator:
        return op_sum(N, [op(N, D(j), D(j)) for j in range(1, N + 1)])


def ordered_value(
    expr: CurvatureExpression, prefix: int, word: Word, point: Sequence[float]
) -> float:
    """Reported value of the plain ordered word k^prefix word, 0 if absent"""
    fn = expr.ordered().get((prefix, word))
    return 0.0 if fn is None else reported_value(fn, point, expr.pi_half)
