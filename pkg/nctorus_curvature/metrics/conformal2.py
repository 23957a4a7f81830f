"""
Conformally flat metric on the noncommutative 2-torus
"""

from fractions import Fraction
from typing import Tuple

from ..core import BaseMetric, Coefficient, D, Operator, op, op_sum, register_metric

N = 2


class Conformal2Metric(BaseMetric):
    """The operator k (delta_1^2 + delta_2^2) k with k = e^h"""

    @property
    def metric_name(self) -> str:
        return "conformal2"

    @property
    def dimension(self) -> int:
        return N

    @property
    def leading_powers(self) -> Tuple[int, ...]:
        return (2, 2)

    @property
    def modular_exponent(self) -> int:
        return 2

    @property
    def radial_power(self) -> int:
        return 2

    @property
    def log_scale(self) -> Fraction:
        return Fraction(1)

    @property
    def normalization(self) -> Coefficient:
        return Coefficient(Fraction(1, 4), pi_half=-4)

    @property
    def density_pi_half(self) -> int:
        return -2

    @property
    def reduction(self) -> str:
        return "spherical"

    def function_operator(self) -> Operator:
        return op_sum(N, [op(N, 1, D(j), D(j), 1) for j in range(1, N + 1)])


# Register with aliases
register_metric(Conformal2Metric, ["conf2", "conformal-2d"])
