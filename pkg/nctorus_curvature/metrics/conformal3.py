"""
Conformally flat metric on the noncommutative 3-torus

The Laplacian on functions is conjugated to sum_j k^3 delta_j k^-2 delta_j k^3
with k = e^(h/2); the modular operator is x -> k^-6 x k^6.
"""

from fractions import Fraction
from typing import Tuple

from ..core import BaseMetric, Coefficient, D, Operator, op, op_sum, register_metric
from ..core.base_metric import OperatorGrid

N = 3


class Conformal3Metric(BaseMetric):
    """Conformal perturbation of the flat metric on T^3"""

    @property
    def metric_name(self) -> str:
        return "conformal3"

    @property
    def dimension(self) -> int:
        return N

    @property
    def leading_powers(self) -> Tuple[int, ...]:
        return (4, 4, 4)

    @property
    def modular_exponent(self) -> int:
        return 6

    @property
    def radial_power(self) -> int:
        return 4

    @property
    def log_scale(self) -> Fraction:
        return Fraction(1, 2)

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
        return op_sum(N, [op(N, 3, D(j), -2, D(j), 3) for j in range(1, N + 1)])

    def one_form_operator(self) -> OperatorGrid:
        grid = []
        for i in range(1, N + 1):
            row = []
            for j in range(1, N + 1):
                parts = [op(N, -1, D(i), 6, D(j), -1)]
                if i == j:
                    parts += [op(N, 1, D(l), 2, D(l), 1) for l in range(1, N + 1) if l != i]
                else:
                    parts.append(op(N, 1, D(j), 2, D(i), 1, coeff=-1))
                row.append(op_sum(N, parts))
            grid.append(row)
        return grid


# Register with aliases
register_metric(Conformal3Metric, ["conformal", "conf3"])
