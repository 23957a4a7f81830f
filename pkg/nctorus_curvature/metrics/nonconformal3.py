"""
Non-conformally perturbed metric on the noncommutative 3-torus

The metric rescales the first two directions by k = e^h and leaves the third
untouched, so a_2 = k^2 (xi_1^2 + xi_2^2) + xi_3^2 and x -> k^-2 x k^2 is the
modular operator.
"""

from fractions import Fraction
from typing import Tuple

from ..core import BaseMetric, Coefficient, D, Operator, SymbolExpr, delta, mul, op, op_sum
from ..core import register_metric
from ..core.base_metric import OperatorGrid
from ..core.words import dk

N = 3


def _k(r: int) -> SymbolExpr:
    return SymbolExpr.k(N, r)


def _dk(*alpha: int) -> SymbolExpr:
    return SymbolExpr.word(N, [dk(*alpha)])


def _dk2(j: int) -> SymbolExpr:
    """delta_j(k^2)"""
    return delta(j, _k(2))


class NonConformal3Metric(BaseMetric):
    """Metric with Weyl factor in the first two directions of T^3"""

    @property
    def metric_name(self) -> str:
        return "nonconformal3"

    @property
    def dimension(self) -> int:
        return N

    @property
    def leading_powers(self) -> Tuple[int, ...]:
        return (2, 2, 0)

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
        return Coefficient(Fraction(1, 8), pi_half=-7)

    @property
    def density_pi_half(self) -> int:
        return -3

    @property
    def reduction(self) -> str:
        return "cylindrical"

    def function_operator(self) -> Operator:
        return op_sum(
            N,
            [
                op(N, 2, D(1), D(1)),
                op(N, 2, D(2), D(2)),
                op(N, D(3), D(3)),
                op(N, mul(_k(1) * _dk(1)), D(1), coeff=2),
                op(N, mul(_k(1) * _dk(2)), D(2), coeff=2),
                op(N, mul(_k(-1) * _dk2(3) * _k(-1)), D(3), coeff=-1),
                op(N, mul(_k(-1) * _dk(3)), D(3), coeff=2),
                op(N, mul(_k(-1) * _dk(3, 3))),
                op(N, mul(_k(1) * _dk(1, 1))),
                op(N, mul(_k(1) * _dk(2, 2))),
                op(N, mul(_k(-1) * _dk2(3) * _k(-2) * _dk(3)), coeff=-1),
            ],
        )

    def one_form_operator(self) -> OperatorGrid:
        horizontal = op_sum(N, [op(N, D(1), 2, D(1)), op(N, D(2), 2, D(2)), op(N, D(3), D(3))])
        vertical = op_sum(
            N,
            [
                op(N, 1, D(1), D(1), 1),
                op(N, 1, D(2), D(2), 1),
                op(N, -1, D(3), 2, D(3), -1),
            ],
        )
        twist_13 = _dk2(3) * _k(-1)
        twist_31 = _k(-1) * _dk2(3)
        return [
            [
                horizontal,
                op(N, mul(_dk2(1)), D(2)) - op(N, mul(_dk2(2)), D(1)),
                op(N, D(1), mul(twist_13), coeff=-1),
            ],
            [
                op(N, mul(_dk2(2)), D(1)) - op(N, mul(_dk2(1)), D(2)),
                horizontal,
                op(N, D(2), mul(twist_13), coeff=-1),
            ],
            [
                op(N, mul(twist_31), D(1)),
                op(N, mul(twist_31), D(2)),
                vertical,
            ],
        ]


# Register with aliases
register_metric(NonConformal3Metric, ["nonconformal", "nonconf3"])
