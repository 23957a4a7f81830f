"""
Printed intermediate results of the non-conformal scalar computation

The 41 terms of d_3(b1) delta_3(a2) b0 at the symbol stage, one sample of the
(eta, theta) integration, and spot terms of the integrated b2, whose printed
coefficients are normalized by 1/pi^2 and carry b0 = b0(u).
"""

from fractions import Fraction
from typing import Tuple

from ..core import Coefficient, SymbolExpr
from ..core.notation import parse_symbols

B1_PARTIAL_DIRECTION = 3

B1_PARTIAL_TERMS: Tuple[str, ...] = (
    "-4 x1^5 x3 k^2 b0^2 d1(k^2) b0^2 d3(k^2) b0",
    "-8 x1^5 x3 k^2 b0^3 d1(k^2) b0 d3(k^2) b0",
    "-4 x1^4 x3^2 b0^2 d3(k^2) b0^2 d3(k^2) b0",
    "-8 x1^4 x3^2 b0^3 d3(k^2) b0 d3(k^2) b0",
    "+2 x1^4 b0^2 d3(k^2) b0 d3(k^2) b0",
    "-4 x1^4 x2 x3 k^2 b0^2 d2(k^2) b0^2 d3(k^2) b0",
    "-8 x1^4 x2 x3 k^2 b0^3 d2(k^2) b0 d3(k^2) b0",
    "-8 x1^3 x2^2 x3 k^2 b0^2 d1(k^2) b0^2 d3(k^2) b0",
    "+4 x1^3 x3 b0 k d1(k) b0^2 d3(k^2) b0",
    "-16 x1^3 x2^2 x3 k^2 b0^3 d1(k^2) b0 d3(k^2) b0",
    "+4 x1^3 x3 b0^2 k d1(k) b0 d3(k^2) b0",
    "+4 x1^2 x2^2 b0^2 d3(k^2) b0 d3(k^2) b0",
    "-8 x1^2 x2^2 x3^2 b0^2 d3(k^2) b0^2 d3(k^2) b0",
    "-16 x1^2 x2^2 x3^2 b0^3 d3(k^2) b0 d3(k^2) b0",
    "+2 x1^2 x3^2 b0 k^-1 d3(k) b0^2 d3(k^2) b0",
    "-2 x1^2 x3^2 b0 d3(k) k^-1 b0^2 d3(k^2) b0",
    "+2 x1^2 x3^2 b0^2 k^-1 d3(k) b0 d3(k^2) b0",
    "-2 x1^2 x3^2 b0^2 d3(k) k^-1 b0 d3(k^2) b0",
    "-1 x1^2 b0 k^-1 d3(k) b0 d3(k^2) b0",
    "+1 x1^2 b0 d3(k) k^-1 b0 d3(k^2) b0",
    "-8 x1^2 x2^3 x3 k^2 b0^2 d2(k^2) b0^2 d3(k^2) b0",
    "-16 x1^2 x2^3 x3 k^2 b0^3 d2(k^2) b0 d3(k^2) b0",
    "+4 x1^2 x2 x3 b0 k d2(k) b0^2 d3(k^2) b0",
    "+4 x1^2 x2 x3 b0^2 k d2(k) b0 d3(k^2) b0",
    "-4 x1 x2^4 x3 k^2 b0^2 d1(k^2) b0^2 d3(k^2) b0",
    "-8 x1 x2^4 x3 k^2 b0^3 d1(k^2) b0 d3(k^2) b0",
    "+4 x1 x2^2 x3 b0 k d1(k) b0^2 d3(k^2) b0",
    "+4 x1 x2^2 x3 b0^2 k d1(k) b0 d3(k^2) b0",
    "+2 x2^4 b0^2 d3(k^2) b0 d3(k^2) b0",
    "-1 x2^2 b0 k^-1 d3(k) b0 d3(k^2) b0",
    "+1 x2^2 b0 d3(k) k^-1 b0 d3(k^2) b0",
    "-4 x2^4 x3^2 b0^2 d3(k^2) b0^2 d3(k^2) b0",
    "-8 x2^4 x3^2 b0^3 d3(k^2) b0 d3(k^2) b0",
    "+2 x2^2 x3^2 b0 k^-1 d3(k) b0^2 d3(k^2) b0",
    "-2 x2^2 x3^2 b0 d3(k) k^-1 b0^2 d3(k^2) b0",
    "+2 x2^2 x3^2 b0^2 k^-1 d3(k) b0 d3(k^2) b0",
    "-2 x2^2 x3^2 b0^2 d3(k) k^-1 b0 d3(k^2) b0",
    "-4 x2^5 x3 k^2 b0^2 d2(k^2) b0^2 d3(k^2) b0",
    "-8 x2^5 x3 k^2 b0^3 d2(k^2) b0 d3(k^2) b0",
    "+4 x2^3 x3 b0 k d2(k) b0^2 d3(k^2) b0",
    "+4 x2^3 x3 b0^2 k d2(k) b0 d3(k^2) b0",
)

# int over R^3 of this term is SAMPLE_FACTOR times int_0^inf u^2 (...) du
SAMPLE_TERM = "x2^4 x3^2 b0^3 d3(k^2) b0 d3(k^2) b0"
SAMPLE_U_POWER = Fraction(2)
SAMPLE_FACTOR = Coefficient(Fraction(3, 16), pi_half=4)

# (printed radial term, printed coefficient); the scale is 1/pi^2 of the
# integral of b2 before the density normalization
RADIAL_SPOT_TERMS: Tuple[Tuple[str, Fraction], ...] = (
    ("u^3 k^2 b0^2 d1(k) k^3 b0^2 k d1(k) b0", Fraction(2)),
    ("u^3 k^4 b0^3 k d1(k) b0 k d1(k) b0", Fraction(4)),
    ("u^2 k^4 b0^3 k d1(d1(k)) b0", Fraction(-2)),
    ("u^2 k^4 b0^3 d1(k) d1(k) b0", Fraction(-4)),
    ("u^2 k^2 b0^2 k d1(k) b0 k d1(k) b0", Fraction(-8)),
    ("u^2 b0^2 k d3(k) b0 k d3(k) b0", Fraction(-2)),
    ("u^2 b0^2 k d3(k) b0^2 k d3(k) b0", Fraction(2)),
    ("u^2 b0^3 k d3(k) b0 k d3(k) b0", Fraction(4)),
    ("u k^2 b0^2 k d1(d1(k)) b0", Fraction(3)),
    ("b0 k d1(d1(k)) b0", Fraction(-1)),
)

RADIAL_SCALE = Coefficient(Fraction(1), pi_half=4)


def b1_partial_expected(dimension: int = 3) -> SymbolExpr:
    """The printed expansion of d_3(b1) delta_3(a2) b0 as a SymbolExpr"""
    return parse_symbols(B1_PARTIAL_TERMS, dimension)
