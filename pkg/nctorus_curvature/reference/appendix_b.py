"""
Closed forms of the rearranged radial integrals

Conformal functions F_{m0,...,mp} are rational in a = s1^(1/3), b = s2^(1/3);
non-conformal functions F^[nu]_{m0,...,mp} are rational in s1, s2 and their
logarithms. All are registered in Delta coordinates.
"""

import math

from .functions import DELTA, register_reference

L = math.log
PI = math.pi

_UNARY = ((1,),)
_BINARY = ((1, 0), (0, 1), (1, 1))
_LOCATION = "rearrangement F function"
_SCALAR_STEP = "rearranged scalar density, non-conformal 3-torus"


# conformal family -------------------------------------------------------


def conformal_f11(s1: float) -> float:
    a = s1 ** (1 / 3)
    return PI / (a * a + a)


def conformal_f21(s1: float) -> float:
    a = s1 ** (1 / 3)
    return PI * (a + 2) / (2 * (a + 1) ** 2 * a)


def conformal_f31(s1: float) -> float:
    a = s1 ** (1 / 3)
    return PI * (3 * a * a + 9 * a + 8) / (8 * (a + 1) ** 3 * a)


def conformal_f111(s1: float, s2: float) -> float:
    a, b = s1 ** (1 / 3), s2 ** (1 / 3)
    return PI * (a * (b + 1) + 1) / ((a + 1) * s1 * (b + 1) * b * (a * b + 1))


def conformal_f121(s1: float, s2: float) -> float:
    a, b = s1 ** (1 / 3), s2 ** (1 / 3)
    numerator = 2 * a * a * (b + 1) ** 2 + a * (b + 2) ** 2 + b + 2
    return (
        PI
        * numerator
        / (2 * (a + 1) ** 2 * s1 ** (5 / 3) * (b + 1) ** 2 * b * (a * b + 1))
    )


def conformal_f211(s1: float, s2: float) -> float:
    a, b = s1 ** (1 / 3), s2 ** (1 / 3)
    numerator = (a + 2) * a * (b + 1) * (a * b + 2) + 2
    return PI * numerator / (2 * (a + 1) ** 2 * s1 * (b + 1) * b * (a * b + 1) ** 2)


def conformal_f221(s1: float, s2: float) -> float:
    a, b = s1 ** (1 / 3), s2 ** (1 / 3)
    numerator = (
        a * (2 * b * b + 7 * b + 6)
        + (b + 1) ** 2 * (s1 ** (4 / 3) * b + a * a * (b + 6) + s1 * (3 * b + 2))
        + b
        + 2
    )
    denominator = 2 * (a + 1) ** 3 * s1 ** (5 / 3) * (b + 1) ** 2 * b * (a * b + 1) ** 2
    return PI * numerator / denominator


def conformal_f311(s1: float, s2: float) -> float:
    a, b = s1 ** (1 / 3), s2 ** (1 / 3)
    numerator = (
        (9 * s1 ** (4 / 3) * b + 24 * a * a) * (b + 1) ** 2
        + (24 * a + 3 * b * b * s1 ** (5 / 3) + 27 * b * s1 + 8 * b * b * s1 + 8 * s1) * (b + 1)
        + 8
    )
    denominator = 8 * s1 * b * (a + 1) ** 3 * (b + 1) * (a * b + 1) ** 3
    return PI * numerator / denominator


# non-conformal family, nu = 2 -------------------------------------------


def nonconformal2_f11(x: float) -> float:
    return L(x) / (x - 1)


def nonconformal2_f21(x: float) -> float:
    return (x - L(x) - 1) / (x - 1) ** 2


def nonconformal2_f31(x: float) -> float:
    return ((x - 4) * x + 2 * L(x) + 3) / (2 * (x - 1) ** 3)


def nonconformal2_f101(x: float, y: float) -> float:
    return L(x * y) / (x * y - 1)


def nonconformal2_f111(x: float, y: float) -> float:
    return ((x * y - 1) * L(x) - (x - 1) * L(x * y)) / ((x - 1) * x * (y - 1) * (x * y - 1))


def nonconformal2_f201(x: float, y: float) -> float:
    return (x * y - L(x * y) - 1) / (x * y - 1) ** 2


def nonconformal2_f121(x: float, y: float) -> float:
    xy = x * y
    numerator = (x - 1) ** 2 * L(xy) + (xy - 1) * (
        -xy + (x * (y - 2) + 1) * L(x) + x + y - 1
    )
    return numerator / ((x - 1) ** 2 * x * x * (y - 1) ** 2 * (xy - 1))


def nonconformal2_f211(x: float, y: float) -> float:
    xy = x * y
    numerator = (x - 1) ** 2 * L(xy) + (xy - 1) * ((x - 1) * x * (y - 1) + (1 - xy) * L(x))
    return numerator / ((x - 1) ** 2 * x * (y - 1) * (xy - 1) ** 2)


def nonconformal2_f221(x: float, y: float) -> float:
    # printed with a dropped factor; this is the partial-fraction result
    xy = x * y
    numerator = (
        -((xy - 1) ** 2) * (x * (2 * y - 3) + 1) * L(x)
        + (xy - 1) * (x - 1) * (y - 1) * (x * x * (y - 1) + xy - 1)
        - (x - 1) ** 3 * L(xy)
    )
    return numerator / ((x - 1) ** 3 * x * x * (y - 1) ** 2 * (xy - 1) ** 2)


def nonconformal2_f301(x: float, y: float) -> float:
    xy = x * y
    return ((xy - 3) * (xy - 1) + 2 * L(xy)) / (2 * (xy - 1) ** 3)


def nonconformal2_f311(x: float, y: float) -> float:
    xy = x * y
    numerator = (
        2 * (xy - 1) ** 3 * L(x)
        - 2 * (x - 1) ** 3 * L(xy)
        + x * (x - 1) * (y - 1) * (xy - 1) * ((x - 3) * xy - 3 * x + 5)
    )
    return numerator / (2 * (x - 1) ** 3 * x * (y - 1) * (xy - 1) ** 3)


# non-conformal family, nu = 3 -------------------------------------------


def nonconformal3_f21(x: float) -> float:
    return (x * (L(x) - 1) + 1) / (x - 1) ** 2


def nonconformal3_f31(x: float) -> float:
    return (x * x - 2 * x * L(x) - 1) / (2 * (x - 1) ** 3)


def nonconformal3_f111(x: float, y: float) -> float:
    xy = x * y
    return ((1 - xy) * L(x) + (x - 1) * y * L(xy)) / ((x - 1) * (y - 1) * (xy - 1))


def nonconformal3_f201(x: float, y: float) -> float:
    xy = x * y
    return (-xy + xy * L(xy) + 1) / (xy - 1) ** 2


def nonconformal3_f301(x: float, y: float) -> float:
    xy = x * y
    return (xy * xy - 2 * xy * L(xy) - 1) / (2 * (xy - 1) ** 3)


def nonconformal3_f121(x: float, y: float) -> float:
    xy = x * y
    numerator = (xy - 1) * ((x - 1) * (y - 1) + (x - y) * L(x)) - (x - 1) ** 2 * y * L(xy)
    return numerator / ((x - 1) ** 2 * x * (y - 1) ** 2 * (xy - 1))


def nonconformal3_f211(x: float, y: float) -> float:
    xy = x * y
    numerator = (xy - 1) ** 2 * L(x) - (x - 1) * ((y - 1) * (xy - 1) + (x - 1) * y * L(xy))
    return numerator / ((x - 1) ** 2 * (y - 1) * (xy - 1) ** 2)


def nonconformal3_f221(x: float, y: float) -> float:
    lx, lxy = L(x), L(x * y)
    x2, x3, y2, y3 = x * x, x**3, y * y, y**3
    numerator = (
        x2
        + y3 * x3 * (lx - 2)
        + y2 * x3 * (3 - 2 * lx)
        + y * x3 * (lxy - 1)
        + y3 * x2 * (lx + 2)
        - y2 * x2 * 2 * lx
        + y * x2 * (4 * lx - 3 * lxy - 3)
        + y2 * x * (-2 * lx - 3)
        - x * 2 * lx
        + y * x * (lx + 3 * lxy + 3)
        + y * (lx - lxy + 1)
        - 1
    )
    return numerator / ((x - 1) ** 3 * x * (y - 1) ** 2 * (x * y - 1) ** 2)


def nonconformal3_f311(x: float, y: float) -> float:
    xy = x * y
    numerator = (
        2 * (x - 1) ** 3 * y * L(xy)
        - 2 * (xy - 1) ** 3 * L(x)
        + (x - 1) * (y - 1) * (xy - 1) * ((x + 1) * xy + x - 3)
    )
    return numerator / (2 * (x - 1) ** 3 * (y - 1) * (xy - 1) ** 3)


def psi1(s: float) -> float:
    """Coefficient of k^-1 delta_1^2(k) in the non-conformal rearranged scalar density"""
    r = math.sqrt(s)
    return -(PI**2) * r * (s * L(s) + L(s) - 2 * s + 2) / ((r - 1) ** 3 * (r + 1) ** 2)


CONFORMAL_FORMS = {
    "F_{1,1}": conformal_f11,
    "F_{2,1}": conformal_f21,
    "F_{3,1}": conformal_f31,
    "F_{1,1,1}": conformal_f111,
    "F_{1,2,1}": conformal_f121,
    "F_{2,1,1}": conformal_f211,
    "F_{2,2,1}": conformal_f221,
    "F_{3,1,1}": conformal_f311,
}

NONCONFORMAL_FORMS = {
    "F^[2]_{1,1}": nonconformal2_f11,
    "F^[2]_{2,1}": nonconformal2_f21,
    "F^[2]_{3,1}": nonconformal2_f31,
    "F^[3]_{2,1}": nonconformal3_f21,
    "F^[3]_{3,1}": nonconformal3_f31,
    "F^[2]_{1,0,1}": nonconformal2_f101,
    "F^[2]_{1,1,1}": nonconformal2_f111,
    "F^[2]_{2,0,1}": nonconformal2_f201,
    "F^[2]_{1,2,1}": nonconformal2_f121,
    "F^[2]_{2,1,1}": nonconformal2_f211,
    "F^[2]_{2,2,1}": nonconformal2_f221,
    "F^[2]_{3,0,1}": nonconformal2_f301,
    "F^[2]_{3,1,1}": nonconformal2_f311,
    "F^[3]_{1,1,1}": nonconformal3_f111,
    "F^[3]_{2,0,1}": nonconformal3_f201,
    "F^[3]_{3,0,1}": nonconformal3_f301,
    "F^[3]_{1,2,1}": nonconformal3_f121,
    "F^[3]_{2,1,1}": nonconformal3_f211,
    "F^[3]_{2,2,1}": nonconformal3_f221,
    "F^[3]_{3,1,1}": nonconformal3_f311,
}

APPENDIX_B_NAMES = tuple(CONFORMAL_FORMS) + tuple(NONCONFORMAL_FORMS)


def _arity(name: str) -> int:
    return name.count(",")


# Register with the reference factory
for _name, _form in CONFORMAL_FORMS.items():
    register_reference(_name, _arity(_name), _form, _LOCATION, coordinates=DELTA)

for _name, _form in NONCONFORMAL_FORMS.items():
    register_reference(
        _name,
        _arity(_name),
        _form,
        _LOCATION,
        singular=_UNARY if _arity(_name) == 1 else _BINARY,
        coordinates=DELTA,
    )

register_reference("psi1", 1, psi1, _SCALAR_STEP, singular=_UNARY, coordinates=DELTA)
