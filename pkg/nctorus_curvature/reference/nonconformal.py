"""
Curvature functions of the non-conformally perturbed 3-torus

All functions take nabla coordinates. K1, K2, H1, H2 give the scalar
curvature; the matrix families K, S, W together with W33, H3, K3, H4 give the
heat density on 1-forms; the tilde functions enter the Ricci density.
"""

from math import cosh, exp, sinh
from typing import Callable, Dict, Tuple

from .functions import register_reference

_UNARY = ((1,),)
_BINARY = ((1, 0), (0, 1), (1, 1))
_SCALAR = "scalar curvature, non-conformal 3-torus"
_ONE_FORM = "1-form heat density, non-conformal 3-torus"
_RICCI = "Ricci density, non-conformal 3-torus"


def K1(s: float) -> float:
    e = exp(s)
    return exp(s / 2) * (2 * e - s * e - 2 - s) / (4 * s * (e - 1) ** 2)


def K2(s: float) -> float:
    e = exp(s)
    return (1 - e * e + 2 * s * e) / (4 * s * exp(s / 2) * (1 - e) ** 2)


def H1(s: float, t: float) -> float:
    es, et, est = exp(s), exp(t), exp(s + t)
    numerator = (
        es * (et - 1) ** 2 * s * s
        - et * (es - 1) ** 2 * t * t
        - (es - et) * (est - 1) * s * t
        + (1 - es) * (et - 1) * (est - 1) * (t - s)
    )
    denominator = exp(-(s + t) / 2) * (es - 1) * s * (et - 1) * t * (est - 1) ** 2 * (s + t)
    return numerator / denominator


def H2(s: float, t: float) -> float:
    es, et, est = exp(s), exp(t), exp(s + t)
    numerator = (
        (et - 1) ** 2 * (est - 3 * es * est - es - 1) * s * s
        + (es - 1) ** 2 * (es * et * et + es * et**3 - et * et + 3 * et) * t * t
        - 2 * (es - 1) * (et - 1) * (est * est - 1) * (s - t)
        + (est - 1)
        * (
            4 * est
            + es * est
            - 5 * est * et
            + est * est
            + es
            - 5 * et
            + 2 * et * et
            + 1
        )
        * s
        * t
    )
    denominator = 4 * exp((s + t) / 2) * (es - 1) * (et - 1) * (est - 1) ** 2 * s * t * (s + t)
    return numerator / denominator


# 1-form functions -------------------------------------------------------


def _k_prefactor(s: float) -> float:
    return 1 / (4 * s * (exp(s) - 1))


def K_horizontal(s: float) -> float:
    """Diagonal entries (1,1) and (2,2) of the K matrix"""
    e = exp(s)
    return _k_prefactor(s) * (e * e - 2 * s * e - 1) / (e - 1)


def K_mixed_up(s: float) -> float:
    """Entries (1,3) and (2,3) of the K matrix"""
    return _k_prefactor(s) * ((s - 1) * exp(s / 2) + exp(-s / 2))


def K_mixed_down(s: float) -> float:
    """Entries (3,1) and (3,2) of the K matrix"""
    return _k_prefactor(s) * (exp(s) - s - 1)


def K_vertical(s: float) -> float:
    e = exp(s)
    return _k_prefactor(s) * (1 - e * e + s * e * e + s) / (exp(s / 2) * (e - 1))


def S1(s: float, t: float) -> float:
    es, et = exp(s), exp(t)
    correction = ((es - 1) ** 2 * et * t + es * s * (et - 1) ** 2) / (
        2 * s * t * (es - 1) * (et - 1) * (exp(s + t) - 1)
    )
    return 1 / (2 * s * t) - correction


def W33(s: float, t: float) -> float:
    es, et, est = exp(s), exp(t), exp(s + t)
    numerator = (
        (et - 1) ** 2 * (1 - 4 * es - es * es - est - 4 * es * est + es * es * est) * s * s
        + 2 * (es + 1) * (et + 1) * (est - 1) * (es - et) * s * t
        - (es - 1) ** 2 * (1 - 4 * et - et * et - est - 4 * et * est + et * et * est) * t * t
        - 4 * (es - 1) * (et - 1) * (est * est - 1) * (s - t)
    )
    denominator = (
        16 * exp((s + t) / 2) * (es - 1) * (et - 1) * (est - 1) ** 2 * s * t * (s + t)
    )
    return numerator / denominator


def H3(s: float, t: float) -> float:
    es, et, est = exp(s), exp(t), exp(s + t)
    numerator = (
        es * (et - 1) ** 2 * (-1 - 3 * es + est - es * est) * s * s
        + (es - 1) ** 2 * (1 - et + 3 * est + est * et) * t * t
        - 4 * es * (es - 1) * (et - 1) * (est - 1) * (s - t)
        + (
            7 * est
            - 7 * est * est
            - est**3
            + 2 * es * es * est
            + 3 * es * est * est
            + et * est * est
            - 3 * es
            - 2 * es * es
            - et
            + 1
        )
        * s
        * t
    )
    denominator = 4 * es * (es - 1) * (et - 1) * (est - 1) ** 2 * s * t * (s + t)
    return numerator / denominator


def K3(s: float) -> float:
    e = exp(s)
    return (2 - 2 * e + s * e + s) / (4 * s * (e - 1) ** 2)


def H4(s: float, t: float) -> float:
    """H4(0, 0) = -1/8, so that the Ricci function Ht4 = H4 - H2 tends to -1/4"""
    return -(
        (exp(s) - 1)
        * (exp(t) - 1)
        * (s + t)
        / (8 * exp((s + t) / 2) * (exp(s + t) - 1) * s * t)
    )


# matrix families --------------------------------------------------------

Binary = Callable[[float, float], float]


def _times_s1(weight: Binary) -> Binary:
    return lambda s, t: weight(s, t) * S1(s, t)


def _times_h1(weight: Binary) -> Binary:
    return lambda s, t: weight(s, t) * H1(s, t)


_S_WEIGHTS: Dict[Tuple[int, int], Binary] = {
    (1, 2): lambda s, t: 1.0,
    (2, 1): lambda s, t: 1.0,
    (1, 3): lambda s, t: 0.5 * exp(-(s + t) / 2),
    (2, 3): lambda s, t: 0.5 * exp(-(s + t) / 2),
    (3, 1): lambda s, t: 0.5,
    (3, 2): lambda s, t: 0.5,
}

_W_WEIGHTS: Dict[Tuple[int, int], Binary] = {
    (1, 1): lambda s, t: 0.5 * cosh((s + t) / 2),
    (2, 2): lambda s, t: 0.5 * cosh((s + t) / 2),
    (1, 3): lambda s, t: (exp(-s - t) - 1) / 4,
    (2, 3): lambda s, t: (exp(-s - t) - 1) / 4,
    (3, 1): lambda s, t: 0.5 * sinh((s + t) / 2),
    (3, 2): lambda s, t: 0.5 * sinh((s + t) / 2),
}

_K_ENTRIES: Dict[Tuple[int, int], Callable[[float], float]] = {
    (1, 1): K_horizontal,
    (2, 2): K_horizontal,
    (1, 3): K_mixed_up,
    (2, 3): K_mixed_up,
    (3, 1): K_mixed_down,
    (3, 2): K_mixed_down,
    (3, 3): K_vertical,
}


def matrix_name(family: str, i: int, j: int) -> str:
    return f"{family}_{i}{j}"


# tilde functions --------------------------------------------------------


def K_tilde_horizontal(s: float) -> float:
    return (-1 + exp(s) + s * exp(s / 2)) / (4 * s * (1 + exp(s / 2)) ** 2)


def K_tilde_vertical(s: float) -> float:
    return 1 / (4 * exp(s / 2))


def K3_tilde(s: float) -> float:
    return (-1 + exp(s) + s * exp(s / 2)) / (4 * s * exp(s / 2) * (1 + exp(s / 2)) ** 2)


def W_tilde_horizontal(s: float, t: float) -> float:
    return (0.5 * cosh((s + t) / 2) - 0.5) * H1(s, t)


def H3_tilde(s: float, t: float) -> float:
    return H3(s, t) - H2(s, t)


def H4_tilde(s: float, t: float) -> float:
    return H4(s, t) - H2(s, t)


# Register with the reference factory
register_reference("K1", 1, K1, _SCALAR, _UNARY)
register_reference("K2", 1, K2, _SCALAR, _UNARY)
register_reference("H1", 2, H1, _SCALAR, _BINARY)
register_reference("H2", 2, H2, _SCALAR, _BINARY)
register_reference("S1", 2, S1, _ONE_FORM, _BINARY)
register_reference("W33", 2, W33, _ONE_FORM, _BINARY)
register_reference("H3", 2, H3, _ONE_FORM, _BINARY)
register_reference("K3", 1, K3, _ONE_FORM, _UNARY)
register_reference("H4", 2, H4, _ONE_FORM, _BINARY)

for (_i, _j), _k in _K_ENTRIES.items():
    register_reference(matrix_name("K", _i, _j), 1, _k, _ONE_FORM, _UNARY)
for (_i, _j), _w in _S_WEIGHTS.items():
    register_reference(matrix_name("S", _i, _j), 2, _times_s1(_w), _ONE_FORM, _BINARY)
for (_i, _j), _w in _W_WEIGHTS.items():
    register_reference(matrix_name("W", _i, _j), 2, _times_h1(_w), _ONE_FORM, _BINARY)
register_reference(matrix_name("W", 3, 3), 2, W33, _ONE_FORM, _BINARY)

register_reference("Kt_11", 1, K_tilde_horizontal, _RICCI, _UNARY)
register_reference("Kt_22", 1, K_tilde_horizontal, _RICCI, _UNARY)
register_reference("Kt_33", 1, K_tilde_vertical, _RICCI)
register_reference("Kt3", 1, K3_tilde, _RICCI, _UNARY)
register_reference("Wt_11", 2, W_tilde_horizontal, _RICCI, _BINARY)
register_reference("Wt_22", 2, W_tilde_horizontal, _RICCI, _BINARY)
register_reference("Ht3", 2, H3_tilde, _RICCI, _BINARY)
register_reference("Ht4", 2, H4_tilde, _RICCI, _BINARY)
