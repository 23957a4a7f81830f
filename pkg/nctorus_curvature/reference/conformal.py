"""
Curvature functions of the conformally flat 3-torus

All functions take nabla coordinates. K and H give the scalar curvature;
F, T, W and S give the heat density of the Laplacian on 1-forms.
"""

from math import exp

from .functions import register_reference

_UNARY = ((1,),)
_BINARY = ((1, 0), (0, 1), (1, 1))


def K(s: float) -> float:
    return (1 - exp(s / 3)) / (s * (exp(s / 6) + exp(s / 2)))


def H(s: float, t: float) -> float:
    es, et = exp(s / 3), exp(t / 3)
    numerator = (es + 3) * s * (et - 1) - (es - 1) * (3 * et + 1) * t
    denominator = s * t * (s + t) * exp((s + t) / 6) * (exp((s + t) / 3) + 1)
    return -3 * numerator / denominator


def F(s: float) -> float:
    return exp(-s / 2) * (exp(s) - 1) / (2 * (1 + exp(s / 3)) * s)


def T(s: float, t: float) -> float:
    es, et = exp(s / 3), exp(t / 3)
    numerator = 3 * s * (1 - et) * (exp((2 * s + t) / 3) - exp((s + t) / 3) - es * es - 1) + (
        3 * t * (1 - es) * (exp((s + 2 * t) / 3) + es + et - 1)
    )
    denominator = s * t * (s + t) * exp((3 * s + t) / 6) * (exp((s + t) / 3) + 1)
    return numerator / denominator


def W(s: float, t: float) -> float:
    e = exp((s + t) / 3)
    numerator = 6 * (e + e * e + 1) * (s * e - exp(s / 3) * (s + t) + t)
    denominator = s * t * (s + t) * exp((s + t) / 2) * (e + 1)
    return numerator / denominator


def S(s: float, t: float) -> float:
    es, et = exp(s / 3), exp(t / 3)
    first = 3 * s * (et - 1) * (
        2 * exp((s + t) / 3) + exp((2 * s + 2 * t) / 3) - exp((2 * s + t) / 3) + 1
    )
    second = 3 * t * (es - 1) * (
        2 * exp((s + 2 * t) / 3) + exp((2 * s + 3 * t) / 3) - exp((s + t) / 3) + et
    )
    denominator = s * t * (s + t) * exp((s + t) / 2) * (exp((s + t) / 3) + 1)
    return (first - second) / denominator


def f_translation(s: float) -> float:
    """f(x) = int_0^1 x^(u/6) du in nabla coordinates"""
    z = s / 6
    return (exp(z) - 1) / z


def g_translation(s: float, t: float) -> float:
    """g(x, y) = int_0^1 int_0^u x^(u/6) y^(v/6) dv du in nabla coordinates"""
    a, b = s / 6, t / 6
    return (exp(a) * (a * (exp(b) - 1) - b) + b) / (a * b * (a + b))


# Register with the reference factory
register_reference("K", 1, K, "scalar curvature, conformal 3-torus", _UNARY)
register_reference("H", 2, H, "scalar curvature, conformal 3-torus", _BINARY)
register_reference("F", 1, F, "1-form heat density, conformal 3-torus", _UNARY)
register_reference("T", 2, T, "1-form heat density, conformal 3-torus", _BINARY)
register_reference("W", 2, W, "1-form heat density, conformal 3-torus", _BINARY)
register_reference("S", 2, S, "1-form heat density, conformal 3-torus", _BINARY)
register_reference("f_conformal", 1, f_translation, "log k translation, w = 6", _UNARY)
register_reference("g_conformal", 2, g_translation, "log k translation, w = 6", _BINARY)
