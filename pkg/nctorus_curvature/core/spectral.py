"""
Spectral functions of the modular operator

A SpectralFunction is a finite sum of monomials

    coeff * F(s_1, ..., s_p) * exp(w . x) * prod f(...) * prod g(..., ...)

in the log variables x = log Delta of the operand slots. Each argument of F,
f and g is exp of a sum of some of the x's, which records how translation to
log k splits one operand slot into two.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Iterator, Optional, Sequence, Tuple, Union

import numpy as np
from scipy import special

from .coefficients import Coefficient
from .quadrature import QuadratureEvaluator

DELTA_COORDINATES = "delta"
NABLA_COORDINATES = "nabla"

CONFORMAL = "conformal"
NONCONFORMAL = "nonconformal"

Group = Tuple[int, ...]
Groups = Tuple[Group, ...]


@dataclass(frozen=True)
class FSpec:
    """
    The radial integral int_0^inf u^(sum m - nu) (1 + u)^-m0
    prod_j (1 + u prod_{h <= j} s_h^power)^-mj du.

    Raises:
        ValueError: If the integral diverges at 0 or at infinity
    """

    ms: Tuple[int, ...]
    nu: Fraction
    power: Fraction = Fraction(1)
    family: str = NONCONFORMAL

    def __post_init__(self) -> None:
        object.__setattr__(self, "nu", Fraction(self.nu))
        object.__setattr__(self, "power", Fraction(self.power))
        if not self.ms:
            raise ValueError("An F spec needs at least one resolvent power")
        if self.u_exponent <= -1 or self.nu <= 1:
            raise ValueError(
                f"Non-integrable F spec {self.name}: u^{self.u_exponent} with decay u^-{self.nu}"
            )

    @property
    def arity(self) -> int:
        return len(self.ms) - 1

    @property
    def u_exponent(self) -> Fraction:
        return Fraction(sum(self.ms)) - self.nu

    @property
    def name(self) -> str:
        indices = ",".join(str(m) for m in self.ms)
        if self.family == CONFORMAL:
            return f"F_{{{indices}}}"
        return f"F^[{self.nu}]_{{{indices}}}"

    def at_unity(self) -> float:
        """Value at s = (1, ..., 1), a Beta integral"""
        return float(special.beta(float(self.u_exponent) + 1, float(self.nu) - 1))

    def integrand(self, point: Sequence[float]) -> Callable[[float], float]:
        scales = []
        acc = 1.0
        for s in point:
            acc *= s ** float(self.power)
            scales.append(acc)
        w = float(self.u_exponent)
        m0 = self.ms[0]
        rest = self.ms[1:]

        def value(u: float) -> float:
            out = u**w * (1.0 + u) ** -m0
            for scale, m in zip(scales, rest):
                if m:
                    out *= (1.0 + u * scale) ** -m
            return out

        return value


@lru_cache(maxsize=200_000)
def _quadrature_F(spec: FSpec, point: Tuple[float, ...], tolerance: float) -> float:
    if spec.arity == 0:
        return spec.at_unity()
    return QuadratureEvaluator(tolerance).half_line(spec.integrand(point))


def quadrature_F(spec: FSpec, point: Sequence[float], tolerance: Optional[float] = None) -> float:
    """F at a point of (0, inf)^p by adaptive quadrature, memoized"""
    if len(point) != spec.arity:
        raise ValueError(f"{spec.name} takes {spec.arity} arguments, got {len(point)}")
    if any(s <= 0 for s in point):
        raise ValueError(f"{spec.name} needs positive arguments, got {tuple(point)}")
    tol = QuadratureEvaluator(tolerance).tolerance
    return _quadrature_F(spec, tuple(float(s) for s in point), tol)


# translation factors ----------------------------------------------------


def expansional_f(x: float, width: int) -> float:
    """int_0^1 exp(u x / width) du"""
    z = x / width
    if abs(z) < 1e-8:
        return 1.0 + z / 2 + z * z / 6
    return math.expm1(z) / z


def expansional_g(x: float, y: float, width: int) -> float:
    """int_0^1 int_0^u exp((u x + v y) / width) dv du"""
    a, b = x / width, y / width
    if min(abs(a), abs(b), abs(a + b)) < 1e-2:
        return QuadratureEvaluator.simplex(lambda s, t: np.exp(a * s + b * t))
    return (math.exp(a) * (a * math.expm1(b) - b) + b) / (a * b * (a + b))


# monomials --------------------------------------------------------------


@dataclass(frozen=True)
class Factor:
    """A translation factor f or g whose arguments are sums of log variables"""

    name: str
    groups: Groups
    width: int

    def remap(self, mapping: Sequence[Group]) -> "Factor":
        return Factor(self.name, _remap_groups(self.groups, mapping), self.width)

    def value(self, x: Sequence[float]) -> float:
        args = [sum(x[v] for v in group) for group in self.groups]
        if self.name == "f":
            return expansional_f(args[0], self.width)
        return expansional_g(args[0], args[1], self.width)


@dataclass(frozen=True)
class Monomial:
    """F(exp(groups . x)) * exp(weights . x) * prod factors"""

    spec: FSpec
    groups: Groups
    weights: Tuple[Fraction, ...]
    factors: Tuple[Factor, ...] = field(default=())

    @property
    def arity(self) -> int:
        return len(self.weights)

    def shifted(self, extra: Sequence[Fraction]) -> "Monomial":
        weights = tuple(w + e for w, e in zip(self.weights, extra))
        return Monomial(self.spec, self.groups, weights, self.factors)

    def split(self, mapping: Sequence[Group], added: Sequence[Factor], arity: int) -> "Monomial":
        """Substitute x_h -> sum of the new variables mapping[h]"""
        weights = [Fraction(0)] * arity
        for h, targets in enumerate(mapping):
            for v in targets:
                weights[v] = self.weights[h]
        factors = tuple(f.remap(mapping) for f in self.factors) + tuple(added)
        return Monomial(
            self.spec,
            _remap_groups(self.groups, mapping),
            tuple(weights),
            tuple(sorted(factors, key=repr)),
        )


def _remap_groups(groups: Groups, mapping: Sequence[Group]) -> Groups:
    return tuple(tuple(sorted(v for h in group for v in mapping[h])) for group in groups)


FEvaluator = Callable[[FSpec, Tuple[float, ...]], float]


class SpectralFunction:
    """Finite sum of monomials with exact coefficients"""

    def __init__(
        self,
        arity: int,
        terms: Optional[Dict[Monomial, Coefficient]] = None,
        coordinates: str = DELTA_COORDINATES,
    ):
        self.arity = arity
        self.coordinates = coordinates
        self._terms: Dict[Monomial, Coefficient] = {}
        for monomial, coeff in (terms or {}).items():
            if not coeff.is_zero:
                self._terms[monomial] = coeff

    @classmethod
    def leaf(
        cls, spec: FSpec, coeff: Union[Coefficient, Fraction] = Fraction(1)
    ) -> "SpectralFunction":
        if not isinstance(coeff, Coefficient):
            coeff = Coefficient(coeff)
        groups = tuple((h,) for h in range(spec.arity))
        weights = tuple(Fraction(0) for _ in range(spec.arity))
        return cls(spec.arity, {Monomial(spec, groups, weights): coeff})

    def items(self) -> Iterator[Tuple[Monomial, Coefficient]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def _check(self, other: "SpectralFunction") -> None:
        if self.arity != other.arity or self.coordinates != other.coordinates:
            raise ValueError(
                f"Cannot combine spectral functions of arity {self.arity}/{other.arity} "
                f"in {self.coordinates}/{other.coordinates} coordinates"
            )

    def __add__(self, other: "SpectralFunction") -> "SpectralFunction":
        self._check(other)
        terms = dict(self._terms)
        for monomial, coeff in other._terms.items():
            terms[monomial] = terms.get(monomial, Coefficient.zero()) + coeff
        return SpectralFunction(self.arity, terms, self.coordinates)

    def __neg__(self) -> "SpectralFunction":
        return self.scale(Fraction(-1))

    def __sub__(self, other: "SpectralFunction") -> "SpectralFunction":
        return self + (-other)

    def scale(self, factor: Union[Coefficient, Fraction, int]) -> "SpectralFunction":
        return SpectralFunction(
            self.arity, {m: c * factor for m, c in self._terms.items()}, self.coordinates
        )

    def map_monomials(
        self, fn: Callable[[Monomial], Monomial], arity: Optional[int] = None
    ) -> "SpectralFunction":
        out = SpectralFunction(self.arity if arity is None else arity, coordinates=self.coordinates)
        for monomial, coeff in self._terms.items():
            new = fn(monomial)
            out._terms[new] = out._terms.get(new, Coefficient.zero()) + coeff
        out._terms = {m: c for m, c in out._terms.items() if not c.is_zero}
        return out

    def with_coordinates(self, coordinates: str) -> "SpectralFunction":
        return SpectralFunction(self.arity, dict(self._terms), coordinates)

    def log_point(self, point: Sequence[float]) -> Tuple[float, ...]:
        if len(point) != self.arity:
            raise ValueError(f"Expected {self.arity} arguments, got {len(point)}")
        if self.coordinates == DELTA_COORDINATES:
            if any(p <= 0 for p in point):
                raise ValueError(f"Delta coordinates must be positive, got {tuple(point)}")
            return tuple(math.log(p) for p in point)
        return tuple(float(p) for p in point)

    def evaluate(self, point: Sequence[float], f_eval: Optional[FEvaluator] = None) -> float:
        """
        Numeric value at a point given in this function's coordinates.

        Coefficients are evaluated with their powers of pi.
        """
        evaluate_f = f_eval or (lambda spec, s: quadrature_F(spec, s))
        x = self.log_point(point)
        total = 0.0
        for monomial, coeff in self._terms.items():
            s = tuple(math.exp(sum(x[v] for v in group)) for group in monomial.groups)
            value = float(coeff) * evaluate_f(monomial.spec, s)
            exponent = sum(float(w) * xv for w, xv in zip(monomial.weights, x))
            if exponent:
                value *= math.exp(exponent)
            for factor in monomial.factors:
                value *= factor.value(x)
            total += value
        return total
