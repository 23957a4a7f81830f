"""
Exact coefficients of the form rational x pi^(pi_half/2)

Angular integrals over spheres and the heat-trace normalization only ever
produce half-integer powers of pi, so they are carried symbolically until a
value is finally evaluated.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class Coefficient:
    """An exact number rat * pi^(pi_half / 2)"""

    rat: Fraction
    pi_half: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "rat", Fraction(self.rat))
        if self.rat == 0:
            object.__setattr__(self, "pi_half", 0)

    @classmethod
    def zero(cls) -> "Coefficient":
        return cls(Fraction(0))

    @classmethod
    def one(cls) -> "Coefficient":
        return cls(Fraction(1))

    @property
    def is_zero(self) -> bool:
        return self.rat == 0

    def __add__(self, other: "Coefficient") -> "Coefficient":
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        if self.pi_half != other.pi_half:
            raise ValueError(
                f"Cannot add coefficients with different powers of pi: {self} and {other}"
            )
        return Coefficient(self.rat + other.rat, self.pi_half)

    def __neg__(self) -> "Coefficient":
        return Coefficient(-self.rat, self.pi_half)

    def __sub__(self, other: "Coefficient") -> "Coefficient":
        return self + (-other)

    def __mul__(self, other: Union["Coefficient", Scalar]) -> "Coefficient":
        if isinstance(other, Coefficient):
            return Coefficient(self.rat * other.rat, self.pi_half + other.pi_half)
        return Coefficient(self.rat * other, self.pi_half)

    __rmul__ = __mul__

    def __truediv__(self, other: Union["Coefficient", Scalar]) -> "Coefficient":
        if isinstance(other, Coefficient):
            return Coefficient(self.rat / other.rat, self.pi_half - other.pi_half)
        return Coefficient(self.rat / Fraction(other), self.pi_half)

    def __float__(self) -> float:
        return float(self.rat) * math.pi ** (self.pi_half / 2)

    def __str__(self) -> str:
        if self.pi_half == 0:
            return str(self.rat)
        return f"{self.rat}*pi^({Fraction(self.pi_half, 2)})"


def gamma_half(twice: int) -> Coefficient:
    """Exact Gamma(twice / 2) for a positive integer argument twice"""
    if twice <= 0:
        raise ValueError(f"Invalid Gamma argument: {twice}/2 is not positive")
    if twice % 2 == 0:
        return Coefficient(Fraction(math.factorial(twice // 2 - 1)))
    # Gamma(n + 1/2) = (2n)! / (4^n n!) * sqrt(pi)
    n = (twice - 1) // 2
    return Coefficient(
        Fraction(math.factorial(2 * n), 4**n * math.factorial(n)),
        pi_half=1,
    )
