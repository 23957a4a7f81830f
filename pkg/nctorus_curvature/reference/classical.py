"""
Classical curvature formulas

Commutative polynomials in the jets h_alpha (|alpha| <= 2) of the Weyl
factor, each monomial carrying a prefactor exp(c h). These are the limits the
noncommutative densities must reduce to once every commutator is set to zero.
"""

from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple, Union

Jet = Tuple[int, ...]
Jets = Tuple[Jet, ...]
MonomialKey = Tuple[Fraction, Jets]


def jets(*alphas: Iterable[int]) -> Jets:
    """Canonical product of jets, e.g. jets((3,), (3,)) for h_3 h_3"""
    return tuple(sorted(tuple(sorted(alpha)) for alpha in alphas))


class ClassicalExpr:
    """sum of c * exp(e h) * prod h_alpha in units of pi^(pi_half / 2)"""

    def __init__(
        self, pi_half: int = 0, terms: Optional[Dict[MonomialKey, Fraction]] = None
    ) -> None:
        self.pi_half = pi_half
        self._terms: Dict[MonomialKey, Fraction] = {}
        for (exponent, product), coeff in (terms or {}).items():
            self.add(exponent, product, coeff)

    def add(
        self, exponent: Union[Fraction, int], product: Jets, coeff: Union[Fraction, int]
    ) -> "ClassicalExpr":
        key = (Fraction(exponent), jets(*product))
        total = self._terms.get(key, Fraction(0)) + Fraction(coeff)
        if total:
            self._terms[key] = total
        else:
            self._terms.pop(key, None)
        return self

    def items(self) -> List[Tuple[MonomialKey, Fraction]]:
        return sorted(self._terms.items())

    def coefficient(self, exponent: Union[Fraction, int], product: Jets) -> Fraction:
        return self._terms.get((Fraction(exponent), jets(*product)), Fraction(0))

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def _check(self, other: "ClassicalExpr") -> None:
        if self.pi_half != other.pi_half and not (self.is_zero or other.is_zero):
            raise ValueError(
                f"Cannot combine classical expressions in units pi^({Fraction(self.pi_half, 2)}) "
                f"and pi^({Fraction(other.pi_half, 2)})"
            )

    def __add__(self, other: "ClassicalExpr") -> "ClassicalExpr":
        self._check(other)
        pi_half = other.pi_half if self.is_zero else self.pi_half
        out = ClassicalExpr(pi_half, dict(self._terms))
        for (exponent, product), coeff in other._terms.items():
            out.add(exponent, product, coeff)
        return out

    def __neg__(self) -> "ClassicalExpr":
        return self.scale(-1)

    def __sub__(self, other: "ClassicalExpr") -> "ClassicalExpr":
        return self + (-other)

    def scale(self, factor: Union[Fraction, int]) -> "ClassicalExpr":
        return ClassicalExpr(self.pi_half, {k: c * factor for k, c in self._terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ClassicalExpr):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return self.is_zero and other.is_zero
        return self.pi_half == other.pi_half and self._terms == other._terms

    def __repr__(self) -> str:
        return f"ClassicalExpr({self})"

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for (exponent, product), coeff in self.items():
            factors = [str(coeff)]
            if exponent:
                factors.append(f"exp({exponent}*h)")
            factors += ["h_" + "".join(str(j) for j in alpha) for alpha in product]
            parts.append("*".join(factors))
        body = " + ".join(parts).replace("+ -", "- ")
        if self.pi_half:
            return f"pi^({Fraction(self.pi_half, 2)}) * ({body})"
        return body


ClassicalGrid = List[List[ClassicalExpr]]


def _conformal3_scalar() -> ClassicalExpr:
    expr = ClassicalExpr(-3)
    for j in (1, 2, 3):
        expr.add(-1, ((j, j),), Fraction(-1, 12)).add(-1, ((j,), (j,)), Fraction(1, 24))
    return expr


def _conformal3_ricci() -> ClassicalGrid:
    grid = []
    for i in (1, 2, 3):
        row = []
        for j in (1, 2, 3):
            expr = ClassicalExpr(-3)
            if i == j:
                for l in (1, 2, 3):
                    expr.add(-1, ((l, l),), Fraction(-1, 8)).add(-1, ((l,), (l,)), Fraction(1, 8))
            expr.add(-1, ((i,), (j,)), Fraction(-1, 8)).add(-1, ((i, j),), Fraction(-1, 8))
            row.append(expr)
        grid.append(row)
    return grid


def _nonconformal3_scalar() -> ClassicalExpr:
    expr = ClassicalExpr(-3)
    expr.add(0, ((1, 1),), Fraction(-1, 24)).add(0, ((2, 2),), Fraction(-1, 24))
    expr.add(-2, ((3, 3),), Fraction(-1, 12)).add(-2, ((3,), (3,)), Fraction(1, 8))
    return expr


def _nonconformal3_ricci() -> ClassicalGrid:
    grid = [[ClassicalExpr(-3) for _ in range(3)] for _ in range(3)]
    for i in (0, 1):
        grid[i][i].add(-2, ((3,), (3,)), Fraction(1, 4)).add(-2, ((3, 3),), Fraction(-1, 8))
        grid[i][i].add(0, ((1, 1),), Fraction(-1, 8)).add(0, ((2, 2),), Fraction(-1, 8))
        grid[i][2].add(-1, ((i + 1, 3),), Fraction(-1, 8))
        grid[2][i].add(-1, ((i + 1, 3),), Fraction(-1, 8))
    grid[2][2].add(-2, ((3,), (3,)), Fraction(1, 4)).add(-2, ((3, 3),), Fraction(-1, 4))
    return grid


def _conformal2_scalar() -> ClassicalExpr:
    expr = ClassicalExpr(-2)
    expr.add(0, ((1, 1),), Fraction(-1, 12)).add(0, ((2, 2),), Fraction(-1, 12))
    return expr


def classical_formulas(metric_name: str, obj: str) -> ClassicalGrid:
    """
    Classical limit of a density; the scalar curvature is a 1x1 grid.

    Raises:
        ValueError: If no classical formula is known for this metric and object
    """
    if obj == "scalar":
        if metric_name == "conformal3":
            return [[_conformal3_scalar()]]
        if metric_name == "nonconformal3":
            return [[_nonconformal3_scalar()]]
        if metric_name == "conformal2":
            return [[_conformal2_scalar()]]
    elif obj == "ricci":
        if metric_name == "conformal3":
            return _conformal3_ricci()
        if metric_name == "nonconformal3":
            return _nonconformal3_ricci()
    raise ValueError(f"No classical formula for object '{obj}' of metric '{metric_name}'")
