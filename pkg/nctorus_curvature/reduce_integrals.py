"""
Reduction of xi-integrals to radial integrals

Integrating b2 over xi in R^n leaves one-dimensional integrals over u in
[0, inf) of words interleaved with powers of b0(u) = (1 + u k^a)^-1. Conformal
metrics are reduced in spherical coordinates with u = |xi|^2; the
non-conformal metric uses xi_3 = eta, xi_1^2 + xi_2^2 = u (1 + eta^2), under
which b0(xi) = (1 + eta^2)^-1 b0(u).
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .core import SCALAR, BaseMetric, Coefficient, SymbolExpr, gamma_half
from .core.notation import format_term
from .core.symbols import XiMonomial
from .core.words import B0, Atom, Word, b0u, canonical, split_runs
from .resolvent import compute_b2

logger = logging.getLogger(__name__)

SPHERICAL = "spherical"
CYLINDRICAL = "cylindrical"


@dataclass(frozen=True)
class RadialIntegral:
    """
    coeff * int_0^inf u^u_power word du, where word carries b0(u) powers.

    The word reads k^head b0(u)^m0 rho_1 b0(u)^m1 ... rho_p b0(u)^mp with each
    rho_i a derivative atom followed by its k power.
    """

    coeff: Coefficient
    u_power: Fraction
    word: Word

    @property
    def head(self) -> int:
        runs, _ = split_runs(self.word)
        return runs[0][0]

    @property
    def ms(self) -> Tuple[int, ...]:
        runs, _ = split_runs(self.word)
        return tuple(m for _, m in runs)

    @property
    def rhos(self) -> Tuple[Tuple[Atom, int], ...]:
        runs, seps = split_runs(self.word)
        return tuple((atom, r) for atom, (r, _) in zip(seps, runs[1:]))

    @property
    def nu(self) -> Fraction:
        return Fraction(sum(self.ms)) - self.u_power

    @property
    def arity(self) -> int:
        return len(self.rhos)

    def __str__(self) -> str:
        return format_term(self.coeff, word=self.word, u_power=self.u_power)


# angular moments --------------------------------------------------------


def sphere_moment(exponents: Sequence[int]) -> Coefficient:
    """
    Integral of the monomial omega^e over the unit sphere in R^n.

    2 prod Gamma((e_i + 1) / 2) / Gamma((|e| + n) / 2), zero if any e_i is odd.
    """
    if any(e % 2 for e in exponents):
        return Coefficient.zero()
    value = Coefficient(Fraction(2))
    for e in exponents:
        value = value * gamma_half(e + 1)
    return value / gamma_half(sum(exponents) + len(exponents))


def eta_moment(c: int, q: Fraction) -> Coefficient:
    """
    Integral of eta^c (1 + eta^2)^-q over the real line.

    Raises:
        ValueError: If the integral diverges
    """
    if c % 2:
        return Coefficient.zero()
    twice = 2 * q - c - 1
    if twice <= 0 or twice.denominator != 1:
        raise ValueError(f"Divergent eta-integral: eta^{c} (1 + eta^2)^-{q}")
    return gamma_half(c + 1) * gamma_half(int(twice)) / gamma_half(int(2 * q))


# per-term reduction -----------------------------------------------------


def _radial_word(word: Word) -> Word:
    return canonical(b0u(a.value) if a.kind == B0 else a for a in word)  # type: ignore[arg-type]


def _b0_power(word: Word) -> int:
    return sum(a.value for a in word if a.kind == B0)  # type: ignore[misc]


def _reduce_spherical(
    coeff: Fraction, xi: XiMonomial, word: Word, metric: BaseMetric
) -> Optional[RadialIntegral]:
    moment = sphere_moment(xi)
    if moment.is_zero:
        return None
    u_power = Fraction(sum(xi) + len(xi) - 2, 2)
    value = moment * coeff * Fraction(1, 2) * metric.normalization
    return RadialIntegral(value, u_power, _radial_word(word))


def _reduce_cylindrical(
    coeff: Fraction, xi: XiMonomial, word: Word, metric: BaseMetric
) -> Optional[RadialIntegral]:
    a, b, c = xi
    theta = sphere_moment((a, b))
    if theta.is_zero or c % 2:
        return None
    half = Fraction(a + b, 2)
    eta = eta_moment(c, _b0_power(word) - 1 - half)
    value = theta * eta * coeff * Fraction(1, 2) * metric.normalization
    return RadialIntegral(value, half, _radial_word(word))


def reduce_conformal(expr: SymbolExpr, metric: BaseMetric) -> List[RadialIntegral]:
    """
    Spherical reduction of a symbol whose b0 depends on xi through k^a |xi|^2.

    Raises:
        ValueError: If the metric's leading powers are not all equal
    """
    if len(set(metric.leading_powers)) != 1:
        raise ValueError(
            f"Spherical reduction needs equal leading powers, got {metric.leading_powers} "
            f"for '{metric.metric_name}'"
        )
    return _collect(expr, metric, _reduce_spherical)


def reduce_nonconformal(expr: SymbolExpr, metric: BaseMetric) -> List[RadialIntegral]:
    """
    Reduction under the substitution xi_3 = eta, xi_1^2 + xi_2^2 = u (1 + eta^2).

    Raises:
        ValueError: If a_2 is not k^c (xi_1^2 + xi_2^2) + xi_3^2
    """
    c = metric.leading_powers
    if len(c) != 3 or c[0] != c[1] or c[0] == 0 or c[2] != 0:
        raise ValueError(
            f"Cylindrical reduction needs leading powers (c, c, 0), got {c} "
            f"for '{metric.metric_name}'"
        )
    return _collect(expr, metric, _reduce_cylindrical)


Reducer = Callable[[Fraction, XiMonomial, Word, BaseMetric], Optional[RadialIntegral]]


def _collect(expr: SymbolExpr, metric: BaseMetric, reducer: Reducer) -> List[RadialIntegral]:
    table: Dict[Tuple[Fraction, Word], Coefficient] = {}
    for (xi, word), coeff in expr.items():
        integral = reducer(coeff, xi, word, metric)
        if integral is None:
            continue
        key = (integral.u_power, integral.word)
        table[key] = table.get(key, Coefficient.zero()) + integral.coeff
    return [
        RadialIntegral(value, u_power, word)
        for (u_power, word), value in sorted(table.items())
        if not value.is_zero
    ]


def reduce_symbol(expr: SymbolExpr, metric: BaseMetric) -> List[RadialIntegral]:
    """Reduce with the metric's own scheme"""
    if metric.reduction == SPHERICAL:
        return reduce_conformal(expr, metric)
    if metric.reduction == CYLINDRICAL:
        return reduce_nonconformal(expr, metric)
    raise ValueError(f"Invalid reduction scheme: {metric.reduction}")


ReducedGrid = Tuple[Tuple[Tuple[RadialIntegral, ...], ...], ...]


@lru_cache(maxsize=None)
def full_reduced_b2(metric: BaseMetric, kind: str = SCALAR) -> ReducedGrid:
    """Grid of reduced b2 entries; the scalar case is a 1x1 grid"""
    b2 = compute_b2(metric, kind)
    grid = tuple(
        tuple(tuple(reduce_symbol(b2[i, j], metric)) for j in range(b2.size))
        for i in range(b2.size)
    )
    count = sum(len(entry) for row in grid for entry in row)
    logger.info(f"Reduced b2 of {metric.metric_name} ({kind}): {count} radial integrals")
    return grid


def radial_table(
    integrals: Sequence[RadialIntegral],
) -> Dict[Tuple[Fraction, Word], Coefficient]:
    """Lookup of coefficients by (u power, word)"""
    return {(r.u_power, r.word): r.coeff for r in integrals}

