"""
Parametrix of the resolvent

Symbols b0, b1, b2 of the parametrix of (P - lambda) with lambda frozen at -1,
for scalar Laplacians and for Laplacians on 1-forms (entrywise, with the
principal symbol a scalar times the identity).
"""

import itertools
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Sequence, Tuple

from .core import SCALAR, BaseMetric, MatrixSymbol, SymbolExpr, delta, xi_partial
from .core.symbols import HasLeadingPowers, XiMonomial, sum_exprs
from .core.words import Atom, Word, b0_degree, split_runs

logger = logging.getLogger(__name__)

Graded = List[Tuple[int, MatrixSymbol]]


@dataclass(frozen=True, eq=False)
class BTriple:
    """The parametrix terms; b0 is the formal atom (1 + a_2)^-1"""

    metric_name: str
    kind: str
    b0: SymbolExpr
    b1: MatrixSymbol
    b2: MatrixSymbol


def multi_indices(dimension: int, order: int) -> Iterable[Tuple[int, ...]]:
    """Sorted multi-indices alpha of length order over directions 1..dimension"""
    return itertools.combinations_with_replacement(range(1, dimension + 1), order)


def alpha_factorial(alpha: Sequence[int]) -> int:
    return math.prod(math.factorial(alpha.count(j)) for j in set(alpha))


def _xi_partial_matrix(
    alpha: Sequence[int], m: MatrixSymbol, metric: HasLeadingPowers
) -> MatrixSymbol:
    for j in alpha:
        m = m.map(lambda e, j=j: xi_partial(j, e, metric))
    return m


def _delta_matrix(
    alpha: Sequence[int], m: MatrixSymbol, metric: HasLeadingPowers
) -> MatrixSymbol:
    for j in alpha:
        m = m.map(lambda e, j=j: delta(j, e, metric))
    return m


def _b0(metric: BaseMetric) -> SymbolExpr:
    return SymbolExpr.b0(metric.dimension)


@lru_cache(maxsize=None)
def compute_b1(metric: BaseMetric, kind: str = SCALAR) -> MatrixSymbol:
    """
    b1 = -b0 a1 b0 - sum_j d_j(b0) delta_j(a2) b0

    Raises:
        ValueError: If the principal symbol is not a_2 times the identity
    """
    metric.validate(kind)
    _, a1, _ = metric.homogeneous_parts(kind)
    b0 = _b0(metric)
    a2 = metric.a2_scalar()
    n = metric.dimension
    correction = sum_exprs(
        n, (xi_partial(j, b0, metric) * delta(j, a2) * b0 for j in range(1, n + 1))
    )
    b1 = -(a1.left(b0).right(b0)) - MatrixSymbol.scalar(correction, a1.size)
    count = sum(len(e) for _, _, e in b1.entries())
    logger.debug(f"b1 of {metric.metric_name} ({kind}): {count} terms")
    return b1


@lru_cache(maxsize=None)
def compute_b2(metric: BaseMetric, kind: str = SCALAR) -> MatrixSymbol:
    """
    The second parametrix term at lambda = -1.

    b2 = -b0 a0 b0 - b1 a1 b0
         - sum_i [d_i(b0) delta_i(a1) b0 + d_i(b1) delta_i(a2) b0 + 1/2 d_i^2(b0) delta_i^2(a2) b0]
         - sum_{i<j} d_i d_j(b0) delta_i delta_j(a2) b0
    """
    _, a1, a0 = metric.homogeneous_parts(kind)
    b1 = compute_b1(metric, kind)
    b0 = _b0(metric)
    a2 = metric.a2_scalar()
    n = metric.dimension
    size = a1.size

    b2 = -(a0.left(b0).right(b0)) - (b1 @ a1).right(b0)
    for i in range(1, n + 1):
        d_b0 = xi_partial(i, b0, metric)
        b2 = b2 - _delta_matrix((i,), a1, metric).left(d_b0).right(b0)
        b2 = b2 - _xi_partial_matrix((i,), b1, metric).right(delta(i, a2) * b0)
    second = []
    for alpha in multi_indices(n, 2):
        weight = Fraction(1, alpha_factorial(alpha))
        d_b0 = xi_partial(alpha[1], xi_partial(alpha[0], b0, metric), metric)
        d_a2 = delta(alpha[1], delta(alpha[0], a2))
        second.append((d_b0 * d_a2 * b0).scale(weight))
    b2 = b2 - MatrixSymbol.scalar(sum_exprs(n, second), size)

    logger.info(
        f"b2 of {metric.metric_name} ({kind}): "
        f"{sum(len(e) for _, _, e in b2.entries())} terms"
    )
    return b2


def compute_parametrix(metric: BaseMetric, kind: str = SCALAR) -> BTriple:
    return BTriple(
        metric_name=metric.metric_name,
        kind=kind,
        b0=_b0(metric),
        b1=compute_b1(metric, kind),
        b2=compute_b2(metric, kind),
    )


def b1_partial_term(metric: BaseMetric, i: int) -> SymbolExpr:
    """The scalar sub-expression d_i(b1) delta_i(a2) b0 of b2"""
    b1 = compute_b1(metric, SCALAR)[0, 0]
    return xi_partial(i, b1, metric) * delta(i, metric.a2_scalar()) * _b0(metric)


# homogeneity ------------------------------------------------------------


def homogeneity(xi: XiMonomial, word: Word) -> int:
    """Joint degree of a term at lambda = -1: xi-degree minus twice the b0 power"""
    return sum(xi) - 2 * b0_degree(word)


def homogeneity_defects(
    symbol: MatrixSymbol, expected: int
) -> List[Tuple[int, int, XiMonomial, Word]]:
    """Terms of a matrix symbol whose degree differs from expected"""
    defects = []
    for i, j, expr in symbol.entries():
        for (xi, word), _ in expr.items():
            if homogeneity(xi, word) != expected:
                defects.append((i, j, xi, word))
    return defects


# symbol product ---------------------------------------------------------


def symbol_product_truncated(
    p: Graded, q: Graded, order_cut: int, metric: HasLeadingPowers
) -> Dict[int, MatrixSymbol]:
    """
    Truncated composition sum_alpha 1/alpha! d^alpha(p) delta^alpha(q).

    Args:
        p: (declared order, symbol) pairs of the left factor
        q: (declared order, symbol) pairs of the right factor
        order_cut: lowest declared order kept
        metric: supplies the leading powers used by the xi-derivatives of b0

    Returns:
        Map from declared order to the summed matrix symbol of that order
    """
    out: Dict[int, MatrixSymbol] = {}
    for op_, ps in p:
        for oq, qs in q:
            dimension = ps.dimension
            for size in range(0, op_ + oq - order_cut + 1):
                order = op_ + oq - size
                for alpha in multi_indices(dimension, size):
                    weight = Fraction(1, alpha_factorial(alpha))
                    left = _xi_partial_matrix(alpha, ps, metric)
                    right = _delta_matrix(alpha, qs, metric)
                    piece = (left @ right).scale(weight)
                    out[order] = out[order] + piece if order in out else piece
    return out


# exact evaluation -------------------------------------------------------

Skeleton = Tuple[Atom, ...]


def skeleton_values(
    expr: SymbolExpr,
    leading_powers: Sequence[int],
    xi_point: Sequence[int],
    kappas: Sequence[Fraction],
) -> Dict[Skeleton, Fraction]:
    """
    Evaluate a symbol-stage expression at a numeric xi, grouped by derivative skeleton.

    Every run k^r b0^m between derivative atoms is a function of k; run number i
    is evaluated at its own value kappa_i, which separates the runs the way the
    rearrangement of words does. All arithmetic is exact, so agreement at a few
    rational points is a sharp identity test.
    """
    out: Dict[Skeleton, Fraction] = {}
    for (xi, word), c in expr.items():
        runs, seps = split_runs(word)
        value = Fraction(c)
        for x, e in zip(xi_point, xi):
            value *= Fraction(x) ** e
        for slot, (r, m) in enumerate(runs):
            kappa = kappas[slot]
            value *= kappa**r
            if m:
                a2 = 1 + sum(
                    kappa**c_l * Fraction(x) ** 2 for c_l, x in zip(leading_powers, xi_point)
                )
                value /= a2**m
        key = tuple(seps)
        out[key] = out.get(key, Fraction(0)) + value
    return {k: v for k, v in out.items() if v}


_XI_POINTS = ((1, 2, 3), (2, -1, 1), (3, 1, -2))
_KAPPAS = tuple(Fraction(p, q) for p, q in ((2, 1), (3, 2), (5, 3), (7, 4), (4, 3), (9, 5)))


def vanishes(
    expr: SymbolExpr, leading_powers: Sequence[int], constant: Fraction = Fraction(0)
) -> bool:
    """Whether expr equals the given constant at every test point"""
    for point in _XI_POINTS:
        values = skeleton_values(expr, leading_powers, point[: expr.dimension], _KAPPAS)
        if constant:
            values[()] = values.get((), Fraction(0)) - constant
        if any(values.values()):
            return False
    return True


def parametrix_check(metric: BaseMetric, kind: str = SCALAR) -> Dict[int, bool]:
    """
    Compose (b0 + b1 + b2) with (a2 + 1 + a1 + a0) down to order -2.

    Returns:
        For each order 0, -1, -2 whether it equals the identity (order 0)
        or vanishes (orders -1 and -2)
    """
    a2, a1, a0 = metric.homogeneous_parts(kind)
    size = a2.size
    n = metric.dimension
    identity = MatrixSymbol.identity(size, n)
    b0 = MatrixSymbol.scalar(_b0(metric), size)
    p = [(-2, b0), (-3, compute_b1(metric, kind)), (-4, compute_b2(metric, kind))]
    q = [(2, a2 + identity), (1, a1), (0, a0)]
    product = symbol_product_truncated(p, q, -2, metric)

    results: Dict[int, bool] = {}
    for order in (0, -1, -2):
        matrix = product.get(order, MatrixSymbol.zeros(size, n))
        ok = True
        for i, j, expr in matrix.entries():
            target = Fraction(1) if order == 0 and i == j else Fraction(0)
            if not vanishes(expr, metric.leading_powers, target):
                ok = False
                break
        results[order] = ok
    logger.info(f"Parametrix check for {metric.metric_name} ({kind}): {results}")
    return results

