"""
Curvature densities of the perturbed metrics

Each density runs the full pipeline

    b2 -> radial integrals -> rearrangement -> log k translation
       -> anticommutator/commutator basis -> nabla coordinates

and is then compared against the closed-form results, abelianized into a
classical formula, or paired against a constant matrix.
"""

import logging
import math
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .core import ONE_FORM, SCALAR, BaseMetric, get_metric
from .core.notation import format_word
from .core.spectral import FEvaluator, SpectralFunction
from .core.words import Word, dlogk
from .logk import CurvatureExpression, reported_value, split_sym_antisym, to_nabla, translate
from .models import CheckResult, ComparisonReport, ComparisonRow, VerificationReport, WordTable
from .rearrange import rearrange_integrals
from .reduce_integrals import RadialIntegral, full_reduced_b2
from .reference import ClassicalExpr, ClassicalGrid, ExpectedWord, eval_reference
from .reference import expected_density
from .reference.theorems import ONE_FORM_DENSITY, RICCI

logger = logging.getLogger(__name__)

DensityGrid = List[List[CurvatureExpression]]
Point = Tuple[float, ...]

LIMIT_EPS = 1e-6
LIMIT_TOLERANCE = 1e-6
MAX_DENOMINATOR = 96


def curvature_pipeline(
    integrals: Sequence[RadialIntegral], metric: BaseMetric
) -> CurvatureExpression:
    """Radial integrals of one density entry to a CurvatureExpression"""
    spectral = rearrange_integrals(integrals, metric)
    translated = translate(spectral, metric.modular_exponent)
    expr = to_nabla(split_sym_antisym(translated, metric.density_pi_half))
    logger.debug(
        f"{metric.metric_name}: {len(spectral)} spectral terms, "
        f"{len(translated)} log k terms, {len(expr)} basis words"
    )
    return expr


@lru_cache(maxsize=None)
def _density(metric: BaseMetric, kind: str) -> Tuple[Tuple[CurvatureExpression, ...], ...]:
    grid = full_reduced_b2(metric, kind)
    out = tuple(tuple(curvature_pipeline(entry, metric) for entry in row) for row in grid)
    words = sum(len(expr) for row in out for expr in row)
    logger.info(f"Density of {metric.metric_name} ({kind}): {words} basis words")
    return out


def scalar_density(metric: BaseMetric) -> CurvatureExpression:
    """The scalar curvature density a_2 of the Laplacian on functions"""
    return _density(metric, SCALAR)[0][0]


def one_form_density(metric: BaseMetric) -> DensityGrid:
    """
    The 3x3 heat density a_2 of the Laplacian on 1-forms.

    Raises:
        ValueError: If the metric defines no Laplacian on 1-forms
    """
    return [list(row) for row in _density(metric, ONE_FORM)]


def ricci_density(metric: BaseMetric) -> DensityGrid:
    """R (x) I - a_2 of the Laplacian on 1-forms, entrywise"""
    scalar = scalar_density(metric)
    one_form = one_form_density(metric)
    zero = CurvatureExpression(scalar.pi_half)
    size = len(one_form)
    return [
        [(scalar if i == j else zero) - one_form[i][j] for j in range(size)] for i in range(size)
    ]


def density(metric: BaseMetric, obj: str) -> DensityGrid:
    """
    Density grid of a curvature object; the scalar density is a 1x1 grid.

    Raises:
        ValueError: If the object is unknown
    """
    if obj == SCALAR:
        return [[scalar_density(metric)]]
    if obj == ONE_FORM_DENSITY:
        return one_form_density(metric)
    if obj == RICCI:
        return ricci_density(metric)
    raise ValueError(f"Invalid object: {obj}")


def ricci_functional(ricci: DensityGrid, matrix: Sequence[Sequence[float]]) -> CurvatureExpression:
    """
    Density of the Ricci functional paired with a constant matrix F.

    Returns:
        sum_ij F_ji Ric_ij

    Raises:
        ValueError: If F is not square of the size of the grid
    """
    size = len(ricci)
    if len(matrix) != size or any(len(row) != size for row in matrix):
        raise ValueError(f"Invalid pairing matrix: expected {size}x{size}")
    total = CurvatureExpression(ricci[0][0].pi_half)
    for i in range(size):
        for j in range(size):
            weight = Fraction(matrix[j][i])
            if weight:
                total = total + ricci[i][j].scale(weight)
    return total


# abelianization ---------------------------------------------------------


def limit_at_origin(
    fn: SpectralFunction,
    pi_half: int,
    eps: float = LIMIT_EPS,
    f_eval: Optional[FEvaluator] = None,
) -> float:
    """Limit at s = 0 by Richardson extrapolation from eps and eps / 2"""
    if fn.arity == 0:
        return reported_value(fn, (), pi_half, f_eval)
    coarse = reported_value(fn, (eps,) * fn.arity, pi_half, f_eval)
    fine = reported_value(fn, (eps / 2,) * fn.arity, pi_half, f_eval)
    return 2 * fine - coarse


def rationalize(value: float, label: str = "", tolerance: float = LIMIT_TOLERANCE) -> Fraction:
    """
    Nearest fraction with denominator at most 96.

    Raises:
        ValueError: If no such fraction lies within tolerance
    """
    candidate = Fraction(value).limit_denominator(MAX_DENOMINATOR)
    if abs(float(candidate) - value) > tolerance:
        raise ValueError(f"non-convergent limit {value!r} for {label or 'coefficient'}")
    return candidate


def abelianize(
    expr: CurvatureExpression, metric: BaseMetric, f_eval: Optional[FEvaluator] = None
) -> ClassicalExpr:
    """
    Classical limit of a density.

    Coefficient functions are replaced by their values at the origin, commutators
    vanish, and delta^alpha(log k) becomes log_scale * h_alpha.
    """
    scale = metric.log_scale
    out = ClassicalExpr(expr.pi_half)
    for (prefix, word), fn in sorted(expr.ordered().items(), key=lambda kv: repr(kv[0])):
        label = f"k^{prefix} {format_word(word, unicode=False)}"
        value = rationalize(limit_at_origin(fn, expr.pi_half, f_eval=f_eval), label)
        if value:
            jets = tuple(atom.value for atom in word)
            out.add(prefix * scale, jets, value * scale ** len(word))  # type: ignore[arg-type]
    return out


def abelianize_grid(grid: DensityGrid, metric: BaseMetric) -> ClassicalGrid:
    return [[abelianize(expr, metric) for expr in row] for row in grid]


# comparison -------------------------------------------------------------


def grid_points(arity: int, grid: Tuple[float, float, int] = (-3.0, 3.0, 25)) -> List[Point]:
    """
    Evaluation points for words of the given arity.

    Unary words get count points on [start, stop]; binary words a square grid
    with about count points in total.
    """
    start, stop, count = grid
    if arity == 0:
        return [()]
    per_axis = count if arity == 1 else max(1, round(count ** (1 / arity)))
    axis = [float(v) for v in np.linspace(start, stop, per_axis)]
    points: List[Point] = [()]
    for _ in range(arity):
        points = [p + (v,) for p in points for v in axis]
    return points


def _points_for(
    arity: int, grid: Tuple[float, float, int], points: Optional[Sequence[Sequence[float]]]
) -> List[Point]:
    if points is None:
        return grid_points(arity, grid)
    return [tuple(float(v) for v in p[:arity]) for p in points]


def _rows(
    engine: Optional[SpectralFunction],
    reference: Optional[ExpectedWord],
    points: Sequence[Point],
    pi_half: int,
    f_eval: Optional[FEvaluator],
) -> List[ComparisonRow]:
    rows = []
    for point in points:
        value = 0.0 if engine is None else reported_value(engine, point, pi_half, f_eval)
        expected = 0.0 if reference is None else reference.evaluate(point)
        error = abs(value - expected)
        rows.append(
            ComparisonRow(
                point=point,
                engine=value,
                reference=expected,
                abs_err=error,
                rel_err=error / (1 + abs(expected)),
            )
        )
    return rows


def compare_grids(
    metric_name: str,
    obj: str,
    engine: DensityGrid,
    expected: List[List[Dict[Tuple[int, Word], ExpectedWord]]],
    grid: Tuple[float, float, int] = (-3.0, 3.0, 25),
    tol: float = 1e-6,
    points: Optional[Sequence[Sequence[float]]] = None,
    f_eval: Optional[FEvaluator] = None,
) -> ComparisonReport:
    """Word-by-word comparison of two density grids over the union of their words"""
    tables: List[WordTable] = []
    size = len(engine)
    for i in range(size):
        for j in range(size):
            ordered = engine[i][j].ordered()
            reference = expected[i][j] if i < len(expected) and j < len(expected[i]) else {}
            for prefix, word in sorted(set(ordered) | set(reference), key=repr):
                rows = _rows(
                    ordered.get((prefix, word)),
                    reference.get((prefix, word)),
                    _points_for(len(word), grid, points),
                    engine[i][j].pi_half,
                    f_eval,
                )
                tables.append(
                    WordTable(
                        entry=(i + 1, j + 1) if size > 1 else None,
                        prefix=prefix,
                        basis_word=format_word(word, unicode=False),
                        rows=rows,
                    )
                )
    worst = max((table.worst for table in tables), default=0.0)
    passed = worst <= tol
    logger.info(
        f"Compared {metric_name} {obj}: {len(tables)} word tables, worst error {worst:.3e}"
    )
    return ComparisonReport(
        metric=metric_name,
        object=obj,
        tolerance=tol,
        tables=tables,
        worst_error=worst,
        passed=passed,
    )


def compare(
    metric: BaseMetric,
    obj: str,
    grid: Tuple[float, float, int] = (-3.0, 3.0, 25),
    tol: float = 1e-6,
    points: Optional[Sequence[Sequence[float]]] = None,
    f_eval: Optional[FEvaluator] = None,
) -> ComparisonReport:
    """Engine against the closed-form result for one metric and object"""
    return compare_grids(
        metric.metric_name,
        obj,
        density(metric, obj),
        expected_density(metric.metric_name, obj),
        grid=grid,
        tol=tol,
        points=points,
        f_eval=f_eval,
    )


# product decomposition --------------------------------------------------

PRODUCT_CONSTANT = 1 / (2 * math.sqrt(math.pi))


def _has_direction(word: Word, direction: int) -> bool:
    return any(direction in atom.value for atom in word)  # type: ignore[operator]


def product_decomposition_check(
    tol: float = 1e-6, n_points: int = 20, seed: int = 7
) -> VerificationReport:
    """
    Compare the non-conformal 3-torus with the conformal 2-torus.

    With every direction-3 word removed, each non-conformal scalar coefficient
    is the conformal2 coefficient times 1 / (2 sqrt(pi)) under the densities'
    normalizations, and K1 = pi / 2 times the conformal2 coefficient of
    delta_1^2(log k).
    """
    nonconformal = scalar_density(get_metric("nonconformal3"))
    conformal2 = scalar_density(get_metric("conformal2"))
    ours = nonconformal.ordered()
    theirs = conformal2.ordered()
    dropped = [key for key in ours if _has_direction(key[1], 3)]
    for key in dropped:
        del ours[key]

    rng = np.random.default_rng(seed)
    checks = [
        CheckResult(
            name="direction-3 words removed",
            passed=True,
            detail=f"{len(dropped)} nonconformal3 words removed, conformal2 has none",
        )
    ]
    for prefix, word in sorted(set(ours) | set(theirs), key=repr):
        left, right = ours.get((prefix, word)), theirs.get((prefix, word))
        arity = len(word)
        worst, ratios = 0.0, []
        for _ in range(n_points):
            point = tuple(float(v) for v in rng.uniform(-3.0, 3.0, arity))
            a = 0.0 if left is None else left.evaluate(point)
            b = 0.0 if right is None else right.evaluate(point)
            scale = math.pi ** (-nonconformal.pi_half / 2)
            expected = b * PRODUCT_CONSTANT * scale
            worst = max(worst, abs(a * scale - expected) / (1 + abs(expected)))
            if abs(b) > 1e-12:
                ratios.append(a / b)
        measured = float(np.median(ratios)) if ratios else 0.0
        checks.append(
            CheckResult(
                name=f"product factor on k^{prefix} {format_word(word, unicode=False)}",
                passed=worst <= tol,
                max_error=worst,
                detail=f"measured ratio {measured:.12g}, expected {PRODUCT_CONSTANT:.12g}",
            )
        )

    k1_word = (0, (dlogk(1, 1),))
    recovered = theirs.get(k1_word)
    worst = 0.0
    for s in np.linspace(-3.0, 3.0, n_points):
        point = (float(s),)
        value = 0.0 if recovered is None else math.pi / 2 * recovered.evaluate(point)
        expected = eval_reference("K1", point)
        worst = max(worst, abs(value - expected) / (1 + abs(expected)))
    checks.append(
        CheckResult(
            name="K1 from conformal2",
            passed=worst <= tol,
            max_error=worst,
            detail="K1 = pi/2 * conformal2 coefficient of d11(log k)",
        )
    )
    passed = all(check.passed for check in checks)
    logger.info(f"Product decomposition: {sum(c.passed for c in checks)}/{len(checks)} passed")
    return VerificationReport(suite="product-decomposition", checks=checks, passed=passed)
