"""
Verification suites

Each suite runs a family of checks and returns a VerificationReport:

- appendix-b: closed-form F functions against quadrature
- limits: printed limit constants against the engine near the origin
- structure: symmetries, translation identities, Ricci assembly, parametrix
- appendix-a: printed intermediate results of the non-conformal computation
- product-decomposition: non-conformal 3-torus against the conformal 2-torus
"""

import logging
import math
from fractions import Fraction
from typing import Callable, Dict, List, NamedTuple, Optional, Tuple

import numpy as np
from scipy import integrate

from ..core import ONE_FORM, SCALAR, BaseMetric, QuadratureEvaluator, get_metric
from ..core.notation import parse_radial, parse_symbol
from ..core.spectral import NONCONFORMAL, FSpec, SpectralFunction, expansional_f
from ..core.spectral import expansional_g, quadrature_F
from ..core.words import Word, dlogk, unit
from ..curvature import density, one_form_density, product_decomposition_check
from ..curvature import ricci_density, scalar_density
from ..logk import reported_value, split_sym_antisym, to_nabla, translate
from ..models import CheckResult, VerificationReport
from ..rearrange import SpectralExpr, coefficient_of, rearrange_integrals, verify_F
from ..reduce_integrals import full_reduced_b2, radial_table, reduce_nonconformal
from ..reference import eval_reference
from ..reference.appendix_a import (
    B1_PARTIAL_DIRECTION,
    RADIAL_SCALE,
    RADIAL_SPOT_TERMS,
    SAMPLE_FACTOR,
    SAMPLE_TERM,
    SAMPLE_U_POWER,
    b1_partial_expected,
)
from ..reference.theorems import ONE_FORM_DENSITY, RICCI, pair, second
from ..resolvent import b1_partial_term, parametrix_check

logger = logging.getLogger(__name__)

APPENDIX_B = "appendix-b"
LIMITS = "limits"
STRUCTURE = "structure"
APPENDIX_A = "appendix-a"
PRODUCT_DECOMPOSITION = "product-decomposition"
SUITES = (APPENDIX_B, LIMITS, STRUCTURE, APPENDIX_A, PRODUCT_DECOMPOSITION)

DEFAULT_TOLERANCES = {
    APPENDIX_B: 1e-8,
    LIMITS: 1e-3,
    STRUCTURE: 1e-10,
    APPENDIX_A: 1e-8,
    PRODUCT_DECOMPOSITION: 1e-6,
}

FUZZ_POINTS = 100
SINGULAR_CLEARANCE = 0.1


def _report(suite: str, checks: List[CheckResult]) -> VerificationReport:
    passed = all(check.passed for check in checks)
    logger.info(f"Suite {suite}: {sum(c.passed for c in checks)}/{len(checks)} checks passed")
    return VerificationReport(suite=suite, checks=checks, passed=passed)


def _numeric_check(name: str, errors: List[float], tol: float) -> CheckResult:
    worst = max(errors, default=0.0)
    detail = None if worst <= tol else f"worst error {worst:.3e} above {tol:.1e}"
    return CheckResult(name=name, passed=worst <= tol, max_error=worst, detail=detail)


def _fuzz(rng: np.random.Generator, arity: int, clear: bool = True) -> Tuple[float, ...]:
    """A point of [-3, 3]^arity away from s = 0, t = 0 and s + t = 0"""
    while True:
        point = tuple(float(v) for v in rng.uniform(-3.0, 3.0, arity))
        if not clear:
            return point
        forms = list(point) + ([point[0] + point[1]] if arity == 2 else [])
        if min(abs(v) for v in forms) >= SINGULAR_CLEARANCE:
            return point


# appendix-b -------------------------------------------------------------


def appendix_b_suite(tol: float, seed: int) -> VerificationReport:
    return _report(APPENDIX_B, verify_F(tol=tol, n_points=20, seed=seed))


# limits -----------------------------------------------------------------


class LimitCase(NamedTuple):
    """sign * (sum of the engine coefficients of words) -> expected as s -> 0"""

    name: str
    metric: str
    obj: str
    entry: Tuple[int, int]
    prefix: int
    words: Tuple[Word, ...]
    expected: Fraction
    sign: int = 1


_C3 = "conformal3"
_NC3 = "nonconformal3"
_A2 = ONE_FORM_DENSITY

LIMIT_CASES: Tuple[LimitCase, ...] = (
    LimitCase("K(0) = -1/6", _C3, SCALAR, (0, 0), -2, (second(1, 1),), Fraction(-1, 6)),
    LimitCase("H(0,0) = 1/6", _C3, SCALAR, (0, 0), -2, (pair(1, 1),), Fraction(1, 6)),
    LimitCase("F(0) = 1/4", _C3, _A2, (0, 1), -2, (second(1, 2),), Fraction(1, 4)),
    LimitCase("T(0,0) = -1/3", _C3, _A2, (0, 0), -2, (pair(2, 2),), Fraction(-1, 3)),
    LimitCase("W(0,0) = 1/2", _C3, _A2, (0, 1), -2, (pair(1, 2), pair(2, 1)), Fraction(1, 2)),
    LimitCase("K1(0) = -1/24", _NC3, SCALAR, (0, 0), 0, (second(1, 1),), Fraction(-1, 24)),
    LimitCase("K2(0) = -1/12", _NC3, SCALAR, (0, 0), -2, (second(3, 3),), Fraction(-1, 12)),
    LimitCase("H1(0,0) = 0", _NC3, SCALAR, (0, 0), 0, (pair(1, 1),), Fraction(0)),
    LimitCase("H2(0,0) = 1/8", _NC3, SCALAR, (0, 0), -2, (pair(3, 3),), Fraction(1, 8)),
    LimitCase("Kt_11(0) = 1/8", _NC3, RICCI, (0, 0), 0, (second(1, 1),), Fraction(1, 8), -1),
    LimitCase("Kt_22(0) = 1/8", _NC3, RICCI, (1, 1), 0, (second(2, 2),), Fraction(1, 8), -1),
    LimitCase("Kt_12(0) = 0", _NC3, RICCI, (0, 1), 0, (second(1, 2),), Fraction(0), -1),
    LimitCase("Kt_13(0) = 1/8", _NC3, RICCI, (0, 2), -1, (second(1, 3),), Fraction(1, 8), -1),
    LimitCase("Kt_23(0) = 1/8", _NC3, RICCI, (1, 2), -1, (second(2, 3),), Fraction(1, 8), -1),
    LimitCase("Kt_31(0) = 1/8", _NC3, RICCI, (2, 0), -1, (second(1, 3),), Fraction(1, 8), -1),
    LimitCase("Kt_33(0) = 1/4", _NC3, RICCI, (2, 2), -2, (second(3, 3),), Fraction(1, 4), -1),
    LimitCase("Kt3(0) = 1/8", _NC3, RICCI, (0, 0), -2, (second(3, 3),), Fraction(1, 8), -1),
    LimitCase("Ht3(0,0) = -1/4", _NC3, RICCI, (0, 0), -2, (pair(3, 3),), Fraction(-1, 4), -1),
    LimitCase(
        "Ht4(0,0) + 2 W33(0,0) = -1/4", _NC3, RICCI, (2, 2), -2, (pair(3, 3),), Fraction(-1, 4), -1
    ),
)


def limit_value(case: LimitCase, eps: float) -> float:
    """Engine value of a limit case at s = t = eps"""
    grid = density(get_metric(case.metric), case.obj)
    expr = grid[case.entry[0]][case.entry[1]]
    ordered = expr.ordered()
    total = 0.0
    for word in case.words:
        fn = ordered.get((case.prefix, word))
        if fn is not None:
            total += reported_value(fn, (eps,) * len(word), expr.pi_half)
    return case.sign * total


def limits_suite(tol: float, eps: float) -> VerificationReport:
    checks = []
    for case in LIMIT_CASES:
        value = limit_value(case, eps)
        error = abs(value - float(case.expected))
        checks.append(
            CheckResult(
                name=f"{case.metric} {case.obj}: {case.name}",
                passed=error <= tol,
                max_error=error,
                detail=f"engine value {value:.10g} at eps = {eps:g}",
            )
        )
    return _report(LIMITS, checks)


# structure --------------------------------------------------------------


def _symmetry_check(
    name: str, function: str, sign: int, tol: float, rng: np.random.Generator
) -> CheckResult:
    errors = []
    for _ in range(FUZZ_POINTS):
        s, t = _fuzz(rng, 2)
        value = eval_reference(function, (s, t))
        swapped = eval_reference(function, (t, s))
        errors.append(abs(value - sign * swapped) / (1 + abs(value)))
    return _numeric_check(name, errors, tol)


def _translation_factors_check(tol: float, rng: np.random.Generator) -> CheckResult:
    quadrature = QuadratureEvaluator(1e-13)
    errors = []
    for width in (6, 2):
        for _ in range(FUZZ_POINTS // 4):
            x, y = _fuzz(rng, 2, clear=False)
            f_ref = quadrature.unit_interval(lambda u: math.exp(u * x / width))
            g_ref, _ = integrate.dblquad(
                lambda v, u: math.exp((u * x + v * y) / width),
                0.0,
                1.0,
                0.0,
                lambda u: u,
                epsabs=1e-13,
                epsrel=1e-13,
            )
            errors.append(abs(expansional_f(x, width) - f_ref) / (1 + abs(f_ref)))
            errors.append(abs(expansional_g(x, y, width) - g_ref) / (1 + abs(g_ref)))
    return _numeric_check("f and g against their defining integrals", errors, tol)


def _diagonal_rule_check(tol: float, rng: np.random.Generator) -> CheckResult:
    """k^-1 delta_1^2(k) must produce 2 g on delta_1(log k) . delta_1(log k)"""
    width = 2
    spec = FSpec((1, 1), Fraction(2), Fraction(1), NONCONFORMAL)
    expr = SpectralExpr({(0, (unit(1, 1),)): SpectralFunction.leaf(spec)})
    translated = translate(expr, width).get(0, (dlogk(1), dlogk(1)))
    errors = []
    for _ in range(FUZZ_POINTS // 4):
        x, y = _fuzz(rng, 2, clear=False)
        expected = 2 * quadrature_F(spec, (math.exp(x + y),)) * expansional_g(x, y, width)
        value = 0.0 if translated is None else translated.evaluate((math.exp(x), math.exp(y)))
        errors.append(abs(value - expected) / (1 + abs(expected)))
    return _numeric_check("polarized rule at i = j gives 2g", errors, tol)


def _value_preservation_check(
    metric: BaseMetric, tol: float, rng: np.random.Generator
) -> CheckResult:
    """Splitting into brackets and moving to nabla coordinates keeps every word's value"""
    spectral = rearrange_integrals(full_reduced_b2(metric, SCALAR)[0][0], metric)
    translated = translate(spectral, metric.modular_exponent)
    ordered = to_nabla(split_sym_antisym(translated, metric.density_pi_half)).ordered()
    errors = []
    terms = list(translated.terms())
    for index in range(FUZZ_POINTS):
        prefix, operand, fn = terms[index % len(terms)]
        point = _fuzz(rng, len(operand), clear=False)
        expected = fn.evaluate(tuple(math.exp(v) for v in point))
        split = ordered.get((prefix, operand))
        value = 0.0 if split is None else split.evaluate(point)
        errors.append(abs(value - expected) / (1 + abs(expected)))
    return _numeric_check(f"W/S reconstruction on {metric.metric_name}", errors, tol)


def _ricci_assembly_check(metric: BaseMetric) -> CheckResult:
    scalar = scalar_density(metric)
    one_form = one_form_density(metric)
    ricci = ricci_density(metric)
    failures = []
    for i, row in enumerate(ricci):
        for j, entry in enumerate(row):
            residual = entry + one_form[i][j]
            if i == j:
                residual = residual - scalar
            if not residual.is_zero:
                failures.append(f"({i + 1},{j + 1})")
    return CheckResult(
        name=f"Ricci = R (x) I - a_2 on {metric.metric_name}",
        passed=not failures,
        detail=f"entries differ: {', '.join(failures)}" if failures else None,
    )


def _parametrix_checks(metric: BaseMetric, kind: str) -> CheckResult:
    results = parametrix_check(metric, kind)
    failed = [str(order) for order, ok in results.items() if not ok]
    return CheckResult(
        name=f"parametrix of {metric.metric_name} ({kind})",
        passed=not failed,
        detail=f"orders {', '.join(failed)} do not cancel" if failed else None,
    )


def structure_suite(tol: float, seed: int) -> VerificationReport:
    rng = np.random.default_rng(seed)
    checks = [
        _symmetry_check("S1 symmetric", "S1", 1, tol, rng),
        _symmetry_check("H1 antisymmetric", "H1", -1, tol, rng),
        _translation_factors_check(tol, rng),
        _diagonal_rule_check(tol, rng),
    ]
    for name in ("conformal3", "nonconformal3", "conformal2"):
        metric = get_metric(name)
        checks.append(_parametrix_checks(metric, SCALAR))
        checks.append(_value_preservation_check(metric, tol, rng))
    for name in ("conformal3", "nonconformal3"):
        checks.append(_parametrix_checks(get_metric(name), ONE_FORM))
        checks.append(_ricci_assembly_check(get_metric(name)))
    return _report(STRUCTURE, checks)


# appendix-a -------------------------------------------------------------


def _b1_partial_check(metric: BaseMetric) -> CheckResult:
    engine = b1_partial_term(metric, B1_PARTIAL_DIRECTION)
    expected = b1_partial_expected(metric.dimension)
    difference = engine - expected
    return CheckResult(
        name="d_3(b1) delta_3(a2) b0",
        passed=difference.is_zero,
        detail=f"{len(engine)} engine terms, {len(expected)} printed terms, "
        f"{len(difference)} differ",
    )


def _sample_check(metric: BaseMetric) -> CheckResult:
    integrals = reduce_nonconformal(parse_symbol(SAMPLE_TERM, metric.dimension), metric)
    factors = {r.coeff / metric.normalization for r in integrals}
    powers = {r.u_power for r in integrals}
    passed = bool(integrals) and factors == {SAMPLE_FACTOR} and powers == {SAMPLE_U_POWER}
    return CheckResult(
        name="(eta, theta) integration of " + SAMPLE_TERM,
        passed=passed,
        detail=f"factors {', '.join(map(str, factors))}, u powers {', '.join(map(str, powers))}",
    )


def _spot_checks(metric: BaseMetric) -> List[CheckResult]:
    table = radial_table(full_reduced_b2(metric, SCALAR)[0][0])
    checks = []
    for text, printed in RADIAL_SPOT_TERMS:
        u_power, expr = parse_radial(text, metric.dimension)
        (_, word), _ = expr.items()[0]
        coeff = table.get((u_power, word))
        value = None if coeff is None else coeff / metric.normalization / RADIAL_SCALE
        passed = value is not None and value.pi_half == 0 and value.rat == printed
        checks.append(
            CheckResult(
                name=f"radial term {printed} {text}",
                passed=passed,
                detail=None if passed else f"engine coefficient {value}",
            )
        )
    return checks


def _psi1_check(metric: BaseMetric, tol: float, rng: np.random.Generator) -> CheckResult:
    """Coefficient of k^-1 delta_1^2(k) after rearrangement, over the normalization"""
    spectral = rearrange_integrals(full_reduced_b2(metric, SCALAR)[0][0], metric)
    fn = coefficient_of(spectral, 0, (unit(1, 1),))
    normalization = float(metric.normalization)
    errors = []
    for _ in range(20):
        s = float(math.exp(rng.uniform(math.log(0.1), math.log(10.0))))
        expected = eval_reference("psi1", (s,))
        value = fn.evaluate((s,)) / normalization
        errors.append(abs(value - expected) / (1 + abs(expected)))
    return _numeric_check("psi1 of k^-1 delta_1^2(k)", errors, tol)


def appendix_a_suite(tol: float, seed: int) -> VerificationReport:
    metric = get_metric("nonconformal3")
    rng = np.random.default_rng(seed)
    checks = [_b1_partial_check(metric), _sample_check(metric)]
    checks += _spot_checks(metric)
    checks.append(_psi1_check(metric, tol, rng))
    return _report(APPENDIX_A, checks)


# dispatch ---------------------------------------------------------------

SuiteRunner = Callable[[float, int, float], VerificationReport]

_RUNNERS: Dict[str, SuiteRunner] = {
    APPENDIX_B: lambda tol, seed, eps: appendix_b_suite(tol, seed),
    LIMITS: lambda tol, seed, eps: limits_suite(tol, eps),
    STRUCTURE: lambda tol, seed, eps: structure_suite(tol, seed),
    APPENDIX_A: lambda tol, seed, eps: appendix_a_suite(tol, seed),
    PRODUCT_DECOMPOSITION: lambda tol, seed, eps: product_decomposition_check(tol, seed=seed),
}


def run_suite(
    name: str, tol: Optional[float] = None, seed: int = 7, eps: float = 1e-4
) -> VerificationReport:
    """
    Run a verification suite by name.

    Raises:
        ValueError: If the suite is unknown
    """
    name = name.strip().lower()
    if name not in _RUNNERS:
        raise ValueError(f"Unknown suite '{name}'. Valid options: {', '.join(SUITES)}")
    return _RUNNERS[name](DEFAULT_TOLERANCES[name] if tol is None else tol, seed, eps)
