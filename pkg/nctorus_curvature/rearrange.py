"""
Rearrangement of radial integrals into functions of the modular operator

A radial integral int u^w k^head b0^m0 rho_1 b0^m1 ... rho_p b0^mp du becomes
k^(head - a (w + 1)) F(Delta_(1), ..., Delta_(p))(rho_1 ... rho_p), and the k
powers left inside the operand are then pushed to the front through
x k^t = k^t Delta^(t/e)(x).
"""

import logging
import os
import re
from fractions import Fraction
from typing import Dict, Iterator, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from .core import BaseMetric, QuadratureEvaluator
from .core.spectral import CONFORMAL, NONCONFORMAL, FSpec, SpectralFunction, quadrature_F
from .core.words import DK, KPOW, UNIT, Word, canonical, kpow, split_runs, unit
from .models import CheckResult
from .reduce_integrals import RadialIntegral
from .reference import APPENDIX_B_NAMES, ReferenceFunction, get_reference
from .reference.functions import SINGULAR_THRESHOLD

logger = logging.getLogger(__name__)

QUADRATURE = "quadrature"
CLOSED = "closed"
BACKENDS = (QUADRATURE, CLOSED)


def fspec_for(ms: Sequence[int], nu: Fraction, metric: BaseMetric) -> FSpec:
    """The F spec of a radial integral under the metric's b0(u) = (1 + u k^a)^-1"""
    power = metric.f_power
    family = NONCONFORMAL if power == 1 else CONFORMAL
    return FSpec(tuple(ms), Fraction(nu), power, family)


_NAME = re.compile(r"^F(?:\^\[(\d+(?:/\d+)?)\])?_\{([\d,]+)\}$")


def spec_from_name(name: str) -> FSpec:
    """
    Parse 'F_{2,1}' (conformal) or 'F^[3]_{2,1}' (non-conformal).

    Raises:
        ValueError: If the name is not of either shape
    """
    match = _NAME.match(name.strip())
    if not match:
        raise ValueError(f"Invalid F-function name: {name}")
    ms = tuple(int(m) for m in match.group(2).split(","))
    if match.group(1) is None:
        return FSpec(ms, Fraction(3, 2), Fraction(2, 3), CONFORMAL)
    return FSpec(ms, Fraction(match.group(1)), Fraction(1), NONCONFORMAL)


# spectral expressions ---------------------------------------------------


class SpectralTerm(NamedTuple):
    prefix: int
    operand: Word
    function: SpectralFunction


class SpectralExpr:
    """Sum of k^prefix F(...)(operand) terms, keyed by (prefix, operand)"""

    def __init__(self, terms: Optional[Dict[Tuple[int, Word], SpectralFunction]] = None):
        self._terms: Dict[Tuple[int, Word], SpectralFunction] = {}
        for (prefix, operand), fn in (terms or {}).items():
            self.add_term(prefix, operand, fn)

    def add_term(self, prefix: int, operand: Word, fn: SpectralFunction) -> None:
        key = (prefix, operand)
        total = self._terms[key] + fn if key in self._terms else fn
        if total.is_zero:
            self._terms.pop(key, None)
        else:
            self._terms[key] = total

    def terms(self) -> Iterator[SpectralTerm]:
        for (prefix, operand), fn in sorted(self._terms.items(), key=lambda kv: kv[0]):
            yield SpectralTerm(prefix, operand, fn)

    def get(self, prefix: int, operand: Word) -> Optional[SpectralFunction]:
        return self._terms.get((prefix, operand))

    def keys(self) -> List[Tuple[int, Word]]:
        return sorted(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other: "SpectralExpr") -> "SpectralExpr":
        out = SpectralExpr(dict(self._terms))
        for term in other.terms():
            out.add_term(*term)
        return out


def k_degree(prefix: int, operand: Word) -> int:
    """Total k-degree of k^prefix times the operand; units have degree 0"""
    return prefix + sum(
        a.value if a.kind == KPOW else 1 if a.kind == DK else 0 for a in operand  # type: ignore
    )


def to_spectral(r: RadialIntegral, metric: BaseMetric) -> SpectralExpr:
    """
    Apply the rearrangement lemma to one radial integral.

    Raises:
        ValueError: If the k prefix is not an integer
    """
    spec = fspec_for(r.ms, r.nu, metric)
    prefix = r.head - metric.radial_power * (r.u_power + 1)
    if Fraction(prefix).denominator != 1:
        raise ValueError(f"Non-integral k prefix {prefix} for {r}")
    operand = canonical(atom for sep, power in r.rhos for atom in (sep, kpow(power)))
    return SpectralExpr({(int(prefix), operand): SpectralFunction.leaf(spec, r.coeff)})


def normalize_spectral(expr: SpectralExpr, metric: BaseMetric) -> SpectralExpr:
    """
    Rewrite every delta^alpha(k) as k times the unit k^-1 delta^alpha(k) and
    push all k powers into the prefix.

    Raises:
        ValueError: If an operand holds atoms other than k powers and delta(k)
    """
    e = metric.modular_exponent
    out = SpectralExpr()
    for prefix, operand, fn in expr.terms():
        runs, seps = split_runs(operand)
        if any(m for _, m in runs):
            raise ValueError("Operands of spectral terms cannot contain b0")
        if all(s.kind == UNIT for s in seps) and not any(r for r, _ in runs):
            out.add_term(prefix, operand, fn)
            continue
        if any(s.kind != DK for s in seps):
            raise ValueError("Cannot normalize an operand mixing units and delta(k)")
        p = len(seps)
        t = [r for r, _ in runs]
        for h in range(p):
            t[h] += 1
        weights = [Fraction(sum(t[j] for j in range(h, p + 1)), e) for h in range(1, p + 1)]
        shifted = fn.map_monomials(lambda m: m.shifted(weights))
        units = tuple(unit(*s.value) for s in seps)  # type: ignore[misc]
        out.add_term(prefix + sum(t), units, shifted)
    return out


# F evaluation -----------------------------------------------------------


class FEvaluator:
    """Evaluates F functions by quadrature or, where available, in closed form"""

    _default_backend: str = os.getenv("NCG_F_BACKEND", QUADRATURE)

    def __init__(self, backend: Optional[str] = None, tolerance: Optional[float] = None):
        """Initialize the evaluator with a configurable backend"""
        if backend is None:
            backend = getattr(self.__class__, "_default_backend", QUADRATURE)
        if backend not in BACKENDS:
            raise ValueError(f"Invalid F backend: {backend}")
        self.backend = backend
        self.tolerance = QuadratureEvaluator(tolerance).tolerance

    def __call__(self, spec: FSpec, point: Tuple[float, ...]) -> float:
        if self.backend == CLOSED and spec.arity:
            closed = self._closed(spec, point)
            if closed is not None:
                return closed
        return quadrature_F(spec, point, self.tolerance)

    def _closed(self, spec: FSpec, point: Tuple[float, ...]) -> Optional[float]:
        try:
            reference = closed_F(spec.name)
        except ValueError:
            logger.debug(f"No closed form for {spec.name}, using quadrature")
            return None
        logs = [float(np.log(s)) for s in point]
        if reference.singular_distance(logs) < SINGULAR_THRESHOLD:
            logger.debug(f"{spec.name} near a singular locus at {point}, using quadrature")
            return None
        return reference(*point)


def eval_F(spec: FSpec, point: Sequence[float], evaluator: Optional[FEvaluator] = None) -> float:
    """F at a point of (0, inf)^p"""
    evaluator = evaluator or FEvaluator()
    return evaluator(spec, tuple(float(s) for s in point))


def closed_F(name: str) -> ReferenceFunction:
    """
    The closed form of an F function.

    Raises:
        ValueError: If name is not an F function with a closed form
    """
    if name not in APPENDIX_B_NAMES:
        raise ValueError(
            f"Unknown F-function '{name}'. Valid options: {', '.join(APPENDIX_B_NAMES)}"
        )
    return get_reference(name)


def verify_F(
    tol: float = 1e-8,
    n_points: int = 20,
    seed: int = 7,
    names: Optional[Sequence[str]] = None,
) -> List[CheckResult]:
    """
    Compare quadrature and closed forms at log-uniform points of [0.1, 10]^p.

    Returns:
        One CheckResult per function, failing with the worst point in detail
    """
    rng = np.random.default_rng(seed)
    results = []
    for name in names or APPENDIX_B_NAMES:
        spec = spec_from_name(name)
        reference = closed_F(name)
        worst, worst_point = 0.0, None
        for _ in range(n_points):
            sample = np.exp(rng.uniform(np.log(0.1), np.log(10.0), spec.arity))
            point = tuple(float(v) for v in sample)
            expected = reference(*point)
            error = abs(quadrature_F(spec, point) - expected) / (1 + abs(expected))
            if error > worst:
                worst, worst_point = error, point
        passed = worst <= tol
        detail = None if passed else f"worst relative error {worst:.3e} at {worst_point}"
        results.append(CheckResult(name=name, passed=passed, max_error=worst, detail=detail))
    failed = [r.name for r in results if not r.passed]
    logger.info(f"Closed-form check: {len(results) - len(failed)}/{len(results)} passed")
    if failed:
        logger.debug(f"Closed-form mismatches: {', '.join(failed)}")
    return results


def rearrange_integrals(
    integrals: Sequence[RadialIntegral], metric: BaseMetric
) -> SpectralExpr:
    """to_spectral followed by normalize_spectral over a whole list"""
    total = SpectralExpr()
    for r in integrals:
        total = total + to_spectral(r, metric)
    normalized = normalize_spectral(total, metric)
    logger.debug(f"Rearranged {len(integrals)} integrals into {len(normalized)} spectral terms")
    return normalized


def coefficient_of(expr: SpectralExpr, prefix: int, operand: Word) -> SpectralFunction:
    """The function in front of k^prefix (operand), zero if absent"""
    fn = expr.get(prefix, operand)
    if fn is None:
        arity = sum(1 for a in operand if a.kind != KPOW)
        return SpectralFunction(arity)
    return fn

