"""
Core algebra and base classes for nctorus-curvature
"""

from .base_metric import ONE_FORM, SCALAR, BaseMetric
from .coefficients import Coefficient, gamma_half
from .metric_factory import (
    MetricFactory,
    get_available_metrics,
    get_metric,
    get_metric_names,
    register_metric,
)
from .operators import D, Operator, mul, op, op_sum, operator_to_symbol
from .quadrature import QuadratureEvaluator
from .symbols import MatrixSymbol, SymbolExpr, Term, delta, xi_partial

__all__ = [
    "BaseMetric",
    "Coefficient",
    "D",
    "MatrixSymbol",
    "MetricFactory",
    "ONE_FORM",
    "Operator",
    "QuadratureEvaluator",
    "SCALAR",
    "SymbolExpr",
    "Term",
    "delta",
    "gamma_half",
    "get_available_metrics",
    "get_metric",
    "get_metric_names",
    "mul",
    "op",
    "op_sum",
    "operator_to_symbol",
    "register_metric",
    "xi_partial",
]
