"""
Closed-form reference results for nctorus-curvature
"""

# Import all closed forms to trigger registration
from . import appendix_a, appendix_b, classical, conformal, nonconformal, theorems
from .appendix_b import APPENDIX_B_NAMES
from .classical import ClassicalExpr, ClassicalGrid, classical_formulas
from .functions import (
    ReferenceFunction,
    eval_reference,
    get_reference,
    get_reference_names,
    register_reference,
)
from .theorems import ONE_FORM_DENSITY, RICCI, SCALAR, ExpectedWord, expected_density

__all__ = [
    "APPENDIX_B_NAMES",
    "ClassicalExpr",
    "ClassicalGrid",
    "ExpectedWord",
    "ONE_FORM_DENSITY",
    "RICCI",
    "ReferenceFunction",
    "SCALAR",
    "appendix_a",
    "appendix_b",
    "classical",
    "classical_formulas",
    "conformal",
    "eval_reference",
    "expected_density",
    "get_reference",
    "get_reference_names",
    "nonconformal",
    "register_reference",
    "theorems",
]
