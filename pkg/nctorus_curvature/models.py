"""
Data models for nctorus-curvature

Defines Pydantic models for comparison tables, verification reports and run
configuration.
"""

from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field, field_serializer, field_validator

OBJECTS = ("scalar", "one_form_density", "ricci")
FORMATS = ("json", "csv")
STAGES = ("b2", "radial")


def _sig17(value: Optional[float]) -> Optional[float]:
    if value is None:
        return None
    return float(f"{value:.17g}")


class ComparisonRow(BaseModel):
    """Engine and reference values of one basis word at one point"""

    point: Tuple[float, ...] = Field(description="Evaluation point in nabla coordinates")
    engine: float = Field(description="Engine value of the coefficient function")
    reference: float = Field(description="Reference closed-form value")
    abs_err: float = Field(description="Absolute error |engine - reference|")
    rel_err: float = Field(description="Error relative to 1 + |reference|")

    @field_serializer("engine", "reference", "abs_err", "rel_err")
    def _serialize_float(self, value: float) -> Optional[float]:
        return _sig17(value)

    @field_serializer("point")
    def _serialize_point(self, value: Tuple[float, ...]) -> List[Optional[float]]:
        return [_sig17(v) for v in value]

    model_config = {
        "json_schema_extra": {
            "example": {
                "point": [0.5],
                "engine": -0.16002599999999999,
                "reference": -0.16002599999999999,
                "abs_err": 1.2e-12,
                "rel_err": 1.0e-12,
            }
        }
    }


class WordTable(BaseModel):
    """All rows of one basis word in one matrix entry"""

    entry: Optional[Tuple[int, int]] = Field(None, description="Matrix entry (i, j), if any")
    prefix: int = Field(description="Power of k in front of the word")
    basis_word: str = Field(description="Printed operand word over delta(log k) atoms")
    rows: List[ComparisonRow] = Field(default_factory=list)

    @property
    def worst(self) -> float:
        return max((row.rel_err for row in self.rows), default=0.0)


class ComparisonReport(BaseModel):
    """Engine against reference for one curvature object"""

    metric: str = Field(description="Metric name")
    object: str = Field(description="scalar, one_form_density or ricci")
    tolerance: float = Field(description="Relative tolerance used for the pass flag")
    tables: List[WordTable] = Field(default_factory=list)
    worst_error: float = Field(0.0, description="Largest relative error over all rows")
    passed: bool = Field(True, description="Whether every row is within tolerance")

    model_config = {
        "json_schema_extra": {
            "example": {
                "metric": "conformal3",
                "object": "scalar",
                "tolerance": 1e-6,
                "tables": [],
                "worst_error": 3.1e-11,
                "passed": True,
            }
        }
    }


class CheckResult(BaseModel):
    """Outcome of one named check inside a verification suite"""

    name: str = Field(description="What was checked")
    passed: bool = Field(description="Whether the check passed")
    max_error: Optional[float] = Field(None, description="Largest observed error, if numeric")
    detail: Optional[str] = Field(None, description="Human readable detail")

    @field_serializer("max_error")
    def _serialize_error(self, value: Optional[float]) -> Optional[float]:
        return _sig17(value)


class VerificationReport(BaseModel):
    """Result of a verification suite"""

    suite: str = Field(description="Suite name")
    checks: List[CheckResult] = Field(default_factory=list)
    passed: bool = Field(True, description="Whether every check passed")

    model_config = {
        "json_schema_extra": {
            "example": {
                "suite": "appendix-b",
                "checks": [
                    {"name": "F_{2,1}", "passed": True, "max_error": 2.0e-12, "detail": None}
                ],
                "passed": True,
            }
        }
    }


class ClassicalReport(BaseModel):
    """Abelianized density against the classical formula"""

    metric: str = Field(description="Metric name")
    object: str = Field(description="scalar or ricci")
    engine: Dict[str, str] = Field(description="Printed abelianized engine output per entry")
    expected: Dict[str, str] = Field(description="Printed classical formula per entry")
    passed: bool = Field(description="Whether all entries agree exactly")


class RunConfig(BaseModel):
    """Validated options of one command-line run"""

    command: str = Field(description="Subcommand name")
    metric: Optional[str] = Field(None, description="Metric name or alias")
    object: str = Field("scalar", description="scalar, one_form_density or ricci")
    grid: Tuple[float, float, int] = Field((-3.0, 3.0, 25), description="start, stop, count")
    points: Optional[List[Tuple[float, ...]]] = Field(None, description="Explicit points")
    tolerance: Optional[float] = Field(
        None, description="Relative tolerance, the command's default if omitted"
    )
    output: Optional[str] = Field(None, description="Output path, stdout if omitted")
    format: str = Field("json", description="json or csv")
    seed: int = Field(7, description="Seed for sampled points")
    suite: Optional[str] = Field(None, description="Verification suite of the verify command")
    eps: float = Field(1e-4, description="Distance from the origin for limit checks")
    stage: str = Field("b2", description="b2 or radial, for the dump command")

    @field_validator("tolerance", "eps")
    @classmethod
    def _positive(cls, value: Optional[float]) -> Optional[float]:
        if value is not None and value <= 0:
            raise ValueError(f"Invalid tolerance: {value}")
        return value

    @field_validator("stage")
    @classmethod
    def _known_stage(cls, value: str) -> str:
        if value not in STAGES:
            raise ValueError(f"Invalid stage: {value}")
        return value

    @field_validator("grid")
    @classmethod
    def _non_empty_grid(cls, value: Tuple[float, float, int]) -> Tuple[float, float, int]:
        if value[2] < 1:
            raise ValueError(f"Invalid grid: {value}")
        return value

    @field_validator("points")
    @classmethod
    def _non_empty_points(
        cls, value: Optional[List[Tuple[float, ...]]]
    ) -> Optional[List[Tuple[float, ...]]]:
        if value is not None and not value:
            raise ValueError("Invalid point list: empty")
        return value

    @field_validator("format")
    @classmethod
    def _known_format(cls, value: str) -> str:
        if value not in FORMATS:
            raise ValueError(f"Invalid format: {value}")
        return value

    @field_validator("object")
    @classmethod
    def _known_object(cls, value: str) -> str:
        if value not in OBJECTS:
            raise ValueError(f"Invalid object: {value}")
        return value

    model_config = {
        "json_schema_extra": {
            "example": {
                "command": "scalar",
                "metric": "conformal3",
                "object": "scalar",
                "grid": [-3.0, 3.0, 25],
                "tolerance": 1e-6,
                "format": "json",
                "seed": 7,
            }
        }
    }
