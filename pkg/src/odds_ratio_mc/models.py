"""Shared data models for the odds ratio estimation package.

This module defines the value types passed between stages: the 2x2 table and
per-method estimate (plain frozen dataclasses, built once per replication)
and the validated design, settings, and report models (pydantic, since they
cross the CLI and JSON boundaries).
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Annotated

from pydantic import BaseModel, ConfigDict, Field, field_validator

from odds_ratio_mc.errors import InvalidCell

UINT64_MAX = 2**64 - 1

Probability = Annotated[float, Field(gt=0.0, lt=1.0)]


# =============================================================================
# Estimation methods
# =============================================================================


class Method(str, Enum):
    """Point and interval estimation method.

    Values double as the CLI spelling (``--methods standard,pctl-calc``).
    """

    STANDARD = "standard"  # (I) crude OR, delta-method CI
    PCTL_BOOT = "pctl-boot"  # (II) parametric bootstrap percentile CI
    PCTL_CALC = "pctl-calc"  # (III) OR* with calculated percentile CI
    BARENDREGT = "barendregt"  # (IV) recalculated sigma

    @property
    def label(self) -> str:
        """Row label used in the markdown report."""
        return _LABELS[self]


_LABELS = {
    Method.STANDARD: "Standard (I)",
    Method.PCTL_BOOT: "Pctl Boot. (II)",
    Method.PCTL_CALC: "Pctl Calc. (III)",
    Method.BARENDREGT: "Barendregt (IV)",
}

ALL_METHODS: tuple[Method, ...] = tuple(Method)


# =============================================================================
# Contingency table and estimates
# =============================================================================


@dataclass(frozen=True)
class ContingencyTable:
    """Exposure-by-disease 2x2 table.

    Layout::

                D=0   D=1
        E=0      a     b
        E=1      c     d

    Cells are real-valued so continuity-corrected and expected-count tables
    share the type.
    """

    a: float
    b: float
    c: float
    d: float

    def __post_init__(self) -> None:
        for name in ("a", "b", "c", "d"):
            value = getattr(self, name)
            if not math.isfinite(value) or value < 0:
                raise InvalidCell(f"cell {name} must be finite and nonnegative, got {value!r}")
        if self.n <= 0:
            raise InvalidCell("table total must be positive")

    @property
    def n(self) -> float:
        """Total count a + b + c + d."""
        return self.a + self.b + self.c + self.d

    @property
    def cells(self) -> tuple[float, float, float, float]:
        return (self.a, self.b, self.c, self.d)

    def has_zero(self) -> bool:
        return min(self.cells) == 0

    def swap_exposure(self) -> "ContingencyTable":
        """Exchange the E=0 and E=1 rows."""
        return ContingencyTable(a=self.c, b=self.d, c=self.a, d=self.b)


@dataclass(frozen=True)
class EstimateWithCI:
    """Point estimate and interval from one method, on the odds-ratio scale.

    Attributes:
        method: Which estimator produced the values
        point: Point estimate of OR_true
        lower: Lower confidence bound
        upper: Upper confidence bound
        alpha: Nominal non-coverage
        mu_used: Log-scale location the method centered on
        sigma_used: Log-scale spread the method used
    """

    method: Method
    point: float
    lower: float
    upper: float
    alpha: float
    mu_used: float
    sigma_used: float

    @property
    def width(self) -> float:
        return self.upper - self.lower

    def misses_high(self, or_true: float) -> bool:
        """Whole interval lies below the truth."""
        return self.upper < or_true

    def misses_low(self, or_true: float) -> bool:
        """Whole interval lies above the truth."""
        return self.lower > or_true

    def covers(self, or_true: float) -> bool:
        return not (self.misses_high(or_true) or self.misses_low(or_true))

    def rejects_null(self) -> bool:
        """Interval excludes OR = 1."""
        return self.lower > 1.0 or self.upper < 1.0


# =============================================================================
# Study design, settings, and report (validated models)
# =============================================================================


class StudyDesign(BaseModel):
    """Generating parameters of the prospective study."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    n: int = Field(ge=4, description="subjects per replication")
    p_exposure: Probability = 0.5
    p_disease_exposed: Probability
    p_disease_unexposed: Probability


class SimulationSettings(BaseModel):
    """Monte Carlo settings: #MC, #PBS, alpha, seed and the methods to run."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    mc_count: int = Field(default=200_000, ge=1)
    pbs_count: int = Field(default=1000, ge=2)
    alpha: Probability = 0.05
    seed: int = Field(default=0, ge=0, le=UINT64_MAX)
    methods: tuple[Method, ...] = ALL_METHODS

    @field_validator("methods")
    @classmethod
    def _canonical_methods(cls, value: tuple[Method, ...]) -> tuple[Method, ...]:
        if not value:
            raise ValueError("at least one method is required")
        # fixed order keeps reports and dumps stable regardless of how methods were listed
        return tuple(m for m in ALL_METHODS if m in value)


class MethodSummary(BaseModel):
    """Aggregate verdicts of one method over all replications."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    method: Method
    replication_count: int
    mean_point: float
    one_minus_coverage: float
    miss_high: float
    miss_low: float
    mean_lower: float
    mean_upper: float
    mean_width: float
    empirical_power: float
    miss_high_count: int
    miss_low_count: int
    power_count: int
    bias: float
    point_mc_se: float
    coverage_mc_se: float


class SimulationReport(BaseModel):
    """Finished Monte Carlo study, one summary per requested method."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    design: StudyDesign
    settings: SimulationSettings
    or_true: float
    theoretical_power: float
    summaries: tuple[MethodSummary, ...]

    def summary(self, method: Method) -> MethodSummary:
        for s in self.summaries:
            if s.method is method:
                return s
        raise KeyError(method.value)
