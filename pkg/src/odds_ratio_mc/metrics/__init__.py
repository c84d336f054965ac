"""Aggregation of replications into coverage, miss rates, widths and power."""

from odds_ratio_mc.estimators.normal import normal_cdf
from odds_ratio_mc.metrics.accumulator import (
    ExactSum,
    MethodAccumulator,
    ReplicationRecord,
    ReportAccumulator,
)
from odds_ratio_mc.metrics.power import theoretical_power

__all__ = [
    "normal_cdf",
    "ExactSum",
    "MethodAccumulator",
    "ReplicationRecord",
    "ReportAccumulator",
    "theoretical_power",
]
