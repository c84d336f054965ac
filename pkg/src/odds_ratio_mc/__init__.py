"""Lognormal-corrected odds ratio estimation with a Monte Carlo coverage study.

Four methods estimate OR_true from a 2x2 table: the standard delta-method
interval (I), the parametric bootstrap percentile interval (II), the
calculated percentile interval around OR* (III) and the Barendregt
recalculation (IV). The simulation package measures their coverage, miss
rates, widths and power on tables drawn from a prospective design.
"""

from odds_ratio_mc.models import (
    ALL_METHODS,
    ContingencyTable,
    EstimateWithCI,
    Method,
    MethodSummary,
    SimulationReport,
    SimulationSettings,
    StudyDesign,
)
from odds_ratio_mc.pipeline import Pipeline, estimate_table
from odds_ratio_mc.simulation import run_simulation
from odds_ratio_mc.table import new_table

__version__ = "0.1.0"

__all__ = [
    "ALL_METHODS",
    "ContingencyTable",
    "EstimateWithCI",
    "Method",
    "MethodSummary",
    "SimulationReport",
    "SimulationSettings",
    "StudyDesign",
    "Pipeline",
    "estimate_table",
    "run_simulation",
    "new_table",
]
