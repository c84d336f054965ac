"""Parametric bootstrap (method II)."""

from odds_ratio_mc.bootstrap.percentile import DEFAULT_PBS, percentile_bootstrap_estimate
from odds_ratio_mc.bootstrap.sampling import (
    BootstrapSample,
    empirical_quantile,
    sample_lognormal,
)

__all__ = [
    "DEFAULT_PBS",
    "percentile_bootstrap_estimate",
    "BootstrapSample",
    "empirical_quantile",
    "sample_lognormal",
]
