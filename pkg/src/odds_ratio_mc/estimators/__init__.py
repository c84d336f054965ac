"""Closed-form odds ratio estimators and normal-distribution helpers."""

from odds_ratio_mc.estimators.intervals import (
    barendregt_estimate,
    lognormal_interval,
    percentile_calc_estimate,
    standard_estimate,
)
from odds_ratio_mc.estimators.lognormal import (
    barendregt_parameters,
    lognormal_mean,
    lognormal_median,
    lognormal_variance,
    mu_star,
    or_star,
    recalculated_sigma_squared,
)
from odds_ratio_mc.estimators.normal import (
    check_probability,
    normal_cdf,
    normal_quantile,
    two_sided_z,
)

__all__ = [
    "barendregt_estimate",
    "lognormal_interval",
    "percentile_calc_estimate",
    "standard_estimate",
    "barendregt_parameters",
    "lognormal_mean",
    "lognormal_median",
    "lognormal_variance",
    "mu_star",
    "or_star",
    "recalculated_sigma_squared",
    "check_probability",
    "normal_cdf",
    "normal_quantile",
    "two_sided_z",
]
