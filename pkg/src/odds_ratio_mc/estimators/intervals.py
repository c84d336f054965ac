"""Closed-form point and interval estimators for the odds ratio.

- Standard (I): centered on ln(OR_crude), spread sigma_hat
- Calculated percentile (III): centered on ln(OR*), same spread
- Barendregt (IV): recalculated sigma*, centered on mu**

The parametric bootstrap (II) lives in :mod:`odds_ratio_mc.bootstrap`.
"""

import math

from odds_ratio_mc.estimators.lognormal import barendregt_parameters, mu_star
from odds_ratio_mc.estimators.normal import two_sided_z
from odds_ratio_mc.models import ContingencyTable, EstimateWithCI, Method
from odds_ratio_mc.table import log_crude_or, sigma_hat


def lognormal_interval(method: Method, mu: float, sigma: float, alpha: float) -> EstimateWithCI:
    """Point exp(mu) with bounds exp(mu ± z_{1-alpha/2}·sigma)."""
    half_width = two_sided_z(alpha) * sigma
    return EstimateWithCI(
        method=method,
        point=math.exp(mu),
        lower=math.exp(mu - half_width),
        upper=math.exp(mu + half_width),
        alpha=alpha,
        mu_used=mu,
        sigma_used=sigma,
    )


def standard_estimate(table: ContingencyTable, alpha: float = 0.05) -> EstimateWithCI:
    return lognormal_interval(Method.STANDARD, log_crude_or(table), sigma_hat(table), alpha)


def percentile_calc_estimate(table: ContingencyTable, alpha: float = 0.05) -> EstimateWithCI:
    return lognormal_interval(Method.PCTL_CALC, mu_star(table), sigma_hat(table), alpha)


def barendregt_estimate(table: ContingencyTable, alpha: float = 0.05) -> EstimateWithCI:
    mu, sigma = barendregt_parameters(table)
    return lognormal_interval(Method.BARENDREGT, mu, sigma, alpha)
