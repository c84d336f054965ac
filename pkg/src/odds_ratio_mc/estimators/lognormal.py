"""Lognormal moment formulas and the bias-corrected log-scale parameters.

If OR_crude ~ LN(mu, sigma) then E[OR_crude] = exp(mu + sigma^2/2), so
ln(OR_crude) overshoots the median parameter by sigma^2/2. The functions
here turn a table into the corrected (mu, sigma) pairs the interval
estimators center on.
"""

import math

from odds_ratio_mc.models import ContingencyTable
from odds_ratio_mc.table import log_crude_or, sigma_hat_squared


def lognormal_mean(mu: float, sigma: float) -> float:
    return math.exp(mu + sigma * sigma / 2.0)


def lognormal_median(mu: float) -> float:
    return math.exp(mu)


def lognormal_variance(mu: float, sigma: float) -> float:
    s2 = sigma * sigma
    return math.expm1(s2) * math.exp(2.0 * mu + s2)


def mu_star(table: ContingencyTable) -> float:
    """ln(OR_crude) - sigma_hat^2/2."""
    return log_crude_or(table) - sigma_hat_squared(table) / 2.0


def or_star(table: ContingencyTable) -> float:
    """Bias-corrected point estimate OR* = OR_crude·exp(-sigma_hat^2/2)."""
    return math.exp(mu_star(table))


def recalculated_sigma_squared(sigma_squared: float) -> float:
    """Solve for sigma*^2 so LN(mu*, sigma*) has the delta-method variance.

    The matching condition is (v - 1)·exp(2·mu*)·v = OR_crude^2·sigma^2 with
    v = exp(sigma*^2). Since OR_crude^2·exp(-2·mu*) = exp(sigma^2), the
    right-hand side reduces to v^2 - v = k with k = sigma^2·exp(sigma^2),
    independent of the odds ratio. The positive root is
    v = (1 + sqrt(1 + 4k)) / 2, written below in a form that keeps full
    precision as sigma -> 0.
    """
    k = sigma_squared * math.exp(sigma_squared)
    return math.log1p(2.0 * k / (1.0 + math.sqrt(1.0 + 4.0 * k)))


def barendregt_parameters(table: ContingencyTable) -> tuple[float, float]:
    """Return (mu**, sigma*) after the single recalculation of sigma and mu."""
    s2_star = recalculated_sigma_squared(sigma_hat_squared(table))
    mu_star_star = log_crude_or(table) - s2_star / 2.0
    return mu_star_star, math.sqrt(s2_star)
