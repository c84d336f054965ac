"""Standard normal CDF and quantile.

Both wrap ``scipy.special`` (``ndtr``/``ndtri``), which are accurate to
double precision across the whole range.
"""

import math

from scipy.special import ndtr, ndtri

from odds_ratio_mc.errors import InvalidProbability


def check_probability(p: float, name: str = "p") -> float:
    """Return ``p`` as a float, or raise if it is not strictly inside (0, 1)."""
    p = float(p)
    if not (0.0 < p < 1.0):
        raise InvalidProbability(f"{name} must lie in (0, 1), got {p!r}")
    return p


def normal_quantile(p: float) -> float:
    """Inverse standard normal CDF."""
    return float(ndtri(check_probability(p)))


def normal_cdf(x: float) -> float:
    """Standard normal CDF."""
    if not math.isfinite(x):
        raise ValueError(f"x must be finite, got {x!r}")
    return float(ndtr(x))


def two_sided_z(alpha: float) -> float:
    """z_{1-alpha/2}."""
    return normal_quantile(1.0 - check_probability(alpha, "alpha") / 2.0)
