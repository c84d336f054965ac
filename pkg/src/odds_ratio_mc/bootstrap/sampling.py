"""Lognormal draws and empirical quantiles for the parametric bootstrap."""

import math
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray
from scipy.special import ndtri

from odds_ratio_mc.estimators import check_probability
from odds_ratio_mc.streams import RandomStream

# u = 0 is possible on the 2^-53 grid; map it half a grid step inward
_SMALLEST_UNIFORM = 2.0**-54


@dataclass(frozen=True)
class BootstrapSample:
    """Sorted, strictly positive bootstrap realizations (odds-ratio scale)."""

    draws: NDArray[np.float64]

    def __post_init__(self) -> None:
        draws = self.draws
        if draws.ndim != 1 or draws.size < 2:
            raise ValueError("a bootstrap sample needs at least two draws")
        if not np.all(draws > 0):
            raise ValueError("bootstrap draws must be positive")
        if np.any(draws[1:] < draws[:-1]):
            raise ValueError("bootstrap draws must be sorted ascending")

    def __len__(self) -> int:
        return int(self.draws.size)


def sample_lognormal(mu: float, sigma: float, count: int, stream: RandomStream) -> BootstrapSample:
    """Draw ``count`` values of exp(mu + sigma·Z), sorted.

    Z comes from the inverse normal CDF of one stream uniform per draw, so a
    call consumes exactly ``count`` uniforms.
    """
    if not sigma > 0:
        raise ValueError(f"sigma must be positive, got {sigma!r}")
    if count < 2:
        raise ValueError(f"count must be at least 2, got {count}")
    u = np.maximum(stream.uniforms(count), _SMALLEST_UNIFORM)
    draws = np.exp(mu + sigma * ndtri(u))
    draws.sort()
    return BootstrapSample(draws=draws)


def empirical_quantile(sample: BootstrapSample, p: float) -> float:
    """Linear interpolation between order statistics at zero-based rank (count-1)·p."""
    p = check_probability(p)
    draws = sample.draws
    h = (draws.size - 1) * p
    lo = math.floor(h)
    if lo >= draws.size - 1:
        return float(draws[-1])
    below = float(draws[lo])
    above = float(draws[lo + 1])
    return min(below + (h - lo) * (above - below), above)
