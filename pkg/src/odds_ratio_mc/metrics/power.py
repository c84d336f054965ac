"""Theoretical power of the two-sided test of OR = 1."""

import math

from odds_ratio_mc.design import true_or
from odds_ratio_mc.estimators import normal_cdf, two_sided_z
from odds_ratio_mc.models import StudyDesign


def theoretical_power(design: StudyDesign, alpha: float = 0.05) -> float:
    """Phi(|ln OR_true| / se - z_{1-alpha/2}) with expected group sizes.

    The standard error uses n·P(E) exposed and n·(1 - P(E)) unexposed
    subjects as real numbers.
    """
    n_exposed = design.n * design.p_exposure
    n_unexposed = design.n * (1.0 - design.p_exposure)
    p1 = design.p_disease_exposed
    p0 = design.p_disease_unexposed
    variance = 1.0 / (n_exposed * p1 * (1.0 - p1)) + 1.0 / (n_unexposed * p0 * (1.0 - p0))
    effect = abs(math.log(true_or(design)))
    return normal_cdf(effect / math.sqrt(variance) - two_sided_z(alpha))
