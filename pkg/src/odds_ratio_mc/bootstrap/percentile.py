"""Method II: parametric bootstrap with a percentile interval."""

from odds_ratio_mc.bootstrap.sampling import empirical_quantile, sample_lognormal
from odds_ratio_mc.estimators import check_probability, mu_star
from odds_ratio_mc.models import ContingencyTable, EstimateWithCI, Method
from odds_ratio_mc.streams import RandomStream
from odds_ratio_mc.table import sigma_hat

DEFAULT_PBS = 1000


def percentile_bootstrap_estimate(
    table: ContingencyTable,
    alpha: float,
    pbs: int,
    stream: RandomStream,
) -> EstimateWithCI:
    """Median and alpha/2, 1-alpha/2 quantiles of ``pbs`` draws from LN(mu*, sigma_hat).

    Args:
        table: Table with strictly positive cells
        alpha: Nominal non-coverage
        pbs: Number of bootstrap draws (#PBS)
        stream: Source of exactly ``pbs`` uniforms
    """
    alpha = check_probability(alpha, "alpha")
    mu = mu_star(table)
    sigma = sigma_hat(table)
    sample = sample_lognormal(mu, sigma, pbs, stream)
    return EstimateWithCI(
        method=Method.PCTL_BOOT,
        point=empirical_quantile(sample, 0.5),
        lower=empirical_quantile(sample, alpha / 2.0),
        upper=empirical_quantile(sample, 1.0 - alpha / 2.0),
        alpha=alpha,
        mu_used=mu,
        sigma_used=sigma,
    )
