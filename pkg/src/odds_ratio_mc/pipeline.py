"""Estimation pipeline: one corrected table through every requested method.

The simulation runs this once per replication; the ``estimate`` CLI mode
runs it once on a user-supplied table.

Usage:
    from odds_ratio_mc.pipeline import estimate_table

    estimates = estimate_table(new_table(78, 22, 92, 8), alpha=0.05)
"""

from odds_ratio_mc.bootstrap import DEFAULT_PBS, percentile_bootstrap_estimate
from odds_ratio_mc.estimators import (
    barendregt_estimate,
    check_probability,
    percentile_calc_estimate,
    standard_estimate,
)
from odds_ratio_mc.models import ALL_METHODS, ContingencyTable, EstimateWithCI, Method
from odds_ratio_mc.streams import RandomStream
from odds_ratio_mc.table import DEFAULT_CONTINUITY, apply_continuity


class Pipeline:
    """Applies a fixed set of methods to tables.

    Methods run in canonical order; only the bootstrap draws from the
    stream, so a call consumes exactly ``pbs`` uniforms when method II is
    requested and none otherwise.
    """

    def __init__(
        self,
        methods: tuple[Method, ...] = ALL_METHODS,
        alpha: float = 0.05,
        pbs: int = DEFAULT_PBS,
    ):
        """Initialize pipeline.

        Args:
            methods: Methods to compute
            alpha: Nominal non-coverage of every interval
            pbs: Bootstrap draws for method II
        """
        if not methods:
            raise ValueError("at least one method is required")
        self.methods = tuple(m for m in ALL_METHODS if m in methods)
        self.alpha = check_probability(alpha, "alpha")
        self.pbs = pbs

    @property
    def uses_stream(self) -> bool:
        return Method.PCTL_BOOT in self.methods

    def process(self, table: ContingencyTable, stream: RandomStream) -> list[EstimateWithCI]:
        """Estimate every method on ``table`` (cells must already be positive)."""
        estimates = []
        for method in self.methods:
            if method is Method.STANDARD:
                estimates.append(standard_estimate(table, self.alpha))
            elif method is Method.PCTL_BOOT:
                estimates.append(
                    percentile_bootstrap_estimate(table, self.alpha, self.pbs, stream)
                )
            elif method is Method.PCTL_CALC:
                estimates.append(percentile_calc_estimate(table, self.alpha))
            else:
                estimates.append(barendregt_estimate(table, self.alpha))
        return estimates


def estimate_table(
    table: ContingencyTable,
    alpha: float = 0.05,
    methods: tuple[Method, ...] = ALL_METHODS,
    pbs: int = DEFAULT_PBS,
    seed: int = 0,
    continuity: float = DEFAULT_CONTINUITY,
) -> list[EstimateWithCI]:
    """Standalone estimate of one observed table.

    ``continuity`` is added to every cell first; the bootstrap uses
    ``RandomStream(seed, 0)``.
    """
    corrected = apply_continuity(table, continuity)
    return Pipeline(methods, alpha, pbs).process(corrected, RandomStream(seed, 0))
