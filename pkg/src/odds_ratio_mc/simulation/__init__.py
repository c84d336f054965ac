"""Data-generating process and Monte Carlo harness."""

from odds_ratio_mc.design import PRESETS, cell_probabilities, expected_table, true_or
from odds_ratio_mc.simulation.generator import generate_table
from odds_ratio_mc.simulation.runner import (
    BLOCK_SIZE,
    BlockResult,
    replicate,
    run_block,
    run_simulation,
)
from odds_ratio_mc.streams import RandomStream

__all__ = [
    "PRESETS",
    "cell_probabilities",
    "expected_table",
    "true_or",
    "generate_table",
    "BLOCK_SIZE",
    "BlockResult",
    "replicate",
    "run_block",
    "run_simulation",
    "RandomStream",
]
