"""2x2 contingency tables and their primitive statistics."""

from odds_ratio_mc.table.cells import DEFAULT_CONTINUITY, apply_continuity, new_table
from odds_ratio_mc.table.statistics import (
    crude_or,
    log_crude_or,
    sigma_hat,
    sigma_hat_squared,
)

__all__ = [
    "DEFAULT_CONTINUITY",
    "apply_continuity",
    "new_table",
    "crude_or",
    "log_crude_or",
    "sigma_hat",
    "sigma_hat_squared",
]
