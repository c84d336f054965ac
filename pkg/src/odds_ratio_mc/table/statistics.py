"""Crude odds ratio and the delta-method spread of its logarithm."""

import math

from odds_ratio_mc.errors import DegenerateTable
from odds_ratio_mc.models import ContingencyTable


def _require_positive(table: ContingencyTable) -> None:
    if table.has_zero():
        raise DegenerateTable(
            f"table {table.cells} has a zero cell; apply a continuity correction first"
        )


def crude_or(table: ContingencyTable) -> float:
    """Cross-product odds ratio (a·d)/(b·c)."""
    _require_positive(table)
    return (table.a * table.d) / (table.b * table.c)


def log_crude_or(table: ContingencyTable) -> float:
    return math.log(crude_or(table))


def sigma_hat_squared(table: ContingencyTable) -> float:
    """Delta-method variance of ln(OR_crude): 1/a + 1/b + 1/c + 1/d."""
    _require_positive(table)
    return 1.0 / table.a + 1.0 / table.b + 1.0 / table.c + 1.0 / table.d


def sigma_hat(table: ContingencyTable) -> float:
    return math.sqrt(sigma_hat_squared(table))
