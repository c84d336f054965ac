"""Construction and continuity correction of 2x2 tables."""

from odds_ratio_mc.errors import InvalidCell
from odds_ratio_mc.models import ContingencyTable

DEFAULT_CONTINUITY = 0.5


def new_table(a: float, b: float, c: float, d: float) -> ContingencyTable:
    """Build a validated table from its four cells.

    Raises:
        InvalidCell: a cell is negative or non-finite, or all cells are zero
    """
    return ContingencyTable(a=float(a), b=float(b), c=float(c), d=float(d))


def apply_continuity(
    table: ContingencyTable, delta: float = DEFAULT_CONTINUITY
) -> ContingencyTable:
    """Add ``delta`` to every cell, zero or not.

    A delta of 0 returns the table itself.
    """
    if delta < 0:
        raise InvalidCell(f"continuity delta must be nonnegative, got {delta!r}")
    if delta == 0:
        return table
    return ContingencyTable(
        a=table.a + delta,
        b=table.b + delta,
        c=table.c + delta,
        d=table.d + delta,
    )
