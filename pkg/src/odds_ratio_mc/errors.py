"""Exceptions raised across the odds ratio estimation package.

All of them derive from ``ValueError`` so callers that only care about bad
input can keep catching the builtin.
"""


class OddsRatioError(ValueError):
    """Base class for every error raised by this package."""


class InvalidCell(OddsRatioError):
    """A contingency table cell is negative, non-finite, or the table is empty."""


class DegenerateTable(OddsRatioError):
    """A statistic needs strictly positive cells and the table has a zero."""


class InvalidProbability(OddsRatioError):
    """A probability argument lies outside the open interval (0, 1)."""


class EmptyAccumulator(OddsRatioError):
    """An accumulator was finalized before any replication was recorded."""


class ConfigError(OddsRatioError):
    """A run configuration is missing a field or holds an out-of-range value."""
