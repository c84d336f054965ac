"""Command-line front end: configuration, rendering and the entry point."""

from odds_ratio_mc.cli.config import OutputFormat, RunConfig, TableInput, parse_config
from odds_ratio_mc.cli.main import main
from odds_ratio_mc.cli.render import (
    CSV_HEADER,
    ReplicationDumpWriter,
    parse_structured,
    render,
    render_estimates,
)

__all__ = [
    "OutputFormat",
    "RunConfig",
    "TableInput",
    "parse_config",
    "main",
    "CSV_HEADER",
    "ReplicationDumpWriter",
    "parse_structured",
    "render",
    "render_estimates",
]
