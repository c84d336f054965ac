"""``odds-ratio-mc`` command-line entry point."""

import logging
import sys
from typing import Any

from rich.console import Console
from rich.logging import RichHandler

from odds_ratio_mc.cli.config import RunConfig, parse_config
from odds_ratio_mc.cli.render import ReplicationDumpWriter, render, render_estimates
from odds_ratio_mc.errors import ConfigError, OddsRatioError
from odds_ratio_mc.pipeline import estimate_table
from odds_ratio_mc.simulation import run_simulation
from odds_ratio_mc.table import apply_continuity, new_table

logger = logging.getLogger("odds_ratio_mc")

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def configure_logging(values: dict[str, Any]) -> None:
    """Send package logs to stderr through rich; stdout carries only the document."""
    level = logging.INFO
    if values.get("verbose"):
        level = logging.DEBUG
    elif values.get("quiet"):
        level = logging.WARNING
    handler = RichHandler(console=Console(stderr=True), show_path=False)
    handler.setFormatter(logging.Formatter("%(message)s"))
    logger.handlers[:] = [handler]
    logger.setLevel(level)
    logger.propagate = False


def run_estimate(config: RunConfig) -> str:
    assert config.table is not None
    cells = config.table
    table = new_table(cells.a, cells.b, cells.c, cells.d)
    settings = config.settings
    estimates = estimate_table(
        table,
        alpha=settings.alpha,
        methods=settings.methods,
        pbs=settings.pbs_count,
        seed=settings.seed,
        continuity=config.continuity,
    )
    return render_estimates(apply_continuity(table, config.continuity), estimates,
                            config.output_format)


def run_simulate(config: RunConfig) -> str:
    assert config.design is not None
    if config.dump_replications is None:
        report = run_simulation(config.design, config.settings, threads=config.threads)
    else:
        with config.dump_replications.open("w", newline="") as fh:
            dump = ReplicationDumpWriter(fh)
            report = run_simulation(config.design, config.settings, threads=config.threads,
                                    sink=dump)
        logger.info("Wrote %d replication rows to %s", dump.rows, config.dump_replications)
    return render(report, config.output_format)


def main(argv: list[str] | None = None) -> int:
    """Run the CLI; returns the process exit status.

    Usage errors from argparse exit with status 2 before this returns.
    """
    try:
        config, values = parse_config(argv)
    except ConfigError as exc:
        configure_logging({})
        logger.error("Invalid configuration: %s", exc)
        return EXIT_USAGE
    configure_logging(values)

    try:
        document = run_estimate(config) if config.mode == "estimate" else run_simulate(config)
        if config.output is None:
            sys.stdout.write(document)
        else:
            config.output.write_text(document)
            logger.info("Wrote %s output to %s", config.output_format.value, config.output)
    except OddsRatioError as exc:
        logger.error("%s", exc)
        return EXIT_FAILURE
    except OSError as exc:
        logger.error("Cannot write output: %s", exc)
        return EXIT_FAILURE
    return EXIT_OK
