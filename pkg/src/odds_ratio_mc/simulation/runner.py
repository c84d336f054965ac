"""Monte Carlo harness over replications of a study design.

Replication ``i`` draws from ``RandomStream(seed, i)``: first the 2n
uniforms of its table, then ``pbs_count`` bootstrap uniforms when method II
is requested. Replications are grouped in fixed blocks; blocks run serially
or on a process pool and their accumulators are merged exactly, so the
report does not depend on the worker count.
"""

import logging
import time
from collections.abc import Callable, Iterable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import repeat

from odds_ratio_mc.design import true_or
from odds_ratio_mc.metrics.accumulator import ReplicationRecord, ReportAccumulator
from odds_ratio_mc.metrics.power import theoretical_power
from odds_ratio_mc.models import EstimateWithCI, SimulationReport, SimulationSettings, StudyDesign
from odds_ratio_mc.pipeline import Pipeline
from odds_ratio_mc.simulation.generator import generate_table
from odds_ratio_mc.streams import RandomStream
from odds_ratio_mc.table import DEFAULT_CONTINUITY, apply_continuity

logger = logging.getLogger(__name__)

BLOCK_SIZE = 1000

RecordSink = Callable[[ReplicationRecord], None]


@dataclass
class BlockResult:
    """Merged accumulator of replications [start, stop) and, if asked, their rows."""

    start: int
    stop: int
    accumulator: ReportAccumulator
    records: list[ReplicationRecord] = field(default_factory=list)


def replicate(
    design: StudyDesign, settings: SimulationSettings, pipeline: Pipeline, index: int
) -> list[EstimateWithCI]:
    """Generate, correct and estimate replication ``index``."""
    stream = RandomStream(settings.seed, index)
    table = apply_continuity(generate_table(design, stream), DEFAULT_CONTINUITY)
    return pipeline.process(table, stream)


def run_block(
    design: StudyDesign,
    settings: SimulationSettings,
    start: int,
    stop: int,
    collect_records: bool = False,
) -> BlockResult:
    pipeline = Pipeline(settings.methods, settings.alpha, settings.pbs_count)
    or_true = true_or(design)
    result = BlockResult(start=start, stop=stop, accumulator=ReportAccumulator(settings.methods))
    for index in range(start, stop):
        estimates = replicate(design, settings, pipeline, index)
        result.accumulator.record_all(estimates, or_true)
        if collect_records:
            result.records.extend(
                ReplicationRecord.from_estimate(index, e, or_true) for e in estimates
            )
    return result


def _blocks(mc_count: int, block_size: int) -> list[tuple[int, int]]:
    return [(s, min(s + block_size, mc_count)) for s in range(0, mc_count, block_size)]


def _block_results(
    design: StudyDesign,
    settings: SimulationSettings,
    blocks: list[tuple[int, int]],
    threads: int,
    collect_records: bool,
) -> Iterator[BlockResult]:
    if threads <= 1 or len(blocks) == 1:
        for start, stop in blocks:
            yield run_block(design, settings, start, stop, collect_records)
        return
    starts: Iterable[int] = (b[0] for b in blocks)
    stops: Iterable[int] = (b[1] for b in blocks)
    with ProcessPoolExecutor(max_workers=threads) as pool:
        yield from pool.map(
            run_block,
            repeat(design),
            repeat(settings),
            starts,
            stops,
            repeat(collect_records),
        )


def run_simulation(
    design: StudyDesign,
    settings: SimulationSettings,
    threads: int = 1,
    sink: RecordSink | None = None,
    block_size: int = BLOCK_SIZE,
) -> SimulationReport:
    """Run ``settings.mc_count`` replications and summarize every method.

    Args:
        design: Generating parameters
        settings: #MC, #PBS, alpha, seed and methods
        threads: Worker processes; never changes the report
        sink: Receives per-replication rows in replication order
        block_size: Replications per unit of work

    Returns:
        SimulationReport with one MethodSummary per requested method
    """
    if threads < 1:
        raise ValueError(f"threads must be at least 1, got {threads}")
    if block_size < 1:
        raise ValueError(f"block_size must be at least 1, got {block_size}")

    blocks = _blocks(settings.mc_count, block_size)
    logger.info(
        "Simulating %d replications (n=%d, OR_true=%.4f, pbs=%d, alpha=%g, seed=%d) "
        "on %d worker(s)",
        settings.mc_count,
        design.n,
        true_or(design),
        settings.pbs_count,
        settings.alpha,
        settings.seed,
        min(threads, len(blocks)),
    )
    started = time.perf_counter()

    total = ReportAccumulator(settings.methods)
    for block in _block_results(design, settings, blocks, threads, sink is not None):
        total.merge(block.accumulator)
        if sink is not None:
            for record in block.records:
                sink(record)
        logger.debug("Block [%d, %d) merged", block.start, block.stop)

    or_true = true_or(design)
    report = SimulationReport(
        design=design,
        settings=settings,
        or_true=or_true,
        theoretical_power=theoretical_power(design, settings.alpha),
        summaries=total.finalize(or_true),
    )
    logger.info("Simulation finished in %.1fs", time.perf_counter() - started)
    return report
