"""Markdown, CSV and structured (JSON) documents for reports and estimates.

Display rounding happens only here: 3 decimals for estimates and bounds,
4 for proportions. CSV and JSON carry floats at full round-trip precision.
"""

import csv
import io
from collections.abc import Sequence
from typing import TextIO

from pydantic import TypeAdapter

from odds_ratio_mc.cli.config import OutputFormat
from odds_ratio_mc.metrics import ReplicationRecord
from odds_ratio_mc.models import ContingencyTable, EstimateWithCI, MethodSummary, SimulationReport

CSV_HEADER = (
    "method",
    "mean_point",
    "one_minus_coverage",
    "miss_high",
    "miss_low",
    "mean_lower",
    "mean_upper",
    "mean_width",
    "empirical_power",
)

ESTIMATE_CSV_HEADER = (
    "method", "point", "lower", "upper", "width", "alpha", "mu_used", "sigma_used"
)

DUMP_CSV_HEADER = (
    "replication",
    "method",
    "point",
    "lower",
    "upper",
    "covered",
    "miss_high",
    "miss_low",
    "rejects_null",
)

_ESTIMATES = TypeAdapter(list[EstimateWithCI])


def _est(x: float) -> str:
    return f"{x:.3f}"


def _prop(x: float) -> str:
    return f"{x:.4f}"


def _markdown_row(s: MethodSummary) -> str:
    return (
        f"| {s.method.label}/ {_est(s.mean_point)} "
        f"| {_prop(s.one_minus_coverage)} ({_est(s.mean_lower)}, {_est(s.mean_upper)}) "
        f"[{_est(s.mean_width)}] "
        f"| {_prop(s.miss_high)} | {_prop(s.miss_low)} | {_prop(s.empirical_power)} |"
    )


def render_markdown(report: SimulationReport) -> str:
    design = report.design
    settings = report.settings
    confidence = 100 * (1 - settings.alpha)
    lines = [
        f"## OR_true = {_est(report.or_true)}",
        "",
        f"Intended {confidence:g} % confidence intervals",
        "",
        f"Theoretical power to reject the null hypothesis OR_true = 1: "
        f"**{_est(report.theoretical_power)}**",
        "",
        f"n={design.n} P(E) = {design.p_exposure:g} P(D|E) = {design.p_disease_exposed:g} "
        f"P(D|not E) = {design.p_disease_unexposed:g} "
        f"#MC = {settings.mc_count:,} #PBS = {settings.pbs_count:,} seed = {settings.seed}",
        "",
        "| Method/ Mean point estimate "
        "| 1 - P(OR_true in CI) CI: (Mean LB, Mean UB) [width] "
        "| P(miss: OR_true too high) | P(miss: OR_true too low) | MC Empirical Power |",
        "|---|---|---|---|---|",
    ]
    lines.extend(_markdown_row(s) for s in report.summaries)
    lines.append("")
    lines.append("Monte Carlo standard errors:")
    lines.append("")
    lines.extend(
        f"- {s.method.label}: mean point ± {s.point_mc_se:.4f}, "
        f"1 - coverage ± {s.coverage_mc_se:.4f}, bias {s.bias:+.4f}"
        for s in report.summaries
    )
    return "\n".join(lines) + "\n"


def render_csv(report: SimulationReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for s in report.summaries:
        writer.writerow(
            [
                s.method.value,
                repr(s.mean_point),
                repr(s.one_minus_coverage),
                repr(s.miss_high),
                repr(s.miss_low),
                repr(s.mean_lower),
                repr(s.mean_upper),
                repr(s.mean_width),
                repr(s.empirical_power),
            ]
        )
    return buf.getvalue()


def render_structured(report: SimulationReport) -> str:
    return report.model_dump_json(indent=2) + "\n"


def parse_structured(text: str) -> SimulationReport:
    """Inverse of :func:`render_structured`."""
    return SimulationReport.model_validate_json(text)


def render(report: SimulationReport, output_format: OutputFormat) -> str:
    """Render a finished report in the requested format."""
    if output_format is OutputFormat.MARKDOWN:
        return render_markdown(report)
    if output_format is OutputFormat.CSV:
        return render_csv(report)
    return render_structured(report)


def render_estimates(
    table: ContingencyTable,
    estimates: Sequence[EstimateWithCI],
    output_format: OutputFormat,
) -> str:
    """Render the estimate-mode result for one (corrected) table."""
    if output_format is OutputFormat.STRUCTURED:
        return _ESTIMATES.dump_json(list(estimates), indent=2).decode() + "\n"
    if output_format is OutputFormat.CSV:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(ESTIMATE_CSV_HEADER)
        for e in estimates:
            writer.writerow(
                [e.method.value]
                + [repr(v) for v in (e.point, e.lower, e.upper, e.width, e.alpha, e.mu_used,
                                     e.sigma_used)]
            )
        return buf.getvalue()
    confidence = 100 * (1 - estimates[0].alpha) if estimates else 95.0
    lines = [
        f"## Table a={table.a:g} b={table.b:g} c={table.c:g} d={table.d:g}",
        "",
        f"| Method | Point estimate | {confidence:g} % CI | Width | mu | sigma |",
        "|---|---|---|---|---|---|",
    ]
    lines.extend(
        f"| {e.method.label} | {_est(e.point)} | ({_est(e.lower)}, {_est(e.upper)}) "
        f"| {_est(e.width)} | {e.mu_used:.4f} | {e.sigma_used:.4f} |"
        for e in estimates
    )
    return "\n".join(lines) + "\n"


class ReplicationDumpWriter:
    """Streams :class:`ReplicationRecord` rows to an open text file as CSV."""

    def __init__(self, fh: TextIO):
        self._writer = csv.writer(fh, lineterminator="\n")
        self._writer.writerow(DUMP_CSV_HEADER)
        self.rows = 0

    def __call__(self, record: ReplicationRecord) -> None:
        self._writer.writerow(
            [
                record.replication,
                record.method.value,
                repr(record.point),
                repr(record.lower),
                repr(record.upper),
                int(record.covered),
                int(record.miss_high),
                int(record.miss_low),
                int(record.rejects_null),
            ]
        )
        self.rows += 1
