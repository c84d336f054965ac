"""Run configuration: argparse flags layered over an optional flat TOML file.

Keys in the file mirror the flag names (``p-d-exposed`` or ``p_d_exposed``);
any flag given on the command line wins over the file.
"""

import argparse
import sys
from enum import Enum
from pathlib import Path
from typing import Any, Literal

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from odds_ratio_mc.design import PRESETS
from odds_ratio_mc.errors import ConfigError
from odds_ratio_mc.models import Method, SimulationSettings, StudyDesign


class OutputFormat(str, Enum):
    MARKDOWN = "markdown"
    CSV = "csv"
    STRUCTURED = "structured"


class TableInput(BaseModel):
    """Observed cell counts for the ``estimate`` mode."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    a: float = Field(ge=0)
    b: float = Field(ge=0)
    c: float = Field(ge=0)
    d: float = Field(ge=0)


class RunConfig(BaseModel):
    """Validated configuration of one CLI invocation."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    mode: Literal["estimate", "simulate"]
    table: TableInput | None = None
    design: StudyDesign | None = None
    settings: SimulationSettings = SimulationSettings()
    continuity: float = Field(default=0.5, ge=0)
    output_format: OutputFormat = OutputFormat.MARKDOWN
    dump_replications: Path | None = None
    output: Path | None = None
    threads: int = Field(default=1, ge=1)

    @model_validator(mode="after")
    def _one_input_per_mode(self) -> "RunConfig":
        if self.mode == "estimate" and (self.table is None or self.design is not None):
            raise ValueError("estimate mode needs a table and no design")
        if self.mode == "simulate" and (self.design is None or self.table is not None):
            raise ValueError("simulate mode needs a design and no table")
        return self


# flag dest -> model field
_DESIGN_KEYS = {
    "n": "n",
    "p_exposure": "p_exposure",
    "p_d_exposed": "p_disease_exposed",
    "p_d_unexposed": "p_disease_unexposed",
}
_SETTINGS_KEYS = {
    "mc": "mc_count",
    "pbs": "pbs_count",
    "alpha": "alpha",
    "seed": "seed",
    "methods": "methods",
}
_TABLE_KEYS = ("a", "b", "c", "d")
_OTHER_KEYS = (
    "design", "continuity", "format", "dump_replications", "output", "threads", "verbose", "quiet"
)
_FILE_KEYS = frozenset([*_DESIGN_KEYS, *_SETTINGS_KEYS, *_TABLE_KEYS, *_OTHER_KEYS])

# keys that belong to one mode only
_ESTIMATE_ONLY = frozenset([*_TABLE_KEYS, "continuity"])
_SIMULATE_ONLY = frozenset([*_DESIGN_KEYS, "design", "mc", "threads", "dump_replications"])


def build_parser() -> argparse.ArgumentParser:
    """CLI parser; every option defaults to "absent" so file values can fill in."""
    common = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    common.add_argument("--config", type=Path, help="flat TOML file with flag values")
    common.add_argument("--alpha", type=float, help="nominal non-coverage (default 0.05)")
    common.add_argument("--pbs", type=int, help="bootstrap draws per estimate (default 1000)")
    common.add_argument("--seed", type=int, help="64-bit seed (default 0)")
    common.add_argument(
        "--methods",
        help="comma-separated subset of standard,pctl-boot,pctl-calc,barendregt",
    )
    common.add_argument(
        "--format", choices=[f.value for f in OutputFormat], help="output format (default markdown)"
    )
    common.add_argument("--output", type=Path, help="write the document here instead of stdout")
    verbosity = common.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    verbosity.add_argument("-q", "--quiet", action="store_true", help="warnings only")

    parser = argparse.ArgumentParser(
        prog="odds-ratio-mc",
        description="Odds ratio point/interval estimation and Monte Carlo coverage study",
    )
    sub = parser.add_subparsers(dest="mode", required=True)

    estimate = sub.add_parser("estimate", parents=[common], help="estimate one observed table",
                              argument_default=argparse.SUPPRESS)
    for cell in _TABLE_KEYS:
        estimate.add_argument(f"--{cell}", type=float, help=f"cell {cell} count")
    estimate.add_argument("--continuity", type=float,
                          help="added to every cell before estimation (default 0.5)")

    simulate = sub.add_parser("simulate", parents=[common], help="run the Monte Carlo study",
                              argument_default=argparse.SUPPRESS)
    simulate.add_argument("--design", choices=sorted(PRESETS), help="preset study design")
    simulate.add_argument("--n", type=int, help="subjects per replication")
    simulate.add_argument("--p-exposure", type=float, help="P(E=1) (default 0.5)")
    simulate.add_argument("--p-d-exposed", type=float, help="P(D=1|E=1)")
    simulate.add_argument("--p-d-unexposed", type=float, help="P(D=1|E=0)")
    simulate.add_argument("--mc", type=int, help="replications #MC (default 200000)")
    simulate.add_argument("--threads", type=int, help="worker processes (default 1)")
    simulate.add_argument("--dump-replications", type=Path,
                          help="stream per-replication rows to this CSV file")
    return parser


def load_config_file(path: Path) -> dict[str, Any]:
    """Read a flat TOML document, normalizing ``-`` to ``_`` in keys."""
    try:
        with path.open("rb") as fh:
            raw = tomllib.load(fh)
    except (OSError, tomllib.TOMLDecodeError) as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    values = {key.replace("-", "_"): value for key, value in raw.items()}
    unknown = sorted(set(values) - _FILE_KEYS)
    if unknown:
        raise ConfigError(f"unknown config keys: {', '.join(unknown)}")
    nested = [key for key, value in values.items() if isinstance(value, dict)]
    if nested:
        raise ConfigError(f"config file must be flat, found tables: {', '.join(nested)}")
    return values


def parse_methods(value: str | list[str]) -> tuple[Method, ...]:
    """Parse `standard,pctl-calc` (flag) or `["standard", "pctl-calc"]` (file)."""
    if isinstance(value, str):
        items = value.split(",")
    elif isinstance(value, list) and all(isinstance(item, str) for item in value):
        items = value
    else:
        raise ConfigError(f"methods must be a string or a list of strings, got {value!r}")
    try:
        return tuple(Method(item.strip()) for item in items if item.strip())
    except ValueError as exc:
        raise ConfigError(f"unknown method in {value!r}: {exc}") from exc


def merge_values(args: argparse.Namespace) -> dict[str, Any]:
    """Flag values over file values."""
    flags = vars(args).copy()
    values: dict[str, Any] = {}
    config_path = flags.pop("config", None)
    if config_path is not None:
        values.update(load_config_file(config_path))
    values.update(flags)
    return values


def _build_design(values: dict[str, Any]) -> StudyDesign:
    fields: dict[str, Any] = {}
    preset = values.get("design")
    if preset is not None:
        if preset not in PRESETS:
            raise ConfigError(f"unknown design preset {preset!r}")
        fields.update(PRESETS[preset].model_dump())
    for key, field_name in _DESIGN_KEYS.items():
        if key in values:
            fields[field_name] = values[key]
    missing = [k for k, f in _DESIGN_KEYS.items() if f not in fields and k != "p_exposure"]
    if missing:
        raise ConfigError(f"missing required design field(s): {', '.join(missing)}")
    return StudyDesign(**fields)


def _build_settings(values: dict[str, Any]) -> SimulationSettings:
    fields = {f: values[k] for k, f in _SETTINGS_KEYS.items() if k in values}
    if "methods" in fields:
        fields["methods"] = parse_methods(fields["methods"])
    return SimulationSettings(**fields)


def config_from_values(mode: str, values: dict[str, Any]) -> RunConfig:
    """Validate merged flag/file values into a :class:`RunConfig`.

    Raises:
        ConfigError: a field is missing, out of range, or belongs to the other mode
    """
    foreign = sorted(set(values) & (_SIMULATE_ONLY if mode == "estimate" else _ESTIMATE_ONLY))
    if foreign:
        raise ConfigError(f"{mode} mode does not take: {', '.join(foreign)}")
    try:
        fields: dict[str, Any] = {"mode": mode, "settings": _build_settings(values)}
        if mode == "estimate":
            missing = [k for k in _TABLE_KEYS if k not in values]
            if missing:
                raise ConfigError(f"missing required cell(s): {', '.join(missing)}")
            fields["table"] = TableInput(**{k: values[k] for k in _TABLE_KEYS})
            if "continuity" in values:
                fields["continuity"] = values["continuity"]
        else:
            fields["design"] = _build_design(values)
            if "threads" in values:
                fields["threads"] = values["threads"]
            if "dump_replications" in values:
                fields["dump_replications"] = values["dump_replications"]
        if "format" in values:
            fields["output_format"] = values["format"]
        if "output" in values:
            fields["output"] = values["output"]
        return RunConfig(**fields)
    except ValidationError as exc:
        raise ConfigError(str(exc)) from exc


def parse_config(argv: list[str] | None = None) -> tuple[RunConfig, dict[str, Any]]:
    """Parse ``argv`` (and the ``--config`` file it names) into a RunConfig.

    Returns the config and the merged raw values (for logging options).
    Unknown flags exit with argparse's usage error (status 2); invalid
    values raise :class:`ConfigError`.
    """
    args = build_parser().parse_args(argv)
    values = merge_values(args)
    mode = values.pop("mode")
    return config_from_values(mode, values), values
