"""End-to-end tests of the ``odds-ratio-mc`` entry point."""

import csv
import io
from pathlib import Path

import pytest

from odds_ratio_mc.cli import CSV_HEADER, main, parse_structured
from odds_ratio_mc.cli.main import EXIT_FAILURE, EXIT_OK, EXIT_USAGE

TABLE_ARGS = ["--a", "77", "--b", "22", "--c", "92", "--d", "7"]
SMALL_RUN = ["simulate", "--design", "protective", "--mc", "20", "--pbs", "20", "--seed", "1"]


class TestEstimateMode:
    def test_markdown_to_stdout(self, capsys):
        """The markdown estimate goes to stdout."""
        assert main(["estimate", *TABLE_ARGS, "-q"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "## Table a=77.5 b=22.5 c=92.5 d=7.5" in out
        assert "Pctl Boot. (II)" in out

    def test_no_correction(self, capsys):
        """With continuity 0 the standard point is the raw cross-product ratio."""
        assert main(["estimate", *TABLE_ARGS, "--continuity", "0", "--format", "csv"]) == EXIT_OK
        rows = list(csv.reader(io.StringIO(capsys.readouterr().out)))
        assert float(rows[1][1]) == pytest.approx(77 * 7 / (22 * 92))

    def test_zero_cell_without_correction_fails(self, capsys):
        """A zero cell without correction exits with status 1 and no document."""
        argv = ["estimate", "--a", "0", "--b", "5", "--c", "5", "--d", "5", "--continuity", "0"]
        assert main(argv) == EXIT_FAILURE
        assert capsys.readouterr().out == ""

    def test_zero_cell_with_correction(self, capsys):
        """The default correction makes a zero-cell table estimable."""
        argv = ["estimate", "--a", "0", "--b", "5", "--c", "5", "--d", "5", "--methods", "standard"]
        assert main(argv) == EXIT_OK


class TestSimulateMode:
    def test_csv_report(self, capsys):
        """CSV report has the header and one row per method."""
        assert main([*SMALL_RUN, "--format", "csv", "-q"]) == EXIT_OK
        rows = list(csv.reader(io.StringIO(capsys.readouterr().out)))
        assert tuple(rows[0]) == CSV_HEADER
        assert len(rows) == 5

    def test_structured_report_to_file(self, capsys, tmp_path: Path):
        """--output writes the document to a file and leaves stdout empty."""
        target = tmp_path / "report.json"
        argv = [*SMALL_RUN, "--format", "structured", "--output", str(target)]
        assert main(argv) == EXIT_OK
        assert capsys.readouterr().out == ""
        report = parse_structured(target.read_text())
        assert report.settings.mc_count == 20
        assert report.settings.seed == 1

    def test_same_seed_same_document(self, capsys):
        """The same seed gives the same document for any worker count."""
        main([*SMALL_RUN, "--format", "csv"])
        first = capsys.readouterr().out
        main([*SMALL_RUN, "--format", "csv", "--threads", "8"])
        assert capsys.readouterr().out == first

    def test_dump_replications(self, capsys, tmp_path: Path):
        """The dump file holds a header and one row per replication and method."""
        dump = tmp_path / "reps.csv"
        assert main([*SMALL_RUN, "--methods", "standard,pctl-calc",
                     "--dump-replications", str(dump)]) == EXIT_OK
        rows = list(csv.reader(io.StringIO(dump.read_text())))
        assert rows[0][0] == "replication"
        assert len(rows) == 1 + 20 * 2

    def test_config_file(self, capsys, tmp_path: Path):
        """A TOML config file drives a full run."""
        path = tmp_path / "run.toml"
        path.write_text('design = "harmful"\nmc = 10\npbs = 10\nformat = "csv"\n')
        assert main(["simulate", "--config", str(path)]) == EXIT_OK
        assert capsys.readouterr().out.startswith(",".join(CSV_HEADER))


class TestExitStatus:
    def test_invalid_value(self, capsys):
        """An invalid value exits with status 2 and no document."""
        assert main(["simulate", "--design", "protective", "--alpha", "2"]) == EXIT_USAGE
        assert capsys.readouterr().out == ""

    def test_unknown_method(self):
        """An unknown method exits with status 2."""
        assert main(["estimate", *TABLE_ARGS, "--methods", "exact"]) == EXIT_USAGE

    def test_missing_mode(self):
        """A missing subcommand is an argparse usage error."""
        with pytest.raises(SystemExit) as exc:
            main([])
        assert exc.value.code == EXIT_USAGE

    def test_non_string_methods_in_file(self, tmp_path: Path):
        """A malformed methods value in the config file is a usage error."""
        path = tmp_path / "run.toml"
        path.write_text('design = "harmful"\nmethods = 5\n')
        assert main(["simulate", "--config", str(path)]) == EXIT_USAGE

    def test_dump_into_missing_directory(self, capsys, tmp_path: Path):
        """An unwritable dump path fails cleanly with status 1."""
        dump = tmp_path / "nope" / "reps.csv"
        assert main([*SMALL_RUN, "--dump-replications", str(dump)]) == EXIT_FAILURE
        assert capsys.readouterr().out == ""

    def test_output_into_missing_directory(self, tmp_path: Path):
        """An unwritable output path fails cleanly with status 1."""
        target = tmp_path / "nope" / "report.md"
        assert main(["estimate", *TABLE_ARGS, "--output", str(target)]) == EXIT_FAILURE
