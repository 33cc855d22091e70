"""Tests for the command line."""

from __future__ import annotations

import json
import logging
from pathlib import Path
from unittest.mock import patch

import pytest

from hyperbounds.cli import build_parser, main, setup_logging
from hyperbounds.const import (
    EXIT_CLAIM_FAILURE,
    EXIT_CONFIG,
    EXIT_OK,
    EXIT_RESOURCE,
    STATUS_FAIL,
    STATUS_PASS,
)
from hyperbounds.errors import ConfigError
from hyperbounds.report import CheckRecord, SuiteReport

from .conftest import SAMPLE_R

# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def test_parser_maps_options_to_config_keys() -> None:
    """Test that options land on the configuration keys."""
    args = build_parser().parse_args(
        ["circle", "--n", "2..4", "--rho", "0.2", "--plots-dir", "out", "-vv"]
    )
    assert vars(args)["subcommand"] == "circle"
    assert args.n_range == "2..4"
    assert args.rho == 0.2
    assert args.plots_dir == "out"
    assert args.verbose == 2
    assert args.r is None


def test_parser_errors_raise() -> None:
    """Test that usage errors raise instead of exiting."""
    with pytest.raises(ConfigError) as err:
        build_parser().parse_args(["prove"])
    assert err.value.error_code == "usage"


@pytest.mark.parametrize(
    ("verbose", "level"), [(0, logging.WARNING), (1, logging.INFO), (3, logging.DEBUG)]
)
def test_setup_logging(verbose: int, level: int) -> None:
    """Test the verbosity levels."""
    with patch("hyperbounds.cli.logging.basicConfig") as basic_config:
        setup_logging(verbose)
    assert basic_config.call_args.kwargs["level"] == level


# ---------------------------------------------------------------------------
# Exit codes
# ---------------------------------------------------------------------------


def test_verify_writes_report(tmp_path: Path) -> None:
    """Test a passing run written to --out."""
    out = tmp_path / "reports" / "verify.json"
    code = main(["verify-conjecture", "--n", "2", "--r", str(SAMPLE_R), "--out", str(out)])
    assert code == EXIT_OK
    document = json.loads(out.read_text(encoding="utf-8"))
    assert document["status"] == STATUS_PASS
    assert document["suite"] == "verify-conjecture"
    assert document["config"]["r_values"] == [SAMPLE_R]
    ca_ids = [check["id"] for check in document["checks"] if check["id"].startswith("ca_")]
    assert ca_ids == [f"ca_at_least_one[n=2,r={SAMPLE_R}]", f"ca_closed_form_n2[r={SAMPLE_R}]"]
    assert f"ca_at_least_one[n=2,r={SAMPLE_R}]" in document["data"]["conjectures"]
    assert document["checks"][0]["anchor"] == "Problem 4.2 / Proposition 4.1"
    assert all(check["anchor"] for check in document["checks"])


def test_report_goes_to_stdout(capsys: pytest.CaptureFixture[str]) -> None:
    """Test that the report is printed without --out."""
    failing = SuiteReport(
        suite="estimates",
        config={},
        checks=[
            CheckRecord(check_id="x", claim="claim", status=STATUS_FAIL, witness={}),
        ],
    )
    with patch("hyperbounds.cli.run_suite", return_value=failing):
        code = main(["estimates"])
    assert code == EXIT_CLAIM_FAILURE
    assert json.loads(capsys.readouterr().out)["status"] == STATUS_FAIL


@pytest.mark.parametrize(
    "argv",
    [
        ["verify-conjecture", "--r", "1"],
        ["verify-conjecture", "--rho", "0.5"],
        ["prove"],
        [],
        ["cache"],
        ["verify-conjecture", "--precision", "many"],
    ],
)
def test_configuration_errors(argv: list[str]) -> None:
    """Test that invalid invocations exit with the configuration code."""
    assert main(argv) == EXIT_CONFIG


def test_budget_exceeded() -> None:
    """Test that a box over budget exits with the resource code."""
    assert main(["verify-conjecture", "--n", "7", "--mode", "exact", "--budget", "10"]) == (
        EXIT_RESOURCE
    )


# ---------------------------------------------------------------------------
# Cache subcommand
# ---------------------------------------------------------------------------


def test_cache_lifecycle(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    """Test warm, inspect and purge through the command line."""
    cache_dir = str(tmp_path / "cache")
    assert main(["cache", "warm", "--n", "2", "--cache-dir", cache_dir]) == EXIT_OK
    warmed = json.loads(capsys.readouterr().out)
    assert warmed["action"] == "warm"
    assert len(warmed["entries"]) == 2

    assert main(["cache", "inspect", "--cache-dir", cache_dir]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["entries"] == warmed["entries"]

    assert main(["cache", "purge", "--cache-dir", cache_dir]) == EXIT_OK
    assert json.loads(capsys.readouterr().out) == {"action": "purge", "removed": 2}


def test_cache_needs_directory() -> None:
    """Test the cache subcommand without a directory."""
    assert main(["cache", "inspect"]) == EXIT_CONFIG


@pytest.mark.parametrize(
    "subcommand", ["verify-conjecture", "degree-bounds", "estimates", "circle", "all"]
)
def test_subcommand_dispatch(subcommand: str) -> None:
    """Test that each subcommand runs its own suite."""
    report = SuiteReport(suite=subcommand, config={})
    with patch("hyperbounds.cli.run_suite", return_value=report) as run_suite:
        assert main([subcommand, "--n", "2"]) == EXIT_OK
    assert run_suite.call_args.args[0].subcommand == subcommand
