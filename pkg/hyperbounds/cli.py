"""Command-line entry point."""

from __future__ import annotations

import argparse
import dataclasses
import json
import logging
import sys
from typing import TYPE_CHECKING, Any, NoReturn

from .cache import CoefficientCache, resolve_cache_dir
from .checks import suite_units
from .config import RunConfig, build_run_config
from .const import (
    CACHE_ACTION_INSPECT,
    CACHE_ACTION_PURGE,
    CACHE_ACTION_WARM,
    CACHE_ACTIONS,
    CONF_BUDGET,
    CONF_C,
    CONF_CACHE_ACTION,
    CONF_CACHE_DIR,
    CONF_EXACT_MAX_N,
    CONF_MODE,
    CONF_N_RANGE,
    CONF_OUT,
    CONF_PLOTS_DIR,
    CONF_PRECISION,
    CONF_R,
    CONF_R_SWEEP,
    CONF_RHO,
    CONF_SAMPLES,
    CONF_SUBCOMMAND,
    CONF_TRUNC,
    CONF_VERBOSE,
    CONF_WORKERS,
    DOMAIN,
    ENV_CACHE_DIR,
    EXIT_CLAIM_FAILURE,
    EXIT_CONFIG,
    EXIT_OK,
    LOG_FORMAT,
    RUN_MODES,
    STATUS_FAIL,
    SUBCOMMAND_ALL,
    SUBCOMMAND_CACHE,
    SUBCOMMAND_CIRCLE,
    SUBCOMMAND_DEGREE_BOUNDS,
    SUBCOMMAND_ESTIMATES,
    SUBCOMMAND_VERIFY,
    SUBCOMMANDS,
    VERSION,
)
from .errors import ConfigError, HyperboundsError
from .runner import SuiteRunner

if TYPE_CHECKING:
    from collections.abc import Callable, Sequence

    from .report import SuiteReport

_LOGGER = logging.getLogger(__name__)


class _ArgumentParser(argparse.ArgumentParser):
    """Parser whose usage errors become configuration errors (exit 3, not 2)."""

    def error(self, message: str) -> NoReturn:
        """Raise instead of exiting."""
        raise ConfigError(message, error_code="usage")


def _add_run_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--n", dest=CONF_N_RANGE, help="dimension or range A..B (default 2..5)")
    parser.add_argument("--r", dest=CONF_R, type=int, help="single weight base r >= 3")
    parser.add_argument(
        "--r-sweep", dest=CONF_R_SWEEP, help="range A..B of r (default 9, 12, 20)"
    )
    parser.add_argument("--mode", dest=CONF_MODE, choices=RUN_MODES)
    parser.add_argument("--trunc", dest=CONF_TRUNC, type=int, help="certified truncation degree")
    parser.add_argument("--precision", dest=CONF_PRECISION, type=int, help="working bits")
    parser.add_argument("--samples", dest=CONF_SAMPLES, type=int, help="circle grid size")
    parser.add_argument("--rho", dest=CONF_RHO, type=float, help="circle radius in (0, 1/4]")
    parser.add_argument("--c", dest=CONF_C, type=float, help="truncation spread c > 0")
    parser.add_argument(
        "--cache-dir",
        dest=CONF_CACHE_DIR,
        help=f"coefficient cache directory (overridden by ${ENV_CACHE_DIR})",
    )
    parser.add_argument("--out", dest=CONF_OUT, help="write the JSON report here")
    parser.add_argument("--plots-dir", dest=CONF_PLOTS_DIR, help="directory for circle CSVs")
    parser.add_argument("--workers", dest=CONF_WORKERS, type=int)
    parser.add_argument(
        "--budget", dest=CONF_BUDGET, type=int, help="maximum dense coefficient count"
    )
    parser.add_argument(
        "--exact-max-n", dest=CONF_EXACT_MAX_N, type=int, help="largest n computed exactly"
    )
    parser.add_argument(
        "-v", "--verbose", dest=CONF_VERBOSE, action="count", default=0
    )


def build_parser() -> argparse.ArgumentParser:
    """Return the argument parser with one subparser per suite plus cache."""
    parser = _ArgumentParser(
        prog=DOMAIN,
        description="Exact verification of the degree-bound program for entire curves.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {VERSION}")
    subparsers = parser.add_subparsers(dest=CONF_SUBCOMMAND, required=True)
    for name in SUBCOMMANDS:
        sub = subparsers.add_parser(name)
        if name == SUBCOMMAND_CACHE:
            sub.add_argument(CONF_CACHE_ACTION, choices=CACHE_ACTIONS)
        _add_run_options(sub)
    return parser


def setup_logging(verbose: int) -> None:
    """Configure the root logger once: WARNING by default, INFO with -v, DEBUG with -vv."""
    level = logging.WARNING
    if verbose == 1:
        level = logging.INFO
    elif verbose > 1:
        level = logging.DEBUG
    logging.basicConfig(level=level, format=LOG_FORMAT)


def run_suite(config: RunConfig) -> SuiteReport:
    """Run the suite named by the configuration."""
    return SuiteRunner(config.workers).run_suite(config, suite_units(config))


def _for(config: RunConfig, subcommand: str) -> RunConfig:
    return dataclasses.replace(config, subcommand=subcommand)


def cmd_verify_conjecture(config: RunConfig) -> SuiteReport:
    """Check CA >= 1 over the configured dimensions and weights."""
    return run_suite(_for(config, SUBCOMMAND_VERIFY))


def cmd_degree_bounds(config: RunConfig) -> SuiteReport:
    """Run the degree-bound pipeline, gate scans and final thresholds."""
    return run_suite(_for(config, SUBCOMMAND_DEGREE_BOUNDS))


def cmd_estimates(config: RunConfig) -> SuiteReport:
    """Run the pole, Cauchy and evaluation estimates."""
    return run_suite(_for(config, SUBCOMMAND_ESTIMATES))


def cmd_circle(config: RunConfig) -> SuiteReport:
    """Run the maximum-modulus analysis and emit the profile CSVs."""
    return run_suite(_for(config, SUBCOMMAND_CIRCLE))


def cmd_all(config: RunConfig) -> SuiteReport:
    """Run every suite into a single report."""
    return run_suite(_for(config, SUBCOMMAND_ALL))


def cmd_cache(config: RunConfig) -> dict[str, Any]:
    """Warm, inspect or purge the coefficient cache.

    Raises:
        ConfigError: If no cache directory is configured

    """
    directory = resolve_cache_dir(config.cache_dir)
    if directory is None:
        raise ConfigError(f"cache needs --cache-dir or ${ENV_CACHE_DIR}")
    cache = CoefficientCache(directory)
    if config.cache_action == CACHE_ACTION_PURGE:
        return {"action": CACHE_ACTION_PURGE, "removed": cache.purge()}
    if config.cache_action == CACHE_ACTION_WARM:
        entries = cache.warm(config.n_values)
    else:
        entries = cache.inspect()
    return {
        "action": config.cache_action or CACHE_ACTION_INSPECT,
        "entries": [dataclasses.asdict(entry) for entry in entries],
    }


_COMMANDS: dict[str, Callable[[RunConfig], SuiteReport]] = {
    SUBCOMMAND_VERIFY: cmd_verify_conjecture,
    SUBCOMMAND_DEGREE_BOUNDS: cmd_degree_bounds,
    SUBCOMMAND_ESTIMATES: cmd_estimates,
    SUBCOMMAND_CIRCLE: cmd_circle,
    SUBCOMMAND_ALL: cmd_all,
}


def _emit(text: str, config: RunConfig, report: SuiteReport | None = None) -> None:
    if report is not None and config.out is not None:
        report.write(config.out)
        return
    sys.stdout.write(text + "\n")


def main(argv: Sequence[str] | None = None) -> int:
    """Run the command line and return the exit code."""
    try:
        args = build_parser().parse_args(argv)
    except ConfigError as err:
        setup_logging(0)
        _LOGGER.error("Invalid arguments: %s", err)
        return EXIT_CONFIG
    raw = vars(args)
    setup_logging(raw.get(CONF_VERBOSE, 0))
    try:
        config = build_run_config(raw)
        if config.subcommand == SUBCOMMAND_CACHE:
            _emit(json.dumps(cmd_cache(config), indent=2, sort_keys=True), config)
            return EXIT_OK
        report = _COMMANDS[config.subcommand](config)
    except HyperboundsError as err:
        _LOGGER.error("%s failed: %s", raw.get(CONF_SUBCOMMAND), err)
        return err.exit_code
    _emit(report.to_json(), config, report)
    if report.status == STATUS_FAIL:
        _LOGGER.error(
            "%d check(s) failed: %s",
            len(report.failures),
            ", ".join(record.check_id for record in report.failures),
        )
        return EXIT_CLAIM_FAILURE
    return EXIT_OK

