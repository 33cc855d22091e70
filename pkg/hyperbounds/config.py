"""Run configuration for the hyperbounds command line."""

from __future__ import annotations

from dataclasses import dataclass
import logging
from pathlib import Path
import re
from typing import Any

import voluptuous as vol

from .const import (
    CACHE_ACTIONS,
    CIRCLE_MAX_RHO,
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
    DEFAULT_C,
    DEFAULT_COEFF_BUDGET,
    DEFAULT_EXACT_MAX_N,
    DEFAULT_N_RANGE,
    DEFAULT_PLOTS_DIR,
    DEFAULT_PRECISION,
    DEFAULT_R_SWEEP,
    DEFAULT_RHO,
    DEFAULT_SAMPLES,
    DEFAULT_TRUNC,
    DEFAULT_WORKERS,
    MAX_N,
    MAX_PRECISION,
    MAX_R,
    MAX_SAMPLES,
    MAX_TRUNC,
    MAX_WORKERS,
    MIN_N,
    MIN_PRECISION,
    MIN_R,
    MIN_SAMPLES,
    MODE_AUTO,
    RUN_MODES,
    SUBCOMMAND_CACHE,
    SUBCOMMANDS,
)
from .errors import ConfigError

_LOGGER = logging.getLogger(__name__)

_RANGE_PATTERN = re.compile(r"^\s*(\d+)\s*(?:\.\.\s*(\d+)\s*)?$")


def parse_range(value: Any) -> tuple[int, int]:
    """Parse ``A..B`` (inclusive) or a single integer ``A`` into (A, B).

    Raises:
        vol.Invalid: If the text is not a range or A > B

    """
    if isinstance(value, tuple | list) and len(value) == 2:
        low, high = int(value[0]), int(value[1])
    elif isinstance(value, int) and not isinstance(value, bool):
        low = high = value
    else:
        match = _RANGE_PATTERN.match(str(value))
        if match is None:
            raise vol.Invalid(f"expected A..B or an integer, got {value!r}")
        low = int(match.group(1))
        high = int(match.group(2) or match.group(1))
    if low > high:
        raise vol.Invalid(f"empty range {low}..{high}")
    return (low, high)


def _within(minimum: int, maximum: int) -> Any:
    def validate(bounds: tuple[int, int]) -> tuple[int, int]:
        if bounds[0] < minimum or bounds[1] > maximum:
            raise vol.Invalid(f"range must lie within {minimum}..{maximum}")
        return bounds

    return validate


def _sweep(value: Any) -> tuple[int, ...]:
    if isinstance(value, tuple | list) and len(value) != 2:
        return tuple(int(item) for item in value)
    low, high = parse_range(value)
    return tuple(range(low, high + 1))


def _r_values_valid(values: tuple[int, ...]) -> tuple[int, ...]:
    if not values or min(values) < MIN_R or max(values) > MAX_R:
        raise vol.Invalid(f"r must lie within {MIN_R}..{MAX_R}")
    return values


def _optional_path(value: Any) -> Path | None:
    return None if value in (None, "") else Path(value)


RUN_CONFIG_SCHEMA = vol.Schema(
    {
        vol.Required(CONF_SUBCOMMAND): vol.In(SUBCOMMANDS),
        vol.Optional(CONF_N_RANGE, default=DEFAULT_N_RANGE): vol.All(
            parse_range, _within(MIN_N, MAX_N)
        ),
        vol.Optional(CONF_R, default=None): vol.Any(
            None, vol.All(vol.Coerce(int), vol.Range(min=MIN_R, max=MAX_R))
        ),
        vol.Optional(CONF_R_SWEEP, default=DEFAULT_R_SWEEP): vol.All(
            _sweep, _r_values_valid
        ),
        vol.Optional(CONF_MODE, default=MODE_AUTO): vol.In(RUN_MODES),
        vol.Optional(CONF_TRUNC, default=DEFAULT_TRUNC): vol.All(
            vol.Coerce(int), vol.Range(min=0, max=MAX_TRUNC)
        ),
        vol.Optional(CONF_PRECISION, default=DEFAULT_PRECISION): vol.All(
            vol.Coerce(int), vol.Range(min=MIN_PRECISION, max=MAX_PRECISION)
        ),
        vol.Optional(CONF_SAMPLES, default=DEFAULT_SAMPLES): vol.All(
            vol.Coerce(int), vol.Range(min=MIN_SAMPLES, max=MAX_SAMPLES)
        ),
        vol.Optional(CONF_RHO, default=DEFAULT_RHO): vol.All(
            vol.Coerce(float),
            vol.Range(min=0, max=CIRCLE_MAX_RHO, min_included=False),
        ),
        vol.Optional(CONF_C, default=DEFAULT_C): vol.All(
            vol.Coerce(float), vol.Range(min=0, min_included=False)
        ),
        vol.Optional(CONF_CACHE_DIR, default=None): _optional_path,
        vol.Optional(CONF_CACHE_ACTION, default=None): vol.Any(None, vol.In(CACHE_ACTIONS)),
        vol.Optional(CONF_OUT, default=None): _optional_path,
        vol.Optional(CONF_PLOTS_DIR, default=DEFAULT_PLOTS_DIR): vol.Coerce(Path),
        vol.Optional(CONF_WORKERS, default=DEFAULT_WORKERS): vol.All(
            vol.Coerce(int), vol.Range(min=1, max=MAX_WORKERS)
        ),
        vol.Optional(CONF_BUDGET, default=DEFAULT_COEFF_BUDGET): vol.All(
            vol.Coerce(int), vol.Range(min=1)
        ),
        vol.Optional(CONF_EXACT_MAX_N, default=DEFAULT_EXACT_MAX_N): vol.All(
            vol.Coerce(int), vol.Range(min=MIN_N, max=MAX_N)
        ),
        vol.Optional(CONF_VERBOSE, default=0): vol.All(vol.Coerce(int), vol.Range(min=0)),
    }
)


@dataclass(frozen=True, kw_only=True)
class RunConfig:
    """Validated settings for one invocation."""

    subcommand: str
    n_range: tuple[int, int]
    r_values: tuple[int, ...]
    mode: str
    trunc: int
    precision: int
    samples: int
    rho: float
    c: float
    cache_dir: Path | None
    cache_action: str | None
    out: Path | None
    plots_dir: Path
    workers: int
    budget: int
    exact_max_n: int
    verbose: int = 0

    @property
    def n_values(self) -> range:
        """Return the inclusive dimension range."""
        return range(self.n_range[0], self.n_range[1] + 1)

    def as_dict(self) -> dict[str, Any]:
        """Return the configuration echo written into reports.

        Output locations and verbosity do not change results and are left out.
        """
        return {
            CONF_SUBCOMMAND: self.subcommand,
            CONF_N_RANGE: list(self.n_range),
            "r_values": list(self.r_values),
            CONF_MODE: self.mode,
            CONF_TRUNC: self.trunc,
            CONF_PRECISION: self.precision,
            CONF_SAMPLES: self.samples,
            CONF_RHO: self.rho,
            CONF_C: self.c,
            CONF_BUDGET: self.budget,
            CONF_EXACT_MAX_N: self.exact_max_n,
        }


def build_run_config(raw: dict[str, Any]) -> RunConfig:
    """Validate a raw mapping and build the run configuration.

    A single ``r`` overrides the r sweep.

    Raises:
        ConfigError: If any value fails validation

    """
    cleaned = {key: value for key, value in raw.items() if value is not None}
    try:
        data = RUN_CONFIG_SCHEMA(cleaned)
    except vol.Invalid as err:
        raise ConfigError(f"invalid configuration: {err}", error_code="schema") from err
    if data[CONF_SUBCOMMAND] == SUBCOMMAND_CACHE and data[CONF_CACHE_ACTION] is None:
        raise ConfigError("cache needs an action (warm, inspect or purge)")
    r_values = (data[CONF_R],) if data[CONF_R] is not None else data[CONF_R_SWEEP]
    config = RunConfig(
        subcommand=data[CONF_SUBCOMMAND],
        n_range=data[CONF_N_RANGE],
        r_values=r_values,
        mode=data[CONF_MODE],
        trunc=data[CONF_TRUNC],
        precision=data[CONF_PRECISION],
        samples=data[CONF_SAMPLES],
        rho=data[CONF_RHO],
        c=data[CONF_C],
        cache_dir=data[CONF_CACHE_DIR],
        cache_action=data[CONF_CACHE_ACTION],
        out=data[CONF_OUT],
        plots_dir=data[CONF_PLOTS_DIR],
        workers=data[CONF_WORKERS],
        budget=data[CONF_BUDGET],
        exact_max_n=data[CONF_EXACT_MAX_N],
        verbose=data[CONF_VERBOSE],
    )
    _LOGGER.debug("Run configuration: %s", config)
    return config
