"""Fixtures for hyperbounds tests."""

from __future__ import annotations

from fractions import Fraction
from typing import TYPE_CHECKING

import pytest

from hyperbounds.config import RunConfig, build_run_config
from hyperbounds.const import CONF_SUBCOMMAND, ENV_CACHE_DIR, SUBCOMMAND_VERIFY
from hyperbounds.series import TruncationBox

if TYPE_CHECKING:
    from pathlib import Path

# ---------------------------------------------------------------------------
# Common test data
# ---------------------------------------------------------------------------

SAMPLE_R = 9
SAMPLE_N = 2

# CA(2, 9): C(w) = 1 + w + 2w^2, weighted against 2! 2! 9^2 / 4!
N2_CA = Fraction(262, 243)
N2_NUMERATOR = 524
N2_CENTRAL_MONOMIAL = 486
N2_C_COEFFS = {(0,): 1, (1,): 1, (2,): 2}

# Rounded values of the interval certificates at rho = 1/4.
CIRCLE_CERTIFICATES = {
    "0.286": 0.28603,
    "0.01164": 0.011643,
    "0.820": 0.82018,
    "0.328": 0.328125,
    "5.563": 5.5631,
    "1.442": 1.44283,
}

SMALL_BOX = TruncationBox((3, 3), total=4)


@pytest.fixture(autouse=True)
def clear_cache_env(monkeypatch: pytest.MonkeyPatch) -> None:
    """Keep a user cache directory out of every test."""
    monkeypatch.delenv(ENV_CACHE_DIR, raising=False)


@pytest.fixture
def small_config(tmp_path: Path) -> RunConfig:
    """Return a cheap verify-conjecture configuration writing into tmp_path."""
    return build_run_config(
        {
            CONF_SUBCOMMAND: SUBCOMMAND_VERIFY,
            "n_range": "2..3",
            "r": SAMPLE_R,
            "samples": 2001,
            "plots_dir": str(tmp_path / "plots"),
            "exact_max_n": 3,
        }
    )
