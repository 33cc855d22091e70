"""Tests for the check registry and suite expansion."""

from __future__ import annotations

import dataclasses
from pathlib import Path
import pickle

import pytest

from hyperbounds.cache import CoefficientCache
from hyperbounds.checks import (
    CIRCLE_CHECKS,
    CONJECTURE_CHECKS,
    DEGREE_BOUND_CHECKS,
    ESTIMATE_CHECKS,
    SERIES_CHECKS,
    SUITES,
    CheckDescription,
    config_cache,
    expand_units,
    suite_units,
)
from hyperbounds.config import RunConfig
from hyperbounds.const import (
    ENV_CACHE_DIR,
    SUBCOMMAND_ALL,
    SUBCOMMAND_CIRCLE,
    SUBCOMMAND_ESTIMATES,
    SUBCOMMANDS,
)
from hyperbounds.types import CheckOutcome

from .conftest import N2_CA, SAMPLE_R


def _ids(config: RunConfig) -> list[str]:
    return [unit.check_id for unit in suite_units(config)]


# ---------------------------------------------------------------------------
# Registry
# ---------------------------------------------------------------------------


def test_every_suite_subcommand_is_registered() -> None:
    """Test that each suite subcommand has a registry entry."""
    assert set(SUITES) == set(SUBCOMMANDS) - {"cache"}
    assert SUITES[SUBCOMMAND_ESTIMATES] == SERIES_CHECKS + ESTIMATE_CHECKS
    assert SUITES[SUBCOMMAND_ALL] == (
        CONJECTURE_CHECKS
        + DEGREE_BOUND_CHECKS
        + SERIES_CHECKS
        + ESTIMATE_CHECKS
        + CIRCLE_CHECKS
    )


def test_keys_are_unique() -> None:
    """Test that no two families share a key."""
    keys = [description.key for description in SUITES[SUBCOMMAND_ALL]]
    assert len(keys) == len(set(keys))


def test_every_family_carries_a_claim() -> None:
    """Test that every family states what it verifies."""
    assert all(description.claim for description in SUITES[SUBCOMMAND_ALL])


def test_every_family_carries_an_anchor() -> None:
    """Test that every family names the statement it traces back to."""
    anchors = {description.key: description.anchor for description in SUITES[SUBCOMMAND_ALL]}
    assert all(anchors.values())
    assert anchors["evaluation_estimates"] == "Lemmas 9.1-9.3"
    assert anchors["diagonal_positivity"] == "Lemma 7.1"
    assert anchors["a_constructions_agree"] == "Proposition 4.1"
    assert anchors["sine_square_exclusion"] == "Assertion 11.7"


def test_informational_families() -> None:
    """Test which families never fail a run."""
    informational = {
        description.key for description in SUITES[SUBCOMMAND_ALL] if description.informational
    }
    assert informational == {"ratio_table", "final_minorant", "modulus_profile"}


# ---------------------------------------------------------------------------
# Expansion
# ---------------------------------------------------------------------------


def test_expand_units_labels() -> None:
    """Test labels list identifying parameters and skip tuning ones."""

    def params(config: RunConfig) -> list[dict[str, object]]:
        return [{"n": 2, "r": 9, "budget": 10, "precision": 64}, {}]

    description = CheckDescription(
        key="demo",
        claim="demo claim",
        anchor="Lemma 0.1",
        run_fn=lambda **_: CheckOutcome(passed=True),
        params_fn=params,
    )
    units = expand_units([description], None)  # type: ignore[arg-type]
    assert [unit.check_id for unit in units] == ["demo[n=2,r=9]", "demo"]
    assert units[0].params["budget"] == 10
    assert units[0].claim == "demo claim"
    assert units[1].anchor == "Lemma 0.1"


def test_conjecture_suite_expansion(small_config: RunConfig) -> None:
    """Test the conjecture units for n = 2..3 at a single r."""
    ids = _ids(small_config)
    assert ids[:2] == [f"ca_at_least_one[n=2,r={SAMPLE_R}]", f"ca_at_least_one[n=3,r={SAMPLE_R}]"]
    assert f"ca_closed_form_n2[r={SAMPLE_R}]" in ids
    assert f"ratio_table[r={SAMPLE_R}]" in ids
    assert "multinomial_quotient_bounds[n=3]" in ids
    assert "central_multinomial_dominance[n=2]" in ids
    assert "falling_quotient_minoration[n=3,k_max=1,ell_max=3]" in ids
    assert f"truncation_identities[n=3,r={SAMPLE_R},c=2.0]" in ids
    assert len(ids) == len(set(ids))


def test_closed_form_needs_dimension_two(small_config: RunConfig) -> None:
    """Test that the dimension-two closed form is skipped when n = 2 is not swept."""
    config = dataclasses.replace(small_config, n_range=(3, 3))
    assert not any(unit_id.startswith("ca_closed_form_n2") for unit_id in _ids(config))


def test_estimates_suite_expansion(small_config: RunConfig) -> None:
    """Test the generating-function units at their fixed sizes."""
    config = dataclasses.replace(small_config, subcommand=SUBCOMMAND_ESTIMATES)
    units = suite_units(config)
    ids = [unit.check_id for unit in units]
    assert [unit_id for unit_id in ids if unit_id.startswith("diagonal_positivity")] == [
        f"diagonal_positivity[n={n}]" for n in (4, 9, 16, 25)
    ]
    assert [unit_id for unit_id in ids if unit_id.startswith("a_constructions_agree")] == [
        f"a_constructions_agree[n={n},r=9]" for n in (2, 3, 4, 5)
    ]
    assert "grouping_agrees[n=4,total=8]" in ids
    assert "majorant_domination[n=5,h_max=20]" in ids
    coordinate = [unit for unit in units if unit.check_id.startswith("coordinate_change")]
    assert [unit.params["n"] for unit in coordinate] == [2, 3, 4, 5, 6]
    assert all(unit.params["points"] == 100 for unit in coordinate)
    assert all(unit.anchor for unit in units)


def test_cauchy_units_take_no_precision(small_config: RunConfig) -> None:
    """Test that the exact Cauchy check is expanded without a precision."""
    config = dataclasses.replace(small_config, subcommand=SUBCOMMAND_ESTIMATES)
    cauchy = [unit for unit in suite_units(config) if unit.check_id.startswith("cauchy_bound")]
    assert len(cauchy) == 7 * 3
    assert all(set(unit.params) == {"n", "rho", "h_max"} for unit in cauchy)
    assert cauchy[0].run().passed


def test_exact_families_follow_exact_max_n(small_config: RunConfig) -> None:
    """Test that exact-only families stop at exact_max_n."""
    config = dataclasses.replace(small_config, exact_max_n=2)
    ids = _ids(config)
    assert f"certified_below_exact[n=2,r={SAMPLE_R}]" in ids
    assert f"certified_below_exact[n=3,r={SAMPLE_R}]" not in ids


def test_circle_suite_writes_into_plots_dir(small_config: RunConfig) -> None:
    """Test that profile units point at the configured plots directory."""
    config = dataclasses.replace(small_config, subcommand=SUBCOMMAND_CIRCLE)
    profiles = [unit for unit in suite_units(config) if unit.check_id.startswith("modulus_profile")]
    assert profiles
    assert all(unit.params["directory"] == small_config.plots_dir for unit in profiles)
    assert all(unit.data_key == "plots" for unit in profiles)


def test_units_pickle(small_config: RunConfig) -> None:
    """Test that bound units can cross a process boundary."""
    for unit in suite_units(small_config):
        restored = pickle.loads(pickle.dumps(unit.bound()))
        assert restored.func is unit.run_fn


# ---------------------------------------------------------------------------
# Running units
# ---------------------------------------------------------------------------


def test_ca_unit_runs(small_config: RunConfig) -> None:
    """Test the dimension-two CA unit in process."""
    unit = suite_units(small_config)[0]
    outcome = unit.run()
    assert outcome.passed
    assert outcome.witness["CA"] == N2_CA


def test_closed_form_unit_runs(small_config: RunConfig) -> None:
    """Test the closed form CA = 1 + 2/(3r) + 1/(3r^2)."""
    unit = next(
        unit for unit in suite_units(small_config) if unit.check_id.startswith("ca_closed_form")
    )
    outcome = unit.run()
    assert outcome.passed
    assert outcome.witness["closed_form"] == N2_CA


# ---------------------------------------------------------------------------
# Cache selection
# ---------------------------------------------------------------------------


def test_config_cache(
    small_config: RunConfig, tmp_path: Path, monkeypatch: pytest.MonkeyPatch
) -> None:
    """Test that units share the configured cache directory."""
    assert config_cache(small_config) is None
    monkeypatch.setenv(ENV_CACHE_DIR, str(tmp_path / "env"))
    cache = config_cache(small_config)
    assert isinstance(cache, CoefficientCache)
    assert cache.directory == tmp_path / "env"
