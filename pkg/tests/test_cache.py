"""Tests for the coefficient cache."""

from __future__ import annotations

from typing import TYPE_CHECKING
from unittest.mock import MagicMock, patch

import pytest

from hyperbounds.cache import CoefficientCache, coefficients, resolve_cache_dir
from hyperbounds.conjecture import compute_CA_exact
from hyperbounds.const import ENV_CACHE_DIR, SERIES_KIND_C, SERIES_KIND_C_HAT
from hyperbounds.errors import DomainError
from hyperbounds.generating import build_C, staircase_box

from .conftest import N2_C_COEFFS, SAMPLE_R

if TYPE_CHECKING:
    from pathlib import Path


@pytest.fixture
def cache(tmp_path: Path) -> CoefficientCache:
    """Return an empty cache in a temporary directory."""
    return CoefficientCache(tmp_path / "cache")


def test_resolve_prefers_environment(
    tmp_path: Path, monkeypatch: pytest.MonkeyPatch
) -> None:
    """Test that the environment variable overrides the CLI value."""
    assert resolve_cache_dir(None) is None
    assert resolve_cache_dir(tmp_path / "cli") == tmp_path / "cli"
    monkeypatch.setenv(ENV_CACHE_DIR, str(tmp_path / "env"))
    assert resolve_cache_dir(tmp_path / "cli") == tmp_path / "env"


def test_store_then_load(cache: CoefficientCache) -> None:
    """Test that a stored table loads back identically."""
    box = staircase_box(3)
    series = build_C(3, box)
    path = cache.store(SERIES_KIND_C, 3, series)
    assert path.exists()
    assert not list(cache.directory.glob(".tmp-*"))
    assert cache.load(SERIES_KIND_C, 3, box) == series
    assert cache.load(SERIES_KIND_C_HAT, 3, box) is None


def test_hit_skips_builder(cache: CoefficientCache) -> None:
    """Test that a cached table is not rebuilt."""
    box = staircase_box(2)
    cache.get_or_build(SERIES_KIND_C, 2, box)
    builder = MagicMock()
    with patch.dict("hyperbounds.cache._BUILDERS", {SERIES_KIND_C: builder}):
        series = cache.get_or_build(SERIES_KIND_C, 2, box)
    builder.assert_not_called()
    assert dict(series.coeffs) == N2_C_COEFFS


def test_corrupt_entry_is_discarded(cache: CoefficientCache) -> None:
    """Test that a failed checksum drops the entry and triggers a rebuild."""
    box = staircase_box(2)
    path = cache.store(SERIES_KIND_C, 2, build_C(2, box))
    path.write_text(path.read_text(encoding="utf-8").replace(":2", ":3"), encoding="utf-8")
    assert cache.load(SERIES_KIND_C, 2, box) is None
    assert not path.exists()
    rebuilt = cache.get_or_build(SERIES_KIND_C, 2, box)
    assert dict(rebuilt.coeffs) == N2_C_COEFFS
    assert path.exists()


def test_wrong_header_is_discarded(cache: CoefficientCache) -> None:
    """Test that an entry with a foreign header is not trusted."""
    box = staircase_box(2)
    path = cache.entry_path(SERIES_KIND_C, 2, box)
    path.write_text("not a cache entry\n", encoding="utf-8")
    assert cache.load(SERIES_KIND_C, 2, box) is None


def test_unknown_kind(cache: CoefficientCache) -> None:
    """Test that only C and Ĉ can be built."""
    with pytest.raises(DomainError, match="kind"):
        cache.get_or_build("D", 2, staircase_box(2))


def test_warm_inspect_purge(cache: CoefficientCache) -> None:
    """Test the cache maintenance operations."""
    entries = cache.warm([2, 3])
    assert len(entries) == 4
    by_name = {entry.name: entry for entry in entries}
    n2_name = cache.entry_path(SERIES_KIND_C, 2, staircase_box(2)).name
    assert by_name[n2_name].coefficients == 3
    assert all(len(entry.checksum) == 64 for entry in entries)
    assert cache.purge() == 4
    assert cache.inspect() == []


def test_coefficients_with_and_without_cache(cache: CoefficientCache) -> None:
    """Test that the cached path returns the same table as a direct build."""
    box = staircase_box(3)
    direct = coefficients(3, box, majorant=True)
    cached = coefficients(3, box, majorant=True, cache=cache)
    assert direct == cached
    assert len(cache.inspect()) == 1


def test_second_run_reuses_warm_cache(cache: CoefficientCache) -> None:
    """Test that a run after warming reads every table from disk."""
    cold = compute_CA_exact(3, SAMPLE_R, cache=cache)
    cache.warm([3])
    builders = {SERIES_KIND_C: MagicMock(), SERIES_KIND_C_HAT: MagicMock()}
    with patch.dict("hyperbounds.cache._BUILDERS", builders):
        box = staircase_box(3)
        assert coefficients(3, box, cache=cache) == build_C(3, box)
        assert coefficients(3, box, majorant=True, cache=cache).coeffs
        warm = compute_CA_exact(3, SAMPLE_R, cache=cache)
    for builder in builders.values():
        builder.assert_not_called()
    assert warm.CA == cold.CA
    assert len(cache.inspect()) == 2
