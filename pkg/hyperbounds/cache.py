"""On-disk cache of C and Ĉ coefficient tables."""

from __future__ import annotations

from dataclasses import dataclass
import hashlib
import logging
import os
from pathlib import Path
import tempfile
from typing import TYPE_CHECKING

from .const import (
    CACHE_FORMAT_VERSION,
    CACHE_HEADER,
    CACHE_SUFFIX,
    ENV_CACHE_DIR,
    SERIES_KIND_C,
    SERIES_KIND_C_HAT,
)
from .errors import CacheCorruptError, DomainError
from .generating import build_C, build_C_hat, staircase_box
from .series import dumps_series, loads_series

if TYPE_CHECKING:
    from collections.abc import Iterable

    from .series import MultiSeries, TruncationBox

_LOGGER = logging.getLogger(__name__)

_BUILDERS = {SERIES_KIND_C: build_C, SERIES_KIND_C_HAT: build_C_hat}


@dataclass(frozen=True)
class CacheEntry:
    """One cached coefficient table as listed by ``inspect``."""

    name: str
    size_bytes: int
    coefficients: int
    checksum: str


def resolve_cache_dir(cli_value: str | Path | None) -> Path | None:
    """Return the cache directory: environment variable first, then CLI value."""
    env_value = os.environ.get(ENV_CACHE_DIR)
    if env_value:
        return Path(env_value)
    return Path(cli_value) if cli_value else None


class CoefficientCache:
    """Directory of checksummed series dumps keyed by kind, n and box."""

    def __init__(self, directory: Path) -> None:
        """Initialize the cache and create its directory."""
        self.directory = directory
        self.directory.mkdir(parents=True, exist_ok=True)

    def entry_path(self, kind: str, n: int, box: TruncationBox) -> Path:
        """Return the file that holds the table for (kind, n, box)."""
        caps = "-".join(str(cap) for cap in box.caps)
        total = "none" if box.total is None else str(box.total)
        name = f"{kind}_n{n}_caps{caps}_t{total}_v{CACHE_FORMAT_VERSION}{CACHE_SUFFIX}"
        return self.directory / name

    def load(self, kind: str, n: int, box: TruncationBox) -> MultiSeries | None:
        """Return the cached table, or None when absent or corrupt."""
        path = self.entry_path(kind, n, box)
        if not path.exists():
            return None
        try:
            series = _parse_entry(path.read_text(encoding="utf-8"), kind)
        except CacheCorruptError as err:
            _LOGGER.warning("Discarding corrupt cache entry %s: %s", path.name, err)
            path.unlink(missing_ok=True)
            return None
        if series.box != box:
            _LOGGER.warning("Discarding cache entry %s with mismatched box", path.name)
            path.unlink(missing_ok=True)
            return None
        _LOGGER.debug("Cache hit for %s", path.name)
        return series

    def store(self, kind: str, n: int, series: MultiSeries) -> Path:
        """Publish a table atomically (temp file in the same directory, then rename)."""
        path = self.entry_path(kind, n, series.box)
        body = dumps_series(series)
        checksum = hashlib.sha256(body.encode("utf-8")).hexdigest()
        text = f"{CACHE_HEADER}\nkind={kind}\nsha256={checksum}\n{body}"
        fd, temp_name = tempfile.mkstemp(
            dir=self.directory, prefix=".tmp-", suffix=CACHE_SUFFIX
        )
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as handle:
                handle.write(text)
            Path(temp_name).replace(path)
        except OSError:
            Path(temp_name).unlink(missing_ok=True)
            raise
        _LOGGER.info("Cached %s (%d coefficients)", path.name, len(series))
        return path

    def get_or_build(self, kind: str, n: int, box: TruncationBox) -> MultiSeries:
        """Return the table from disk, building and publishing it on a miss."""
        if kind not in _BUILDERS:
            raise DomainError(f"unknown series kind {kind!r}")
        series = self.load(kind, n, box)
        if series is None:
            series = _BUILDERS[kind](n, box)
            self.store(kind, n, series)
        return series

    def warm(self, n_values: Iterable[int]) -> list[CacheEntry]:
        """Precompute C and Ĉ on the full staircase box for each n."""
        for n in n_values:
            box = staircase_box(n)
            for kind in _BUILDERS:
                self.get_or_build(kind, n, box)
        return self.inspect()

    def inspect(self) -> list[CacheEntry]:
        """List the cache entries with sizes, coefficient counts and checksums."""
        entries: list[CacheEntry] = []
        for path in sorted(self.directory.glob(f"*{CACHE_SUFFIX}")):
            if path.name.startswith(".tmp-"):
                continue
            lines = path.read_text(encoding="utf-8").splitlines()
            checksum = lines[2].partition("=")[2] if len(lines) > 2 else ""
            entries.append(
                CacheEntry(
                    name=path.name,
                    size_bytes=path.stat().st_size,
                    coefficients=max(len(lines) - 6, 0),
                    checksum=checksum,
                )
            )
        return entries

    def purge(self) -> int:
        """Remove every cache entry; return how many files were deleted."""
        removed = 0
        for path in self.directory.glob(f"*{CACHE_SUFFIX}"):
            path.unlink(missing_ok=True)
            removed += 1
        _LOGGER.info("Purged %d cache entries from %s", removed, self.directory)
        return removed


def _parse_entry(text: str, kind: str) -> MultiSeries:
    """Verify header and checksum, then parse the series body.

    Raises:
        CacheCorruptError: If the entry is malformed or fails its checksum

    """
    header, _, rest = text.partition("\n")
    kind_line, _, rest = rest.partition("\n")
    sum_line, _, body = rest.partition("\n")
    if header != CACHE_HEADER or kind_line != f"kind={kind}":
        raise CacheCorruptError("unexpected cache header")
    stored = sum_line.partition("=")[2]
    actual = hashlib.sha256(body.encode("utf-8")).hexdigest()
    if stored != actual:
        raise CacheCorruptError("checksum mismatch")
    try:
        return loads_series(body)
    except (ValueError, KeyError) as err:
        raise CacheCorruptError(f"unparsable body: {err}") from err


def coefficients(
    n: int,
    box: TruncationBox,
    *,
    majorant: bool = False,
    cache: CoefficientCache | None = None,
) -> MultiSeries:
    """Return C (or Ĉ) over box, through the cache when one is configured."""
    kind = SERIES_KIND_C_HAT if majorant else SERIES_KIND_C
    if cache is None:
        return _BUILDERS[kind](n, box)
    return cache.get_or_build(kind, n, box)
