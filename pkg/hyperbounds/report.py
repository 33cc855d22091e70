"""Machine-readable suite reports."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
import json
import logging
from pathlib import Path
from typing import TYPE_CHECKING, Any

import mpmath
import numpy as np

from .const import REPORT_SCHEMA, STATUS_FAIL, STATUS_INFO, STATUS_PASS, VERSION

if TYPE_CHECKING:
    from .checks import CheckUnit
    from .types import CheckOutcome

_LOGGER = logging.getLogger(__name__)

SIGNIFICANT_DIGITS = 20
# Larger integers would lose precision in consumers that parse JSON numbers as doubles.
_SAFE_INTEGER = 2**53


def to_jsonable(value: Any) -> Any:
    """Convert report values to JSON-ready data.

    Rationals become ``"num/den"``, large integers decimal strings, and
    approximations strings with 20 significant digits.
    """
    if value is None or isinstance(value, bool | str):
        return value
    if isinstance(value, np.generic):
        return to_jsonable(value.item())
    if isinstance(value, int):
        return value if abs(value) < _SAFE_INTEGER else str(value)
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, float | mpmath.mpf):
        return mpmath.nstr(mpmath.mpf(value), SIGNIFICANT_DIGITS)
    if isinstance(value, Path):
        return str(value)
    if isinstance(value, dict):
        return {str(key): to_jsonable(item) for key, item in value.items()}
    if isinstance(value, list | tuple | range | np.ndarray):
        return [to_jsonable(item) for item in value]
    return str(value)


@dataclass(frozen=True)
class CheckRecord:
    """The outcome of one check unit as it appears in the report."""

    check_id: str
    claim: str
    status: str
    witness: dict[str, Any]
    anchor: str = ""
    precision: int | None = None
    data_key: str | None = None
    elapsed: float = field(default=0.0, compare=False)

    @classmethod
    def from_outcome(
        cls, unit: CheckUnit, outcome: CheckOutcome, elapsed: float
    ) -> CheckRecord:
        """Build a record; informational checks keep their verdict in the witness."""
        witness = dict(outcome.witness)
        if unit.informational:
            status = STATUS_INFO
            witness["holds"] = outcome.passed
        else:
            status = STATUS_PASS if outcome.passed else STATUS_FAIL
        return cls(
            check_id=unit.check_id,
            claim=unit.claim,
            status=status,
            witness=witness,
            anchor=unit.anchor,
            precision=outcome.precision,
            data_key=unit.data_key,
            elapsed=elapsed,
        )

    def as_dict(self) -> dict[str, Any]:
        """Return the record without timing."""
        out: dict[str, Any] = {
            "id": self.check_id,
            "claim": self.claim,
            "anchor": self.anchor,
            "status": self.status,
            "witness": self.witness,
        }
        if self.precision is not None:
            out["precision"] = self.precision
        return out


@dataclass
class SuiteReport:
    """All check records of one run, with the configuration echo."""

    suite: str
    config: dict[str, Any]
    checks: list[CheckRecord] = field(default_factory=list)
    timing: dict[str, Any] = field(default_factory=dict)

    @property
    def status(self) -> str:
        """Return pass iff every non-informational check passed."""
        failed = any(record.status == STATUS_FAIL for record in self.checks)
        return STATUS_FAIL if failed else STATUS_PASS

    @property
    def failures(self) -> list[CheckRecord]:
        """Return the failed records."""
        return [record for record in self.checks if record.status == STATUS_FAIL]

    @property
    def data(self) -> dict[str, dict[str, Any]]:
        """Return witnesses of data-bearing checks grouped by data key."""
        grouped: dict[str, dict[str, Any]] = {}
        for record in self.checks:
            if record.data_key is not None:
                grouped.setdefault(record.data_key, {})[record.check_id] = record.witness
        return grouped

    def as_dict(self, *, include_timing: bool = True) -> dict[str, Any]:
        """Return the report; timing is the only nondeterministic part."""
        out: dict[str, Any] = {
            "schema": REPORT_SCHEMA,
            "version": VERSION,
            "suite": self.suite,
            "config": self.config,
            "checks": [record.as_dict() for record in self.checks],
            "data": self.data,
            "status": self.status,
        }
        if include_timing:
            out["timing"] = self.timing
        return to_jsonable(out)  # type: ignore[no-any-return]

    def to_json(self, *, include_timing: bool = True) -> str:
        """Serialize with sorted keys so equal reports are byte-identical."""
        return json.dumps(
            self.as_dict(include_timing=include_timing), indent=2, sort_keys=True
        )

    def write(self, path: Path) -> Path:
        """Write the JSON report, creating parent directories."""
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(self.to_json() + "\n", encoding="utf-8")
        _LOGGER.info("Wrote %s report to %s", self.suite, path)
        return path
