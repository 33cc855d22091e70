"""Shared types for hyperbounds."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

type MultiIndex = tuple[int, ...]
type Coefficient = int | Fraction


@dataclass(frozen=True)
class CheckOutcome:
    """Result of one verified claim.

    ``witness`` holds the first failing point when ``passed`` is false, and the
    decisive numbers otherwise.
    """

    passed: bool
    witness: dict[str, Any] = field(default_factory=dict)
    precision: int | None = None

    @classmethod
    def from_points(
        cls,
        points: list[dict[str, Any]],
        *,
        summary: dict[str, Any] | None = None,
        precision: int | None = None,
    ) -> CheckOutcome:
        """Build an outcome from a list of failing points (empty means pass)."""
        witness = dict(summary or {})
        if points:
            witness["first_failure"] = points[0]
            witness["failures"] = len(points)
        return cls(passed=not points, witness=witness, precision=precision)
