"""Truncated power series with exact coefficients.

``MultiSeries`` is the sparse multivariate type every public operation works
with. ``DenseProduct`` is the kernel used to expand long products of rational
factors: it keeps a dense numpy object array over a rectangular box and
applies each factor as a polynomial multiplication followed by an exact
division by a polynomial with unit constant term.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
import itertools
import logging
import math
from types import MappingProxyType
from typing import TYPE_CHECKING, Any

import numpy as np

from .errors import DomainError, OutOfBoxError

if TYPE_CHECKING:
    from collections.abc import Iterable, Iterator, Mapping

    from .types import Coefficient, MultiIndex

_LOGGER = logging.getLogger(__name__)

type PolyTerms = list[tuple[MultiIndex, int]]


@dataclass(frozen=True)
class TruncationBox:
    """Per-variable exponent caps plus an optional total-degree cap."""

    caps: tuple[int, ...]
    total: int | None = None

    def __post_init__(self) -> None:
        """Validate caps."""
        if any(cap < 0 for cap in self.caps):
            raise DomainError(f"truncation caps must be nonnegative: {self.caps}")
        if self.total is not None and self.total < 0:
            raise DomainError(f"total-degree cap must be nonnegative: {self.total}")

    @property
    def n_vars(self) -> int:
        """Return the number of variables."""
        return len(self.caps)

    @property
    def size(self) -> int:
        """Return the number of lattice points in the rectangular part."""
        return math.prod(cap + 1 for cap in self.caps)

    def admits(self, idx: MultiIndex) -> bool:
        """Return True if idx lies within every cap."""
        if len(idx) != len(self.caps):
            return False
        if any(k < 0 or k > cap for k, cap in zip(idx, self.caps, strict=True)):
            return False
        return self.total is None or sum(idx) <= self.total

    def indices(self) -> Iterator[MultiIndex]:
        """Yield every admissible index in lexicographic order."""
        for idx in itertools.product(*(range(cap + 1) for cap in self.caps)):
            if self.total is None or sum(idx) <= self.total:
                yield idx

    def within(self, other: TruncationBox) -> bool:
        """Return True if every index admitted here is admitted by other."""
        if other.n_vars != self.n_vars:
            return False
        if any(a > b for a, b in zip(self.caps, other.caps, strict=True)):
            return False
        if other.total is None:
            return True
        reach = sum(self.caps) if self.total is None else min(self.total, sum(self.caps))
        return reach <= other.total


@dataclass(frozen=True)
class MultiSeries:
    """Sparse truncated multivariate series; zero entries are never stored."""

    box: TruncationBox
    coeffs: Mapping[MultiIndex, Coefficient] = field(
        default_factory=lambda: MappingProxyType({})
    )

    @classmethod
    def from_terms(
        cls, box: TruncationBox, terms: Mapping[MultiIndex, Coefficient]
    ) -> MultiSeries:
        """Build a series, dropping zeros and indices truncated by box."""
        kept = {
            idx: value for idx, value in terms.items() if value and box.admits(idx)
        }
        return cls(box=box, coeffs=MappingProxyType(kept))

    @classmethod
    def one(cls, box: TruncationBox) -> MultiSeries:
        """Return the constant series 1."""
        return cls.from_terms(box, {(0,) * box.n_vars: 1})

    @classmethod
    def monomial(
        cls, box: TruncationBox, idx: MultiIndex, value: Coefficient = 1
    ) -> MultiSeries:
        """Return value * w^idx (or zero when truncated away)."""
        return cls.from_terms(box, {idx: value})

    @property
    def n_vars(self) -> int:
        """Return the number of variables."""
        return self.box.n_vars

    def __getitem__(self, idx: MultiIndex) -> Coefficient:
        """Return the coefficient at idx."""
        return coefficient(self, idx)

    def __len__(self) -> int:
        """Return the number of stored (nonzero) coefficients."""
        return len(self.coeffs)

    def restrict(self, box: TruncationBox) -> MultiSeries:
        """Return the series truncated to a smaller box."""
        if not box.within(self.box):
            raise DomainError("restriction box must lie inside the series box")
        return MultiSeries.from_terms(box, self.coeffs)

    def items(self) -> list[tuple[MultiIndex, Coefficient]]:
        """Return stored terms in lexicographic index order."""
        return sorted(self.coeffs.items())


@dataclass(frozen=True)
class UniSeries:
    """Dense univariate series truncated at ``order``."""

    order: int
    coeffs: tuple[Coefficient, ...]

    def __post_init__(self) -> None:
        """Validate length."""
        if self.order < 0 or len(self.coeffs) != self.order + 1:
            raise DomainError(
                f"UniSeries of order {self.order} needs {self.order + 1} coefficients"
            )

    @classmethod
    def from_poly(cls, terms: Mapping[int, Coefficient], order: int) -> UniSeries:
        """Build a series from {power: coefficient}, truncating above order."""
        coeffs: list[Coefficient] = [0] * (order + 1)
        for power, value in terms.items():
            if power < 0:
                raise DomainError(f"negative power {power} in univariate series")
            if power <= order:
                coeffs[power] += value
        return cls(order, tuple(coeffs))

    @classmethod
    def one(cls, order: int) -> UniSeries:
        """Return the constant series 1."""
        return cls.from_poly({0: 1}, order)

    def __getitem__(self, h: int) -> Coefficient:
        """Return the coefficient of x^h."""
        return self.coeffs[h]

    def truncate(self, order: int) -> UniSeries:
        """Return the series cut at a lower order."""
        if order > self.order:
            raise DomainError(f"cannot extend order {self.order} to {order}")
        return UniSeries(order, self.coeffs[: order + 1])


def _check_box(box: TruncationBox, *series: MultiSeries) -> None:
    """Raise if any series lives over a different variable set."""
    for item in series:
        if item.n_vars != box.n_vars:
            raise DomainError(
                f"series over {item.n_vars} variables used with a box over {box.n_vars}"
            )


def coefficient(s: MultiSeries, idx: MultiIndex) -> Coefficient:
    """Return the stored coefficient at idx, or 0.

    Raises:
        OutOfBoxError: If idx was truncated away by the series box

    """
    if not s.box.admits(idx):
        raise OutOfBoxError(f"index {idx} lies outside the truncation box {s.box}")
    return s.coeffs.get(idx, 0)


def ms_add(a: MultiSeries, b: MultiSeries, box: TruncationBox) -> MultiSeries:
    """Return a + b truncated to box."""
    _check_box(box, a, b)
    out: dict[MultiIndex, Coefficient] = dict(a.coeffs)
    for idx, value in b.coeffs.items():
        out[idx] = out.get(idx, 0) + value
    return MultiSeries.from_terms(box, out)


def ms_scale(a: MultiSeries, factor: Coefficient) -> MultiSeries:
    """Return factor * a."""
    return MultiSeries.from_terms(
        a.box, {idx: factor * value for idx, value in a.coeffs.items()}
    )


def ms_sub(a: MultiSeries, b: MultiSeries, box: TruncationBox) -> MultiSeries:
    """Return a - b truncated to box."""
    return ms_add(a, ms_scale(b, -1), box)


def ms_mul(a: MultiSeries, b: MultiSeries, box: TruncationBox) -> MultiSeries:
    """Return the product a * b truncated to box."""
    _check_box(box, a, b)
    out: dict[MultiIndex, Coefficient] = {}
    right = b.items()
    for u, cu in a.items():
        for v, cv in right:
            idx = tuple(x + y for x, y in zip(u, v, strict=True))
            if box.admits(idx):
                out[idx] = out.get(idx, 0) + cu * cv
    return MultiSeries.from_terms(box, out)


def geometric_inverse(u: MultiSeries, box: TruncationBox) -> MultiSeries:
    """Return 1 + u + u^2 + ... truncated to box.

    Raises:
        DomainError: If u has a nonzero constant term

    """
    _check_box(box, u)
    if u.coeffs.get((0,) * u.n_vars, 0):
        raise DomainError("geometric_inverse needs a series without constant term")
    result = MultiSeries.one(box)
    power = result
    # Each power raises the minimal degree by one, so the loop ends once
    # the box is exhausted.
    while True:
        power = ms_mul(power, u, box)
        if not power.coeffs:
            return result
        result = ms_add(result, power, box)


def diagonal(s: MultiSeries) -> UniSeries:
    """Return the series obtained by setting every variable equal to x.

    Coefficient h sums the stored coefficients of total degree h. The result is
    the full diagonal up to the total cap only when no per-variable cap is
    below it.

    Raises:
        DomainError: If the series box has no total-degree cap

    """
    total = s.box.total
    if total is None:
        raise DomainError("diagonal needs a total-degree cap")
    coeffs: list[Coefficient] = [0] * (total + 1)
    for idx, value in s.coeffs.items():
        coeffs[sum(idx)] += value
    return UniSeries(total, tuple(coeffs))


def uni_add(a: UniSeries, b: UniSeries, order: int) -> UniSeries:
    """Return a + b truncated at order."""
    return UniSeries(
        order, tuple(_uget(a, h) + _uget(b, h) for h in range(order + 1))
    )


def _uget(a: UniSeries, h: int) -> Coefficient:
    """Return coefficient h, refusing to read past the series order."""
    if h > a.order:
        raise DomainError(f"coefficient {h} requested from a series of order {a.order}")
    return a.coeffs[h]


def uni_mul(a: UniSeries, b: UniSeries, order: int) -> UniSeries:
    """Return the truncated convolution a * b."""
    if order > min(a.order, b.order):
        raise DomainError(
            f"product order {order} exceeds operand orders {a.order}, {b.order}"
        )
    coeffs: list[Coefficient] = [0] * (order + 1)
    for i, ai in enumerate(a.coeffs[: order + 1]):
        if not ai:
            continue
        for j in range(order + 1 - i):
            coeffs[i + j] += ai * b.coeffs[j]
    return UniSeries(order, tuple(coeffs))


def uni_geometric_inverse(u: UniSeries, order: int) -> UniSeries:
    """Return 1/(1 - u) truncated at order.

    Raises:
        DomainError: If u has a nonzero constant term

    """
    if u.coeffs[0]:
        raise DomainError("uni_geometric_inverse needs a series without constant term")
    if order > u.order:
        raise DomainError(f"inverse order {order} exceeds operand order {u.order}")
    inv: list[Coefficient] = [1] + [0] * order
    for h in range(1, order + 1):
        inv[h] = sum(u.coeffs[j] * inv[h - j] for j in range(1, h + 1))
    return UniSeries(order, tuple(inv))


def uni_pow(a: UniSeries, exponent: int, order: int) -> UniSeries:
    """Return a^exponent truncated at order (exponent >= 0)."""
    if exponent < 0:
        raise DomainError(f"negative exponent {exponent}")
    result = UniSeries.one(order)
    base = a.truncate(order)
    while exponent:
        if exponent & 1:
            result = uni_mul(result, base, order)
        exponent >>= 1
        if exponent:
            base = uni_mul(base, base, order)
    return result


def uni_evaluate(a: UniSeries, x: Any) -> Any:
    """Return the partial sum of a at x (Horner)."""
    total: Any = 0
    for value in reversed(a.coeffs):
        total = total * x + value
    return total


class DenseProduct:
    """Dense exact accumulator for a product of rational factors over a box.

    Starts at the constant 1. Shifts are exponent vectors; every operation
    moves mass only to higher exponents, so the total-degree cap is applied
    once, when the result is read out.
    """

    def __init__(self, box: TruncationBox) -> None:
        """Initialize the accumulator."""
        self.box = box
        self._shape = tuple(cap + 1 for cap in box.caps)
        self._data: np.ndarray[Any, Any] = np.zeros(self._shape, dtype=object)
        self._data[(0,) * box.n_vars] = 1

    def _views(
        self, shift: MultiIndex, axis: int | None = None, level: int = 0
    ) -> tuple[tuple[Any, ...], tuple[Any, ...]] | None:
        """Return (target, source) slices for adding shifted data.

        With an axis, only the hyperplane ``idx[axis] == level`` is targeted.
        """
        target: list[Any] = []
        source: list[Any] = []
        for j, (step, cap) in enumerate(zip(shift, self.box.caps, strict=True)):
            if j == axis:
                if level - step < 0:
                    return None
                target.append(level)
                source.append(level - step)
            else:
                if step > cap:
                    return None
                target.append(slice(step, cap + 1))
                source.append(slice(0, cap + 1 - step))
        return tuple(target), tuple(source)

    def multiply(self, terms: PolyTerms) -> None:
        """Multiply by the polynomial sum c * w^shift."""
        result = np.zeros(self._shape, dtype=object)
        for shift, value in terms:
            views = self._views(shift)
            if views is not None:
                target, source = views
                result[target] += value * self._data[source]
        self._data = result

    def divide(self, terms: PolyTerms) -> None:
        """Divide by 1 - sum c * w^shift, all shifts sharing a positive axis.

        Solves T = S + sum c * w^shift * T hyperplane by hyperplane along the
        shared axis, so every right-hand read is already final.
        """
        axes = [
            j
            for j in range(self.box.n_vars)
            if all(shift[j] >= 1 for shift, _ in terms)
        ]
        if not axes:
            raise DomainError("divisor shifts share no common axis")
        axis = axes[0]
        for level in range(1, self.box.caps[axis] + 1):
            for shift, value in terms:
                views = self._views(shift, axis, level)
                if views is not None:
                    target, source = views
                    self._data[target] += value * self._data[source]

    def apply_ratio(self, numerator: PolyTerms, denominator_tail: PolyTerms) -> None:
        """Multiply by numerator / (1 - sum denominator_tail)."""
        self.multiply(numerator)
        self.divide(denominator_tail)

    def to_series(self) -> MultiSeries:
        """Read the accumulated product out as a sparse series."""
        data = self._data
        if self.box.total is not None:
            degree = np.zeros(self._shape, dtype=np.int64)
            for j, size in enumerate(self._shape):
                shape = [1] * len(self._shape)
                shape[j] = size
                degree = degree + np.arange(size, dtype=np.int64).reshape(shape)
            data = np.where(degree <= self.box.total, data, 0)
        nonzero = np.argwhere(data != 0)
        terms = {
            tuple(int(k) for k in idx): int(data[tuple(idx)]) for idx in nonzero
        }
        _LOGGER.debug("Dense product over %s has %d nonzero terms", self.box, len(terms))
        return MultiSeries(box=self.box, coeffs=MappingProxyType(terms))


def dumps_series(series: MultiSeries) -> str:
    """Serialize a series: header lines, then ``k2,...,kn:coefficient`` lines."""
    total = "" if series.box.total is None else str(series.box.total)
    lines = [
        f"n_vars={series.n_vars}",
        "caps=" + ",".join(str(cap) for cap in series.box.caps),
        f"total={total}",
    ]
    lines.extend(
        ",".join(str(k) for k in idx) + ":" + _format_coefficient(value)
        for idx, value in series.items()
    )
    return "\n".join(lines) + "\n"


def loads_series(text: str) -> MultiSeries:
    """Parse the output of dumps_series exactly.

    Raises:
        ValueError: If the text is not a well-formed series dump

    """
    lines = text.splitlines()
    if len(lines) < 3:
        raise ValueError("series dump is missing its header")
    header = dict(line.split("=", 1) for line in lines[:3])
    n_vars = int(header["n_vars"])
    caps = tuple(int(c) for c in header["caps"].split(",") if c)
    total = int(header["total"]) if header["total"] else None
    if len(caps) != n_vars:
        raise ValueError(f"caps {caps} do not match n_vars={n_vars}")
    box = TruncationBox(caps, total)
    terms: dict[MultiIndex, Coefficient] = {}
    for line in lines[3:]:
        key, _, value = line.partition(":")
        idx = tuple(int(k) for k in key.split(",")) if key else ()
        if not box.admits(idx):
            raise ValueError(f"stored index {idx} lies outside {box}")
        terms[idx] = _parse_coefficient(value)
    return MultiSeries.from_terms(box, terms)


def _format_coefficient(value: Coefficient) -> str:
    """Format an exact coefficient as decimal or num/den."""
    if isinstance(value, Fraction) and value.denominator != 1:
        return f"{value.numerator}/{value.denominator}"
    return str(int(value))


def _parse_coefficient(text: str) -> Coefficient:
    """Parse decimal or num/den text."""
    if "/" in text:
        return Fraction(text)
    return int(text)


def series_from_poly(
    box: TruncationBox, terms: Iterable[tuple[MultiIndex, Coefficient]]
) -> MultiSeries:
    """Build a series from an iterable of (index, coefficient) terms."""
    out: dict[MultiIndex, Coefficient] = {}
    for idx, value in terms:
        out[idx] = out.get(idx, 0) + value
    return MultiSeries.from_terms(box, out)
