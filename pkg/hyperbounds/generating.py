"""Generating functions of the central-monomial problem.

Variables are w_2, ..., w_n, stored at positions 0..n-2 of a ``MultiIndex``.
C(w) is the product of the factors E(w_2...w_i) and F(w_i, w_{i+1}...w_j);
Ĉ(w) replaces F by its majorant F̂. A(w) is the finite table of normalized
multinomial weights over the staircase domain.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import logging
import math
from types import MappingProxyType
from typing import TYPE_CHECKING, Any

import mpmath
import numpy as np

from .arith import binomial, falling_quotient, multinomial
from .const import COORDINATE_TOLERANCE, DEFAULT_PRECISION, POLE_TOLERANCE
from .errors import DomainError, PoleError
from .series import (
    DenseProduct,
    MultiSeries,
    TruncationBox,
    UniSeries,
    coefficient,
    geometric_inverse,
    ms_mul,
    series_from_poly,
    uni_geometric_inverse,
    uni_mul,
    uni_pow,
)
from .types import CheckOutcome

if TYPE_CHECKING:
    from collections.abc import Iterator, Mapping, Sequence

    from .series import PolyTerms
    from .types import Coefficient, MultiIndex

_LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class WeightVector:
    """Geometric weights a_i = r^(n-i), i = 1..n."""

    n: int
    r: int

    @property
    def values(self) -> tuple[int, ...]:
        """Return (a_1, ..., a_n)."""
        return tuple(self.r ** (self.n - i) for i in range(1, self.n + 1))

    @property
    def inverse_values(self) -> tuple[Fraction, ...]:
        """Return (1/a_1, ..., 1/a_n)."""
        return tuple(Fraction(1, a) for a in self.values)


@dataclass(frozen=True)
class APolynomial:
    """Normalized A(w): entry at k is M_k / r^(k_2+...+k_n) over the staircase."""

    n: int
    r: int
    entries: Mapping[MultiIndex, Fraction]

    def __len__(self) -> int:
        """Return the number of staircase entries."""
        return len(self.entries)

    def pair(self, series: MultiSeries) -> Fraction:
        """Return the constant term of A(w) * series(w).

        Raises:
            OutOfBoxError: If the series box does not cover the staircase

        """
        total = Fraction(0)
        for idx in sorted(self.entries):
            total += self.entries[idx] * coefficient(series, idx)
        return total


@dataclass(frozen=True)
class RationalFactor:
    """A factor numerator / (1 - tail) with polynomial numerator and tail."""

    label: str
    numerator: PolyTerms
    tail: PolyTerms

    def to_series(self, box: TruncationBox) -> MultiSeries:
        """Expand the factor with the sparse series operations."""
        top = series_from_poly(box, self.numerator)
        bottom = geometric_inverse(series_from_poly(box, self.tail), box)
        return ms_mul(top, bottom, box)

    @property
    def reach(self) -> int:
        """Return the lowest variable position the factor involves."""
        shifts = [shift for shift, _ in self.numerator + self.tail if any(shift)]
        return min(next(j for j, k in enumerate(s) if k) for s in shifts)


# ---------------------------------------------------------------------------
# Staircase domain
# ---------------------------------------------------------------------------


def i_indices(n: int, ks: MultiIndex) -> tuple[int, ...]:
    """Return (i_1, ..., i_n) for staircase exponents (k_2, ..., k_n).

    i_n = n - k_2, i_{n+1-j} = n + k_j - k_{j+1} for 2 <= j < n, i_1 = n + k_n.
    """
    if len(ks) != n - 1:
        raise DomainError(f"expected {n - 1} exponents for n={n}, got {len(ks)}")
    if n == 1:
        return (1,)
    reverse = [n - ks[0]]
    reverse.extend(n + ks[p] - ks[p + 1] for p in range(n - 2))
    reverse.append(n + ks[-1])
    return tuple(reversed(reverse))


def in_staircase(n: int, ks: MultiIndex) -> bool:
    """Return True if ks lies in the staircase domain."""
    return (
        len(ks) == n - 1
        and all(k >= 0 for k in ks)
        and all(i >= 0 for i in i_indices(n, ks))
    )


def staircase(n: int, total: int | None = None) -> Iterator[MultiIndex]:
    """Yield the staircase 0 <= k_2 <= n, 0 <= k_j <= n + k_{j-1}, depth first.

    With ``total`` only indices with k_2 + ... + k_n <= total are produced.
    """
    if n < 2:
        yield ()
        return
    budget = total if total is not None else n * n * n
    prefix: list[int] = []

    def walk(limit: int, remaining: int) -> Iterator[MultiIndex]:
        for k in range(min(limit, remaining) + 1):
            prefix.append(k)
            if len(prefix) == n - 1:
                yield tuple(prefix)
            else:
                yield from walk(n + k, remaining - k)
            prefix.pop()

    yield from walk(n, budget)


def staircase_box(n: int, total: int | None = None) -> TruncationBox:
    """Return the rectangular box k_j <= (j-1)n covering the staircase."""
    caps = tuple((j - 1) * n for j in range(2, n + 1))
    if total is not None:
        caps = tuple(min(cap, total) for cap in caps)
    return TruncationBox(caps, total)


def _staircase_weight(n: int, ks: MultiIndex) -> Fraction:
    """Return the product of n!/(i_lambda)! over the derived i-indices."""
    value = Fraction(1)
    for i in i_indices(n, ks):
        value *= falling_quotient(n, i - n)
    return value


# ---------------------------------------------------------------------------
# Univariate factors
# ---------------------------------------------------------------------------


def E_series(order: int) -> UniSeries:  # noqa: N802
    """Return E(x) = (1-x)/(1-2x): E_0 = 1, E_k = 2^(k-1)."""
    if order < 0:
        raise DomainError(f"order must be nonnegative, got {order}")
    return UniSeries(order, (1, *(2 ** (k - 1) for k in range(1, order + 1))))


def F_coeff(k: int, ell: int) -> int:  # noqa: N802
    """Return the coefficient of x^k y^ell in (1-y)/(1-2y+xy)."""
    return (-1) ** k * F_hat_coeff(k, ell)


def F_hat_coeff(k: int, ell: int) -> int:  # noqa: N802
    """Return the coefficient of x^k y^ell in (1-y)/(1-2y-xy)."""
    if k < 0 or ell < 0:
        return 0
    if ell == 0:
        return 1 if k == 0 else 0
    if k > ell:
        return 0
    head = binomial(ell - 1, k) * 2 ** (ell - 1 - k) if k <= ell - 1 else 0
    return head + binomial(ell - 1, k - 1) * 2 ** (ell - k)


def _uni_ratio(
    numerator: Mapping[int, int], tail: Mapping[int, int], order: int
) -> UniSeries:
    """Return numerator(x) / (1 - tail(x)) truncated at order."""
    top = UniSeries.from_poly(numerator, order)
    return uni_mul(top, uni_geometric_inverse(UniSeries.from_poly(tail, order), order), order)


def _e_power(k: int, order: int) -> UniSeries:
    """Return E(x^k)."""
    return _uni_ratio({0: 1, k: -1}, {k: 2}, order)


def _f_power(k: int, order: int, *, majorant: bool) -> UniSeries:
    """Return F(x, x^k) or its majorant: (1-x^k)/(1-2x^k -/+ x^(k+1))."""
    return _uni_ratio({0: 1, k: -1}, {k: 2, k + 1: 1 if majorant else -1}, order)


def _diagonal_product(n: int, order: int, *, majorant: bool) -> UniSeries:
    """Return the diagonal of C (or Ĉ) as prod E(x^i) * prod F(x, x^l)^(n-l-1)."""
    if n < 2:
        raise DomainError(f"diagonal series need n >= 2, got {n}")
    result = UniSeries.one(order)
    for i in range(1, n):
        result = uni_mul(result, _e_power(i, order), order)
    for ell in range(1, n - 1):
        factor = uni_pow(_f_power(ell, order, majorant=majorant), n - ell - 1, order)
        result = uni_mul(result, factor, order)
    return result


def diagonal_C_formula(n: int, order: int) -> UniSeries:  # noqa: N802
    """Return the expansion of C^{n-1}(x) to the given order."""
    return _diagonal_product(n, order, majorant=False)


def diagonal_C_hat_formula(n: int, order: int) -> UniSeries:  # noqa: N802
    """Return the expansion of Ĉ^{n-1}(x) to the given order."""
    return _diagonal_product(n, order, majorant=True)


def P_series(n: int, order: int) -> UniSeries:  # noqa: N802
    """Return P^{n-1}(x) = (1/(1-x))^(n-2) prod_{k=2}^{n-2} F(x, x^k)^(n-k-1)."""
    if n < 2:
        raise DomainError(f"P series needs n >= 2, got {n}")
    result = uni_pow(_uni_ratio({0: 1}, {1: 1}, order), n - 2, order)
    for k in range(2, n - 1):
        factor = uni_pow(_f_power(k, order, majorant=False), n - k - 1, order)
        result = uni_mul(result, factor, order)
    return result


def reduced_diagonal(n: int, order: int) -> UniSeries:
    """Return E(x) * P^{n-1}(x), the part of C^{n-1} without E(x^i), i >= 2."""
    return uni_mul(E_series(order), P_series(n, order), order)


def diagonal_forms_agree(n: int, order: int) -> bool:
    """Return True if the E-times-P form of C^{n-1} equals the product form."""
    combined = reduced_diagonal(n, order)
    for i in range(2, n):
        combined = uni_mul(combined, _e_power(i, order), order)
    agree = combined == diagonal_C_formula(n, order)
    if not agree:
        _LOGGER.warning("Diagonal forms of C disagree for n=%s, order %s", n, order)
    return agree


# ---------------------------------------------------------------------------
# Multivariate factors
# ---------------------------------------------------------------------------


def _span(n: int, first: int, last: int) -> MultiIndex:
    """Return the exponent vector of w_first * ... * w_last."""
    return tuple(1 if first <= q <= last else 0 for q in range(2, n + 1))


def _add(a: MultiIndex, b: MultiIndex) -> MultiIndex:
    return tuple(x + y for x, y in zip(a, b, strict=True))


def _e_factor(n: int, first: int, last: int) -> RationalFactor:
    """Return E(w_first...w_last)."""
    zero = (0,) * (n - 1)
    m = _span(n, first, last)
    return RationalFactor(f"E[{first},{last}]", [(zero, 1), (m, -1)], [(m, 2)])


def c_factors(n: int, *, majorant: bool = False) -> list[RationalFactor]:
    """Return the factors of C (or Ĉ), highest-index variables first.

    E(w_2...w_i) for 2 <= i <= n and F(w_i, w_{i+1}...w_j) for 2 <= i < j <= n.
    """
    zero = (0,) * (n - 1)
    sign = 1 if majorant else -1
    factors = [_e_factor(n, 2, i) for i in range(2, n + 1)]
    for i in range(2, n + 1):
        x = _span(n, i, i)
        for j in range(i + 1, n + 1):
            y = _span(n, i + 1, j)
            factors.append(
                RationalFactor(
                    f"F[{i},{j}]",
                    [(zero, 1), (y, -1)],
                    [(y, 2), (_add(x, y), sign)],
                )
            )
    return sorted(factors, key=lambda factor: -factor.reach)


def alternative_factors(n: int, *, majorant: bool = False) -> list[RationalFactor]:
    """Return the two-block factors: every E(w_i...w_j) and the raw F-parts.

    The raw part is (1-2y)/(1-2y+xy) with x = w_{i-1}, y = w_i...w_j, 3 <= i <= j.
    Multiplied by E(y) it gives back F(x, y).
    """
    zero = (0,) * (n - 1)
    sign = 1 if majorant else -1
    factors = [
        _e_factor(n, i, j) for i in range(2, n + 1) for j in range(i, n + 1)
    ]
    for i in range(3, n + 1):
        x = _span(n, i - 1, i - 1)
        for j in range(i, n + 1):
            y = _span(n, i, j)
            factors.append(
                RationalFactor(
                    f"R[{i},{j}]",
                    [(zero, 1), (y, -2)],
                    [(y, 2), (_add(x, y), sign)],
                )
            )
    return factors


def _build_dense(n: int, box: TruncationBox, *, majorant: bool) -> MultiSeries:
    """Expand C or Ĉ over box with the dense kernel."""
    if n < 2:
        raise DomainError(f"C needs n >= 2, got {n}")
    if box.n_vars != n - 1:
        raise DomainError(f"box over {box.n_vars} variables used for n={n}")
    product = DenseProduct(box)
    for factor in c_factors(n, majorant=majorant):
        product.apply_ratio(factor.numerator, factor.tail)
        _LOGGER.debug("Applied factor %s for n=%s", factor.label, n)
    return product.to_series()


def build_C(n: int, box: TruncationBox) -> MultiSeries:  # noqa: N802
    """Return the truncated expansion of C(w_2, ..., w_n)."""
    return _build_dense(n, box, majorant=False)


def build_C_hat(n: int, box: TruncationBox) -> MultiSeries:  # noqa: N802
    """Return the truncated expansion of the majorant Ĉ(w_2, ..., w_n)."""
    return _build_dense(n, box, majorant=True)


def build_C_alternative(  # noqa: N802
    n: int, box: TruncationBox, *, majorant: bool = False
) -> MultiSeries:
    """Return C (or Ĉ) from the two-block grouping, using sparse products."""
    if n < 2:
        raise DomainError(f"C needs n >= 2, got {n}")
    result = MultiSeries.one(box)
    for factor in alternative_factors(n, majorant=majorant):
        result = ms_mul(result, factor.to_series(box), box)
    return result


# ---------------------------------------------------------------------------
# A(w)
# ---------------------------------------------------------------------------


def build_A(n: int, r: int) -> APolynomial:  # noqa: N802
    """Return A(w) from the falling-quotient weights over the staircase."""
    if n < 2 or r < 1:
        raise DomainError(f"build_A needs n >= 2 and r >= 1, got n={n}, r={r}")
    entries = {
        ks: _staircase_weight(n, ks) / Fraction(r) ** sum(ks) for ks in staircase(n)
    }
    return APolynomial(n, r, MappingProxyType(entries))


def build_A_from_i_indices(n: int, r: int) -> APolynomial:  # noqa: N802
    """Return A(w) by enumerating i-indices and mapping them to exponents.

    Enumerates i_n <= n, i_n + i_{n-1} <= 2n, ..., i_1 = n^2 - (i_2 + ... + i_n),
    then sets k_{m+1} = m n - (i_n + ... + i_{n-m+1}).
    """
    if n < 2 or r < 1:
        raise DomainError(
            f"build_A_from_i_indices needs n >= 2 and r >= 1, got n={n}, r={r}"
        )
    central = multinomial([n] * n)
    entries: dict[MultiIndex, Fraction] = {}

    def walk(tail: list[int], partial: int) -> None:
        depth = len(tail)
        if depth == n - 1:
            ks = tuple(m * n - sum(tail[:m]) for m in range(1, n))
            parts = [n * n - partial, *reversed(tail)]
            weight = Fraction(multinomial(parts), central)
            power = sum((j - 1) * i for j, i in zip(range(n, 1, -1), tail, strict=True))
            entries[ks] = weight * Fraction(r) ** power / Fraction(r) ** (
                n * n * (n - 1) // 2
            )
            return
        limit = (depth + 1) * n - partial
        for i in range(limit + 1):
            tail.append(i)
            walk(tail, partial + i)
            tail.pop()

    walk([], 0)
    return APolynomial(n, r, MappingProxyType(entries))


# ---------------------------------------------------------------------------
# Evaluation
# ---------------------------------------------------------------------------


def _is_exact(values: Sequence[Any]) -> bool:
    return all(isinstance(v, int | Fraction) for v in values)


def _guard(denominator: Any, exact: bool) -> Any:
    """Return the denominator, refusing values at or near zero."""
    if exact:
        if denominator == 0:
            raise PoleError("denominator vanishes at the evaluation point")
    elif abs(denominator) <= POLE_TOLERANCE:
        raise PoleError(
            f"denominator {mpmath.nstr(denominator, 5)} is within {POLE_TOLERANCE} of zero"
        )
    return denominator


def _to_mp(value: Any) -> Any:
    """Convert a number (Fraction included) to an mpmath number."""
    if isinstance(value, Fraction):
        return mpmath.mpf(value.numerator) / value.denominator
    return mpmath.mpmathify(value)


def _coerce(values: Sequence[Any]) -> tuple[list[Any], bool]:
    """Return values as Fractions (exact input) or mpmath numbers."""
    if _is_exact(values):
        return [Fraction(v) for v in values], True
    return [_to_mp(v) for v in values], False


def _product(values: Sequence[Any], first: int, last: int, offset: int) -> Any:
    """Return values[first-offset] * ... * values[last-offset]."""
    result: Any = 1
    for q in range(first, last + 1):
        result *= values[q - offset]
    return result


def eval_C_w(  # noqa: N802
    n: int,
    w_values: Sequence[Any],
    precision: int = DEFAULT_PRECISION,
    *,
    majorant: bool = False,
) -> Any:
    """Evaluate C (or Ĉ) at (w_2, ..., w_n) from the factor products.

    Exact input (int or Fraction) gives an exact Fraction; anything else is
    evaluated with mpmath at ``precision`` bits.

    Raises:
        PoleError: If a factor denominator vanishes

    """
    if len(w_values) != n - 1:
        raise DomainError(f"expected {n - 1} w-values for n={n}, got {len(w_values)}")
    with mpmath.workprec(precision):
        w, exact = _coerce(w_values)
        sign = 1 if majorant else -1
        result: Any = Fraction(1) if exact else mpmath.mpf(1)
        for i in range(2, n + 1):
            m = _product(w, 2, i, 2)
            result *= (1 - m) / _guard(1 - 2 * m, exact)
        for i in range(2, n + 1):
            for j in range(i + 1, n + 1):
                x = w[i - 2]
                y = _product(w, i + 1, j, 2)
                result *= (1 - y) / _guard(1 - 2 * y - sign * x * y, exact)
        return result if exact else +result


def eval_C_t(t_values: Sequence[Any], precision: int = DEFAULT_PRECISION) -> Any:  # noqa: N802
    """Evaluate C(t_1, ..., t_n) from the t-coordinate double product.

    prod_{i<j} (t_j - t_i)/(t_j - 2t_i) * prod_{2<=i<j} (t_j - 2t_i)/(t_j - 2t_i + t_{i-1}).

    Raises:
        PoleError: If a factor denominator vanishes

    """
    n = len(t_values)
    with mpmath.workprec(precision):
        t, exact = _coerce(t_values)
        result: Any = Fraction(1) if exact else mpmath.mpf(1)
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                ti, tj = t[i - 1], t[j - 1]
                result *= (tj - ti) / _guard(tj - 2 * ti, exact)
        for i in range(2, n + 1):
            for j in range(i + 1, n + 1):
                ti, tj, tp = t[i - 1], t[j - 1], t[i - 2]
                result *= (tj - 2 * ti) / _guard(tj - 2 * ti + tp, exact)
        return result if exact else +result


def w_from_t(t_values: Sequence[Any]) -> list[Any]:
    """Return the coordinates w_i = t_{i-1}/t_i, i = 2..n."""
    return [t_values[i - 1] / t_values[i] for i in range(1, len(t_values))]


def eval_diagonal(
    n: int, x: Any, precision: int = DEFAULT_PRECISION, *, majorant: bool = False
) -> Any:
    """Evaluate C^{n-1}(x) (or Ĉ^{n-1}(x)) from the reorganized product.

    prod_{k=1}^{n-1} (1-x^k)^(n-k) / ((1-2x^k) (1-2x^k -/+ x^(k+1))^(n-k-1)).

    Raises:
        PoleError: If a factor denominator vanishes

    """
    if n < 2:
        raise DomainError(f"diagonal evaluation needs n >= 2, got {n}")
    with mpmath.workprec(precision):
        (value,), exact = _coerce([x])
        sign = 1 if majorant else -1
        result: Any = Fraction(1) if exact else mpmath.mpf(1)
        for k in range(1, n):
            xk = value**k
            result *= (1 - xk) ** (n - k) / _guard(1 - 2 * xk, exact)
            if n - k - 1:
                result /= _guard(1 - 2 * xk - sign * xk * value, exact) ** (n - k - 1)
        return result if exact else +result


def series_partial_sum(series: MultiSeries, w_values: Sequence[Any]) -> Any:
    """Return the sum of the stored terms of series evaluated at w."""
    total: Any = 0
    for idx, value in series.items():
        term: Any = value
        for w, k in zip(w_values, idx, strict=True):
            term *= w**k
        total += term
    return total


def coefficient_table_size(n: int, total: int | None = None) -> int:
    """Return the number of dense coefficients needed for C on the staircase box."""
    return staircase_box(n, total).size


# ---------------------------------------------------------------------------
# Consistency checks
# ---------------------------------------------------------------------------


def _mismatches(
    first: Mapping[MultiIndex, Any], second: Mapping[MultiIndex, Any]
) -> list[dict[str, Any]]:
    """Return the indices where two coefficient tables differ, in index order."""
    return [
        {"k": list(idx), "first": first.get(idx, 0), "second": second.get(idx, 0)}
        for idx in sorted(set(first) | set(second))
        if first.get(idx, 0) != second.get(idx, 0)
    ]


def diagonal_positivity_check(n: int) -> CheckOutcome:
    """Check P_h >= 1 and C_h >= 2^h for 0 <= h <= floor(sqrt(n)).

    C_h is checked both for E(x) * P(x) and for the full diagonal product,
    which only adds the nonnegative factors E(x^i), i >= 2.
    """
    if n < 2:
        raise DomainError(f"diagonal positivity needs n >= 2, got {n}")
    order = math.isqrt(n)
    p_series = P_series(n, order)
    reduced = reduced_diagonal(n, order)
    full = diagonal_C_formula(n, order)
    failures: list[dict[str, Any]] = []
    for h in range(order + 1):
        if p_series[h] < 1:
            failures.append({"h": h, "series": "P", "coefficient": p_series[h]})
        for label, series in (("E*P", reduced), ("C", full)):
            if series[h] < 2**h:
                failures.append({"h": h, "series": label, "coefficient": series[h]})
    return CheckOutcome.from_points(
        failures,
        summary={
            "n": n,
            "h_max": order,
            "P": list(p_series.coeffs),
            "E*P": list(reduced.coeffs),
            "C": list(full.coeffs),
        },
    )


def a_constructions_check(n: int, r: int) -> CheckOutcome:
    """Check that both constructions of A(w) give the same table."""
    direct = build_A(n, r)
    enumerated = build_A_from_i_indices(n, r)
    return CheckOutcome.from_points(
        _mismatches(direct.entries, enumerated.entries),
        summary={"n": n, "r": r, "entries": len(direct)},
    )


def grouping_check(n: int, total: int) -> CheckOutcome:
    """Check C and Ĉ against the two-block grouping up to a total degree."""
    box = TruncationBox((total,) * (n - 1), total=total)
    failures = [
        {"series": "C", **point}
        for point in _mismatches(build_C(n, box).coeffs, build_C_alternative(n, box).coeffs)
    ]
    failures += [
        {"series": "C_hat", **point}
        for point in _mismatches(
            build_C_hat(n, box).coeffs, build_C_alternative(n, box, majorant=True).coeffs
        )
    ]
    return CheckOutcome.from_points(failures, summary={"n": n, "total": total})


def coordinate_change_check(
    n: int, points: int, seed: int = 0, precision: int = DEFAULT_PRECISION
) -> CheckOutcome:
    """Check C(t) = C(w(t)) at random points with t_{i+1} / t_i in [3, 6).

    Points are drawn from ``np.random.default_rng(seed)`` and both sides are
    evaluated with mpmath at ``precision`` bits.
    """
    rng = np.random.default_rng(seed)
    failures: list[dict[str, Any]] = []
    with mpmath.workprec(precision):
        worst = mpmath.mpf(0)
        for trial in range(points):
            t = [mpmath.mpf(1)]
            for _ in range(n - 1):
                t.append(t[-1] * float(rng.uniform(3, 6)))
            deviation = abs(eval_C_t(t, precision) - eval_C_w(n, w_from_t(t), precision))
            worst = max(worst, deviation)
            if deviation >= COORDINATE_TOLERANCE:
                failures.append({"trial": trial, "deviation": deviation})
    return CheckOutcome.from_points(
        failures,
        summary={"n": n, "points": points, "seed": seed, "max_deviation": worst},
        precision=precision,
    )


def majorant_domination_check(n: int, h_max: int) -> CheckOutcome:
    """Check |C_k| <= Ĉ_k on the staircase box and on the diagonal up to h_max."""
    box = staircase_box(n)
    c_series = build_C(n, box)
    c_hat = build_C_hat(n, box)
    failures: list[dict[str, Any]] = [
        {"k": list(idx), "C": value, "C_hat": c_hat[idx]}
        for idx, value in c_series.items()
        if abs(value) > c_hat[idx]
    ]
    diag = diagonal_C_formula(n, h_max)
    diag_hat = diagonal_C_hat_formula(n, h_max)
    failures += [
        {"h": h, "C": diag[h], "C_hat": diag_hat[h]}
        for h in range(h_max + 1)
        if abs(diag[h]) > diag_hat[h]
    ]
    return CheckOutcome.from_points(
        failures, summary={"n": n, "coefficients": len(c_series), "h_max": h_max}
    )
