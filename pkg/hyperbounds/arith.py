"""Exact combinatorial arithmetic and Stirling-type approximants.

Everything that feeds a conjecture verdict is computed with Python integers and
``fractions.Fraction``. ``mpmath`` is used only for the asymptotic formulas and
for log-space comparisons of huge exact values.
"""

from __future__ import annotations

from fractions import Fraction
import logging
import math
import threading
from typing import TYPE_CHECKING

import mpmath

from .const import DEFAULT_PRECISION
from .errors import DomainError

if TYPE_CHECKING:
    from collections.abc import Iterable

_LOGGER = logging.getLogger(__name__)

# Correction series of n!: 1 + 1/(12n) + 1/(288n^2) - 139/(51840n^3) - 571/(2488320n^4).
STIRLING_COEFFICIENTS: tuple[Fraction, ...] = (
    Fraction(1),
    Fraction(1, 12),
    Fraction(1, 288),
    Fraction(-139, 51840),
    Fraction(-571, 2488320),
)

# Bracket of binomial(2n, n) ~ 4^n / sqrt(pi n).
CENTRAL_BINOMIAL_COEFFICIENTS: tuple[Fraction, ...] = (
    Fraction(1),
    Fraction(-1, 8),
    Fraction(1, 128),
    Fraction(5, 1024),
    Fraction(-21, 32768),
)

# Bracket of (n^2)!/(n!)^n in powers of 1/n^2.
CENTRAL_MULTINOMIAL_COEFFICIENTS: tuple[Fraction, ...] = (
    Fraction(1),
    Fraction(31, 360),
    Fraction(5287, 1814400),
)

_FACTORIALS: list[int] = [1]
_FACTORIAL_LOCK = threading.Lock()


def factorial(n: int) -> int:
    """Return n! exactly, extending the shared memo table when needed.

    Raises:
        DomainError: If n is negative

    """
    if n < 0:
        raise DomainError(f"factorial of negative integer {n}")
    table = _FACTORIALS
    if n >= len(table):
        with _FACTORIAL_LOCK:
            for i in range(len(table), n + 1):
                table.append(table[-1] * i)
    return table[n]


def prepare_factorials(limit: int) -> None:
    """Populate the memo table up to limit! before parallel sections."""
    factorial(limit)
    _LOGGER.debug("Factorial table ready up to %s!", limit)


def binomial(n: int, k: int) -> int:
    """Return C(n, k), with the convention C(n, k) = 0 for k < 0 or k > n."""
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def multinomial(parts: Iterable[int]) -> int:
    """Return (sum parts)! / prod(part!).

    Raises:
        DomainError: If parts is empty or holds a negative entry

    """
    values = list(parts)
    if not values:
        raise DomainError("multinomial needs at least one part")
    if any(part < 0 for part in values):
        raise DomainError(f"multinomial parts must be nonnegative: {values}")
    result = factorial(sum(values))
    for part in values:
        result //= factorial(part)
    return result


def falling_quotient(n: int, m: int) -> Fraction:
    """Return n!/(n+m)! exactly; m may be negative.

    Raises:
        DomainError: If n + m < 0

    """
    if n < 0 or n + m < 0:
        raise DomainError(f"falling_quotient undefined for n={n}, m={m}")
    if m <= 0:
        return Fraction(factorial(n) // factorial(n + m))
    return Fraction(1, factorial(n + m) // factorial(n))


def log_factorial(n: int, precision: int = DEFAULT_PRECISION) -> mpmath.mpf:
    """Return log(n!) through log-gamma at the given precision."""
    if n < 0:
        raise DomainError(f"log_factorial of negative integer {n}")
    with mpmath.workprec(precision):
        return +mpmath.loggamma(n + 1)


def log_exact(value: int | Fraction, precision: int = DEFAULT_PRECISION) -> mpmath.mpf:
    """Return log of a positive exact number without float overflow."""
    if value <= 0:
        raise DomainError(f"log of nonpositive value {value}")
    frac = Fraction(value)
    with mpmath.workprec(precision):
        return mpmath.log(mpmath.mpf(frac.numerator)) - mpmath.log(
            mpmath.mpf(frac.denominator)
        )


def _bracket(coefficients: tuple[Fraction, ...], step: mpmath.mpf) -> mpmath.mpf:
    """Evaluate sum c_j * step^j."""
    total = mpmath.mpf(0)
    power = mpmath.mpf(1)
    for coefficient in coefficients:
        total += mpmath.mpf(coefficient.numerator) / coefficient.denominator * power
        power *= step
    return total


def stirling_factorial(
    n: int, order: int = 4, precision: int = DEFAULT_PRECISION
) -> mpmath.mpf:
    """Return sqrt(2 pi n)(n/e)^n times the correction series cut at ``order``.

    Raises:
        DomainError: If n < 1 or order is not in 0..4

    """
    if n < 1:
        raise DomainError(f"stirling_factorial needs n >= 1, got {n}")
    if not 0 <= order < len(STIRLING_COEFFICIENTS):
        raise DomainError(f"stirling order must be in 0..4, got {order}")
    with mpmath.workprec(precision):
        x = mpmath.mpf(n)
        base = mpmath.sqrt(2 * mpmath.pi * x) * (x / mpmath.e) ** n
        return base * _bracket(STIRLING_COEFFICIENTS[: order + 1], 1 / x)


def central_binomial_asymptotic(
    n: int, precision: int = DEFAULT_PRECISION
) -> mpmath.mpf:
    """Return the four-term asymptotic expansion of C(2n, n)."""
    if n < 1:
        raise DomainError(f"central_binomial_asymptotic needs n >= 1, got {n}")
    with mpmath.workprec(precision):
        x = mpmath.mpf(n)
        head = mpmath.mpf(4) ** n / mpmath.sqrt(mpmath.pi * x)
        return head * _bracket(CENTRAL_BINOMIAL_COEFFICIENTS, 1 / x)


def log_central_multinomial_asymptotic(
    n: int, precision: int = DEFAULT_PRECISION
) -> mpmath.mpf:
    """Return the log of the asymptotic form of (n^2)!/(n!)^n."""
    if n < 1:
        raise DomainError(f"central_multinomial_asymptotic needs n >= 1, got {n}")
    with mpmath.workprec(precision):
        x = mpmath.mpf(n)
        return (
            (x * x - x / 2 + 1) * mpmath.log(x)
            - (x - 1) / 2 * mpmath.log(2 * mpmath.pi)
            - mpmath.mpf(1) / 12
            + mpmath.log(_bracket(CENTRAL_MULTINOMIAL_COEFFICIENTS, 1 / (x * x)))
        )


def central_multinomial_asymptotic(
    n: int, precision: int = DEFAULT_PRECISION
) -> mpmath.mpf:
    """Return n^(n^2-n/2+1) / ((2 pi)^((n-1)/2) e^(1/12)) times its bracket."""
    with mpmath.workprec(precision):
        return mpmath.exp(log_central_multinomial_asymptotic(n, precision))
