"""Degree-bound pipeline, root bounds, gate scans and majorant estimates."""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass
from fractions import Fraction
import functools
import logging
import math
from typing import TYPE_CHECKING, Any

import mpmath
import numpy as np

from .arith import binomial, log_exact
from .cache import coefficients
from .conjecture import check_budget, cmr_decomposition, truncation_threshold
from .const import (
    DEFAULT_COEFF_BUDGET,
    DEFAULT_PRECISION,
    FINAL_GATE_SCAN_CAP,
    GATE_SCAN_CAP,
    KAPPA_TOLERANCE,
    LOG_COMPARE_TOLERANCE,
    ROOT_TOLERANCE,
    THEOREM13_CHECKED_FROM,
    THEOREM13_QUANTIFIER,
)
from .errors import DomainError, VerificationError
from .generating import (
    WeightVector,
    diagonal_C_hat_formula,
    eval_diagonal,
    in_staircase,
    staircase_box,
)
from .types import CheckOutcome

if TYPE_CHECKING:
    from collections.abc import Iterable, Sequence

    from .cache import CoefficientCache

_LOGGER = logging.getLogger(__name__)

MAJORANT_RADIUS = math.sqrt(2) - 1
POLE_FLOOR = Fraction(3, 8)


# ---------------------------------------------------------------------------
# Weights and symmetric functions
# ---------------------------------------------------------------------------


def mu_weight(n: int, r: int) -> Fraction:
    """Return mu(a) = 1 a_1 + ... + n a_n for a_i = r^(n-i) from its closed form.

    Raises:
        DomainError: If n < 1 or r < 2
        VerificationError: If the closed form disagrees with the direct sum

    """
    if n < 1 or r < 2:
        raise DomainError(f"mu_weight needs n >= 1 and r >= 2, got n={n}, r={r}")
    closed = Fraction(r ** (n + 1) - (n + 1) * r + n, (r - 1) ** 2)
    direct = sum(i * a for i, a in enumerate(WeightVector(n, r).values, start=1))
    if closed != direct:
        raise VerificationError(f"mu closed form {closed} != direct sum {direct}")
    if closed > Fraction(r ** (n + 1), (r - 1) ** 2):
        raise VerificationError(f"mu({n}, {r}) exceeds r^(n+1)/(r-1)^2")
    return closed


def _exact_values(values: Sequence[int | Fraction]) -> list[Fraction]:
    if any(v <= 0 for v in values):
        raise DomainError("symmetric functions need positive values")
    return [Fraction(v) for v in values]


def elementary_symmetric(values: Sequence[int | Fraction]) -> list[Fraction]:
    """Return [sigma_0, ..., sigma_n] of positive values exactly."""
    sigmas = [Fraction(1)] + [Fraction(0)] * len(values)
    for count, value in enumerate(_exact_values(values), start=1):
        for p in range(count, 0, -1):
            sigmas[p] += value * sigmas[p - 1]
    return sigmas


def sigma_p(values: Sequence[int | Fraction], p: int) -> Fraction:
    """Return the p-th elementary symmetric function of positive values.

    Raises:
        DomainError: If a value is nonpositive or p < 0

    """
    if p < 0:
        raise DomainError(f"p must be nonnegative, got {p}")
    sigmas = elementary_symmetric(values)
    return sigmas[p] if p < len(sigmas) else Fraction(0)


def _root_ge(a: Fraction, p: int, b: Fraction, q: int, precision: int) -> bool:
    """Return a^(1/p) >= b^(1/q) for positive rationals.

    Compared in log space; a near-tie falls back to a^q >= b^p exactly.
    """
    with mpmath.workprec(precision):
        gap = log_exact(a, precision) / p - log_exact(b, precision) / q
        if abs(gap) > LOG_COMPARE_TOLERANCE:
            return bool(gap > 0)
    return a**q >= b**p


def _chain_holds(terms: list[Fraction], precision: int) -> bool:
    """Return True if terms[p-1]^(1/p) is nonincreasing in p."""
    return all(
        _root_ge(terms[p - 1], p, terms[p], p + 1, precision)
        for p in range(1, len(terms))
    )


def mac_laurin_check(
    values: Sequence[int | Fraction], precision: int = 80
) -> bool:
    """Return True if s_1 >= s_2^(1/2) >= ... >= s_n^(1/n), s_p = sigma_p / C(n, p)."""
    n = len(values)
    sigmas = elementary_symmetric(values)
    normalized = [sigmas[p] / binomial(n, p) for p in range(1, n + 1)]
    return _chain_holds(normalized, precision)


def sigma_root_chain_check(
    values: Sequence[int | Fraction], precision: int = 80
) -> bool:
    """Return True if sigma_1 >= sigma_2^(1/2) >= ... >= sigma_n^(1/n)."""
    sigmas = elementary_symmetric(values)
    return _chain_holds(sigmas[1:], precision)


def binomial_root_check(n_max: int = 30) -> CheckOutcome:
    """Check C(n, p)^(p+1) >= C(n, p+1)^p for 1 <= p <= n-1, n <= n_max."""
    failures = [
        {"n": n, "p": p}
        for n in range(2, n_max + 1)
        for p in range(1, n)
        if binomial(n, p) ** (p + 1) < binomial(n, p + 1) ** p
    ]
    return CheckOutcome.from_points(failures, summary={"n_max": n_max})


def random_sigma_chain_check(
    trials: int = 1000, max_n: int = 12, seed: int = 0, precision: int = 80
) -> CheckOutcome:
    """Check both symmetric-function chains on seeded random positive vectors."""
    rng = np.random.default_rng(seed)
    failures = []
    for trial in range(trials):
        n = int(rng.integers(1, max_n + 1))
        values = [Fraction(int(v), 1000) for v in rng.integers(1, 10_000, size=n)]
        if not (mac_laurin_check(values, precision) and sigma_root_chain_check(values, precision)):
            failures.append({"trial": trial, "values": values})
    return CheckOutcome.from_points(
        failures, summary={"trials": trials, "seed": seed}, precision=precision
    )


def inverse_weight_sigma_check(n: int, r: int, precision: int = 80) -> CheckOutcome:
    """Check sigma_1(1/a) <= r/(r-1) and that max_p sigma_p(1/a)^(1/p) sits at p = 1."""
    inverse = WeightVector(n, r).inverse_values
    sigmas = elementary_symmetric(inverse)
    failures: list[dict[str, Any]] = []
    if sigmas[1] > Fraction(r, r - 1):
        failures.append({"n": n, "r": r, "sigma_1": sigmas[1]})
    for p in range(2, n + 1):
        if not _root_ge(sigmas[1], 1, sigmas[p], p, precision):
            failures.append({"n": n, "r": r, "p": p})
    if not sigma_root_chain_check(inverse, precision):
        failures.append({"n": n, "r": r, "chain": False})
    return CheckOutcome.from_points(
        failures, summary={"n": n, "r": r, "sigma_1": sigmas[1]}, precision=precision
    )


# ---------------------------------------------------------------------------
# Root bounds
# ---------------------------------------------------------------------------


def kappa_n(
    n: int, tol: float = KAPPA_TOLERANCE, precision: int = DEFAULT_PRECISION
) -> mpmath.mpf:
    """Return the positive zero of z^n - z^(n-1) - ... - z - 1 by bisection on [1, 2].

    Raises:
        DomainError: If n < 1 or tol <= 0

    """
    if n < 1 or tol <= 0:
        raise DomainError(f"kappa_n needs n >= 1 and tol > 0, got n={n}, tol={tol}")
    with mpmath.workprec(precision):
        if n == 1:
            return mpmath.mpf(1)

        def poly(z: mpmath.mpf) -> mpmath.mpf:
            return z**n - sum(z**j for j in range(n))

        low, high = mpmath.mpf(1), mpmath.mpf(2)
        while high - low > tol:
            mid = (low + high) / 2
            if poly(mid) > 0:
                high = mid
            else:
                low = mid
        return (low + high) / 2


def kappa_monotone_check(n_max: int = 30) -> CheckOutcome:
    """Check that kappa_n increases strictly on 2..n_max and stays below 2."""
    values = [kappa_n(n) for n in range(1, n_max + 1)]
    failures = [
        {"n": n, "kappa": values[n - 1]}
        for n in range(2, n_max + 1)
        if not values[n - 2] < values[n - 1] < 2
    ]
    return CheckOutcome.from_points(failures, summary={"kappa_max": values[-1]})


def fujiwara_bound(coeffs: Sequence[complex | float | int]) -> mpmath.mpf:
    """Return kappa_n * max_p (|c_p|/|c_0|)^(1/p) for c_0 z^n + ... + c_n.

    Raises:
        DomainError: If c_0 = 0

    """
    if not coeffs or coeffs[0] == 0:
        raise DomainError("leading coefficient c_0 must be nonzero")
    n = len(coeffs) - 1
    if n == 0:
        return mpmath.mpf(0)
    lead = abs(coeffs[0])
    spread = max(
        mpmath.mpf(abs(coeffs[p]) / lead) ** (mpmath.mpf(1) / p) for p in range(1, n + 1)
    )
    return kappa_n(n) * spread


def fujiwara_random_check(
    trials: int = 100, max_degree: int = 8, seed: int = 0
) -> CheckOutcome:
    """Check numerically computed roots of random polynomials against the bound."""
    rng = np.random.default_rng(seed)
    failures = []
    for trial in range(trials):
        degree = int(rng.integers(1, max_degree + 1))
        coeffs = rng.normal(size=degree + 1) + 1j * rng.normal(size=degree + 1)
        largest = float(np.max(np.abs(np.roots(coeffs))))
        bound = float(fujiwara_bound(list(coeffs)))
        if largest > bound + ROOT_TOLERANCE:
            failures.append({"trial": trial, "max_root": largest, "bound": bound})
    return CheckOutcome.from_points(failures, summary={"trials": trials, "seed": seed})


# ---------------------------------------------------------------------------
# Majorant at the inverse weights
# ---------------------------------------------------------------------------


def _inverse_weight_products(n: int, r: int) -> tuple[Fraction, Fraction]:
    first = Fraction(1)
    for k in range(1, n):
        first *= Fraction(r**k - 1, r**k - 2)
    second = Fraction(1)
    for ell in range(2, n):
        second *= Fraction(r**ell - r, r**ell - 2 * r - 1) ** (n - ell)
    return first, second


def c_hat_inverse_weights(
    n: int, r: int, *, exact: bool = True, precision: int = DEFAULT_PRECISION
) -> Fraction | mpmath.mpf:
    """Return Ĉ(1/a_1, ..., 1/a_n) for a_i = r^(n-i) from the product formula.

    Raises:
        DomainError: If r <= 3

    """
    if r <= 3:
        raise DomainError(f"inverse-weight bounds need r >= 4, got {r}")
    first, second = _inverse_weight_products(n, r)
    value = first * second
    if exact:
        return value
    with mpmath.workprec(precision):
        return mpmath.mpf(value.numerator) / value.denominator


def alpha_r(r: int, precision: int = DEFAULT_PRECISION) -> mpmath.mpf:
    """Return prod_{l >= 2} (1 + (r+1)/(r^l - 2r - 1)), summed in log space."""
    with mpmath.workprec(precision):
        return mpmath.exp(
            mpmath.nsum(lambda ell: mpmath.log1p((r + 1) / (r**ell - 2 * r - 1)), [2, mpmath.inf])
        )


def exp_inverse_weight_grid(r_values: Iterable[int] = range(9, 21)) -> CheckOutcome:
    """Check exp(2/(r-1)) <= 1 + 3/r on an integer grid of r."""
    failures = []
    with mpmath.workprec(DEFAULT_PRECISION):
        for r in r_values:
            if mpmath.exp(mpmath.mpf(2) / (r - 1)) > 1 + mpmath.mpf(3) / r:
                failures.append({"r": r})
    return CheckOutcome.from_points(failures)


def geometric_gap_grid(
    r_values: Iterable[int] = range(6, 21), ell_values: Iterable[int] = range(2, 13)
) -> CheckOutcome:
    """Check 4r + 2 <= r^l - r^(l-1) exactly on a grid (r >= 6, l >= 2)."""
    ells = list(ell_values)
    failures = [
        {"r": r, "ell": ell}
        for r in r_values
        for ell in ells
        if 4 * r + 2 > r**ell - r ** (ell - 1)
    ]
    return CheckOutcome.from_points(failures)


def c_hat_inverse_weights_check(
    n: int, r: int, precision: int = DEFAULT_PRECISION
) -> CheckOutcome:
    """Check the product formula and both of its bounding chains.

    The product equals the diagonal majorant at 1/r; the first factor is at
    most 1 + 3/r and the second at most alpha(r)^(n-2) <= (1 + 3/r)^(n-2).
    """
    first, second = _inverse_weight_products(n, r)
    value = c_hat_inverse_weights(n, r)
    bound = 1 + Fraction(3, r)
    failures: list[dict[str, Any]] = []
    if n >= 2 and value != eval_diagonal(n, Fraction(1, r), majorant=True):
        failures.append({"n": n, "r": r, "diagonal": False})
    if first > bound:
        failures.append({"n": n, "r": r, "first": first})
    if second > bound ** max(n - 2, 0):
        failures.append({"n": n, "r": r, "second": second})
    with mpmath.workprec(precision):
        alpha = alpha_r(r, precision)
        second_mp = mpmath.mpf(second.numerator) / second.denominator
        if second_mp > alpha ** max(n - 2, 0) or alpha > mpmath.exp(mpmath.mpf(2) / (r - 1)):
            failures.append({"n": n, "r": r, "alpha": alpha})
    return CheckOutcome.from_points(
        failures,
        summary={"n": n, "r": r, "value": value, "alpha": alpha, "bound": bound ** (n - 1)},
        precision=precision,
    )


# ---------------------------------------------------------------------------
# Degree bounds and gates
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DegreeBound:
    """Refined and coarse lower degree bounds for one (n, r)."""

    n: int
    r: int
    refined: Fraction
    coarse: int


def degree_bound(n: int, r: int) -> DegreeBound:
    """Return (20n^2 + 4n) r^3 (r+3)^n / ((r-1)^3 (r+3)) and 25 n^2 (r+3)^n.

    Raises:
        DomainError: If n < 1 or r < 2

    """
    if n < 1 or r < 2:
        raise DomainError(f"degree_bound needs n >= 1 and r >= 2, got n={n}, r={r}")
    refined = Fraction((20 * n * n + 4 * n) * r**3 * (r + 3) ** n, (r - 1) ** 3 * (r + 3))
    return DegreeBound(n, r, refined, 25 * n * n * (r + 3) ** n)


def degree_pipeline_check(n: int, r: int) -> CheckOutcome:
    """Re-derive the refined bound from the chain of estimates, exactly.

    (10n+2)(1+3/r)^(n-1) * 2n r^(n+1)/(r-1)^2 * r/(r-1) must equal the refined
    bound, with mu(a) <= r^(n+1)/(r-1)^2, sigma_1(1/a) <= r/(r-1) and
    Ĉ(1/a) <= (1+3/r)^(n-1) along the way.
    """
    bound = degree_bound(n, r)
    failures: list[dict[str, Any]] = []
    mu = mu_weight(n, r)
    sigma1 = sigma_p(WeightVector(n, r).inverse_values, 1)
    growth = (1 + Fraction(3, r)) ** (n - 1)
    if r > 3 and c_hat_inverse_weights(n, r) > growth:
        failures.append({"step": "majorant at inverse weights"})
    if sigma1 > Fraction(r, r - 1):
        failures.append({"step": "sigma_1"})
    chain = (
        (10 * n + 2)
        * growth
        * 2
        * n
        * Fraction(r ** (n + 1), (r - 1) ** 2)
        * Fraction(r, r - 1)
    )
    if chain != bound.refined:
        failures.append({"step": "chain", "chain": chain, "refined": bound.refined})
    if mu * 2 * n * sigma1 > 2 * n * Fraction(r ** (n + 1), (r - 1) ** 2) * Fraction(r, r - 1):
        failures.append({"step": "mu"})
    if bound.refined > bound.coarse:
        failures.append({"step": "refined <= coarse"})
    return CheckOutcome.from_points(failures, summary={"n": n, "r": r})


def refined_vs_coarse_check(
    n_values: Iterable[int] = range(2, 51), r_values: Iterable[int] = range(9, 21)
) -> CheckOutcome:
    """Check refined <= coarse on a grid."""
    rs = list(r_values)
    failures = []
    for n in n_values:
        for r in rs:
            bound = degree_bound(n, r)
            if bound.refined > bound.coarse:
                failures.append({"n": n, "r": r})
    return CheckOutcome.from_points(failures)


@dataclass(frozen=True)
class GateResult:
    """Smallest n from which a degree gate holds on the whole scan."""

    name: str
    r: int | None
    n_min: int | None
    scan_cap: int
    factor_fn: Callable[[int], mpmath.mpf]

    def factor_at(self, n: int) -> mpmath.mpf:
        """Return the gate factor (bound over target) at n."""
        return self.factor_fn(n)

    def as_dict(self) -> dict[str, Any]:
        """Return the serializable part of the result."""
        out: dict[str, Any] = {
            "name": self.name,
            "r": self.r,
            "n_min": self.n_min,
            "scan_cap": self.scan_cap,
        }
        if self.n_min is not None:
            out["factor_at_n_min"] = self.factor_at(self.n_min)
            if self.n_min > 1:
                out["factor_before_n_min"] = self.factor_at(self.n_min - 1)
        return out


def _power_gate_factor(n: int, *, r: int, base_log2: int, scale: int) -> mpmath.mpf:
    """Return refined(scale * n, r) / 2^(base_log2 * n)."""
    refined = degree_bound(scale * n, r).refined
    with mpmath.workprec(DEFAULT_PRECISION):
        return mpmath.mpf(refined.numerator) / refined.denominator / mpmath.mpf(2) ** (
            base_log2 * n
        )


def _power_gate_holds(n: int, *, r: int, base_log2: int, scale: int) -> bool:
    return 2 ** (base_log2 * n) >= degree_bound(scale * n, r).refined


def _scan_gate(
    name: str, r: int, holds: Callable[[int], bool], factor: Callable[[int], mpmath.mpf], cap: int
) -> GateResult:
    last_failure = 0
    for n in range(1, cap + 1):
        if not holds(n):
            last_failure = n
    n_min = None if last_failure == cap else last_failure + 1
    _LOGGER.debug("Gate %s at r=%s: n_min=%s", name, r, n_min)
    return GateResult(name, r, n_min, cap, factor)


def theorem13_gate(r: int, cap: int = GATE_SCAN_CAP) -> GateResult:
    """Scan 2^(5n) >= refined(n, r) and report the smallest n from which it holds."""
    holds = functools.partial(_power_gate_holds, r=r, base_log2=5, scale=1)
    factor = functools.partial(_power_gate_factor, r=r, base_log2=5, scale=1)
    return _scan_gate("2^(5n)", r, holds, factor, cap)


def theorem14_gate(r: int, cap: int = GATE_SCAN_CAP) -> GateResult:
    """Scan 4^(5n) >= refined(2n, r) (the doubled dimension of the Kobayashi case)."""
    holds = functools.partial(_power_gate_holds, r=r, base_log2=10, scale=2)
    factor = functools.partial(_power_gate_factor, r=r, base_log2=10, scale=2)
    return _scan_gate("4^(5n)", r, holds, factor, cap)


def gate_sweep(
    gate: Callable[[int], GateResult], r_values: Iterable[int]
) -> dict[int, GateResult]:
    """Run one gate for every r."""
    return {r: gate(r) for r in r_values}


def quantifier_summary(results: dict[int, GateResult]) -> dict[str, Any]:
    """Compare the per-r thresholds with the two stated starting dimensions."""
    thresholds = {r: result.n_min for r, result in results.items()}
    known = [value for value in thresholds.values() if value is not None]
    worst = max(known) if len(known) == len(thresholds) and known else None
    return {
        "thresholds": thresholds,
        "worst": worst,
        "holds_from_stated": worst is not None and worst <= THEOREM13_QUANTIFIER,
        "holds_from_checked": worst is not None and worst <= THEOREM13_CHECKED_FROM,
    }


@dataclass(frozen=True)
class FinalBound:
    """A dimension-only degree bound with its gate factor and full ratio to the target."""

    n: int
    bound: mpmath.mpf
    gate_factor: mpmath.mpf
    ratio: mpmath.mpf

    @property
    def gate_holds(self) -> bool:
        """Return True if both the gate factor and the full ratio are below 1."""
        return bool(self.gate_factor < 1 and self.ratio < 1)


def dGG_final(n: int, precision: int = DEFAULT_PRECISION) -> FinalBound:  # noqa: N802
    """Return d_GG(n) = 25n^2 (sqrt(n) log(n)/2 + 3)^n against (sqrt(n) log n)^n.

    Raises:
        DomainError: If n < 3

    """
    if n < 3:
        raise DomainError(f"dGG_final needs n >= 3, got {n}")
    with mpmath.workprec(precision):
        x = mpmath.mpf(n)
        log_n = mpmath.log(x)
        base = mpmath.sqrt(x) * log_n
        log_bound = mpmath.log(25 * x * x) + x * mpmath.log(base / 2 + 3)
        factor = mpmath.exp(-x * mpmath.log(2) + 6 * mpmath.sqrt(x) / log_n)
        ratio = mpmath.exp(log_bound - x * mpmath.log(base))
        return FinalBound(n, mpmath.exp(log_bound), factor, ratio)


def dK_final(n: int, precision: int = DEFAULT_PRECISION) -> FinalBound:  # noqa: N802
    """Return d_K(n) = (sqrt(2n) loglog(2n)/2 + 3)^(2n) 25 (2n)^2 against (n log n)^n.

    Raises:
        DomainError: If n < 3 or log log log(2n) is undefined

    """
    if n < 3:
        raise DomainError(f"dK_final needs n >= 3, got {n}")
    with mpmath.workprec(precision):
        x = mpmath.mpf(n)
        ll2 = mpmath.log(mpmath.log(2 * x))
        if ll2 <= 0:
            raise DomainError(f"log log log(2n) undefined at n={n}")
        log_bound = mpmath.log(100 * x * x) + 2 * x * mpmath.log(
            mpmath.sqrt(2 * x) * ll2 / 2 + 3
        )
        factor = mpmath.exp(
            2 * x * mpmath.log(ll2)
            - x * mpmath.log(mpmath.log(x))
            - x * mpmath.log(2)
            + 6 * mpmath.sqrt(2) * mpmath.sqrt(x) / ll2
        )
        ratio = mpmath.exp(log_bound - x * mpmath.log(x * mpmath.log(x)))
        return FinalBound(n, mpmath.exp(log_bound), factor, ratio)


def _find_threshold(
    evaluate: Callable[[int], FinalBound], start: int, cap: int
) -> int:
    """Return the first n whose gate holds on the whole window [n, min(2n, cap)].

    Raises:
        VerificationError: If no such n exists below cap

    """
    n = start
    while n <= cap:
        if not evaluate(n).gate_holds:
            n += 1
            continue
        end = min(2 * n, cap)
        broken = next((m for m in range(n + 1, end + 1) if not evaluate(m).gate_holds), None)
        if broken is None:
            return n
        n = broken + 1
    raise VerificationError(f"gate never settles below n={cap}")


def find_N_GG(cap: int = FINAL_GATE_SCAN_CAP) -> int:  # noqa: N802
    """Return the first dimension from which the Green-Griffiths gate holds."""
    return _find_threshold(dGG_final, 3, cap)


def find_N_K(cap: int = FINAL_GATE_SCAN_CAP) -> int:  # noqa: N802
    """Return the first dimension from which the Kobayashi gate holds."""
    return _find_threshold(dK_final, 3, cap)


def b_factor_check(n_values: Iterable[int] = range(4, 201)) -> CheckOutcome:
    """Check (2n/(2n-1))^(n+1) <= 2 exactly."""
    failures = [
        {"n": n} for n in n_values if (2 * n) ** (n + 1) > 2 * (2 * n - 1) ** (n + 1)
    ]
    return CheckOutcome.from_points(failures)


# ---------------------------------------------------------------------------
# Radii and Cauchy bounds
# ---------------------------------------------------------------------------


def _min_root_modulus(poly: Sequence[int]) -> float:
    """Return the smallest root modulus of a polynomial given highest degree first."""
    return float(np.min(np.abs(np.roots(poly))))


def _denominator(i: int, sign: int) -> list[int]:
    """Return 1 - 2x^(i-1) + sign x^i, highest degree first."""
    coeffs = [0] * (i + 1)
    coeffs[0] = sign
    coeffs[1] = -2
    coeffs[i] = 1
    return coeffs


def pole_radii(n: int) -> tuple[float, float]:
    """Return (R, R̂): the smallest pole moduli of the diagonal C and Ĉ products.

    R comes from 1 - 2x^i and 1 - 2x^(i-1) + x^i, R̂ from 1 - 2x^i and
    1 - 2x^(i-1) - x^i, for the exponents that occur up to n.

    Raises:
        DomainError: If n < 3

    """
    if n < 3:
        raise DomainError(f"pole_radii needs n >= 3, got {n}")
    halves = min(_min_root_modulus([-2] + [0] * (i - 1) + [1]) for i in range(1, n))
    plain = min(_min_root_modulus(_denominator(i, 1)) for i in range(2, n))
    hat = min(_min_root_modulus(_denominator(i, -1)) for i in range(2, n))
    return min(halves, plain), min(halves, hat)


def pole_radii_check(n: int, samples: int = 4096) -> CheckOutcome:
    """Check R = 1/2, R̂ = sqrt(2) - 1 and |1 - 2x^(i-1) +/- x^i| >= 3/8 on |x| <= 1/2.

    The modulus floor is sampled on the circle |x| = 1/2, where the minimum of a
    nonvanishing analytic function on the disc is attained.
    """
    radius, radius_hat = pole_radii(n)
    failures: list[dict[str, Any]] = []
    if abs(radius - 0.5) > ROOT_TOLERANCE:
        failures.append({"R": radius})
    if abs(radius_hat - MAJORANT_RADIUS) > ROOT_TOLERANCE:
        failures.append({"R_hat": radius_hat})
    x = 0.5 * np.exp(1j * np.linspace(0, 2 * np.pi, samples, endpoint=False))
    floor = float(POLE_FLOOR) - ROOT_TOLERANCE
    smallest = math.inf
    for i in range(3, n + 1):
        for sign in (1, -1):
            moduli = np.abs(1 - 2 * x ** (i - 1) + sign * x**i)
            smallest = min(smallest, float(moduli.min()))
            if moduli.min() < floor:
                failures.append({"i": i, "sign": sign, "min": float(moduli.min())})
    return CheckOutcome.from_points(
        failures, summary={"R": radius, "R_hat": radius_hat, "min_modulus": smallest}
    )


def cauchy_bound_check(n: int, rho: float | Fraction, h_max: int) -> CheckOutcome:
    """Check Ĉ_h rho^h <= Ĉ(rho) for h <= h_max, exactly at the binary value of rho.

    Raises:
        DomainError: If rho is outside (0, sqrt(2) - 1)

    """
    if not 0 < rho < MAJORANT_RADIUS:
        raise DomainError(f"rho must lie in (0, sqrt(2) - 1), got {rho}")
    point = Fraction(rho)
    value = eval_diagonal(n, point, majorant=True)
    diag = diagonal_C_hat_formula(n, h_max)
    failures = [
        {"h": h, "coefficient": diag[h]}
        for h in range(h_max + 1)
        if diag[h] * point**h > value
    ]
    return CheckOutcome.from_points(
        failures, summary={"n": n, "rho": rho, "h_max": h_max, "C_hat_rho": value}
    )


def cauchy_instantiation_check(
    n: int, h_max: int = 20, precision: int = DEFAULT_PRECISION
) -> CheckOutcome:
    """Check Ĉ(1/sqrt(n)) <= e^(12 + sqrt(n)) and Ĉ_h <= n^(h/2) e^(12 + sqrt(n)).

    Raises:
        DomainError: If 1/sqrt(n) lies outside the majorant disc

    """
    if 1 / math.sqrt(n) >= MAJORANT_RADIUS:
        raise DomainError(f"1/sqrt(n) lies outside the majorant disc for n={n}")
    failures: list[dict[str, Any]] = []
    diag = diagonal_C_hat_formula(n, h_max)
    with mpmath.workprec(precision):
        root = mpmath.sqrt(n)
        value = eval_diagonal(n, 1 / root, precision, majorant=True)
        cap = mpmath.exp(12 + root)
        if value > cap:
            failures.append({"value": value, "cap": cap})
        for h in range(h_max + 1):
            if diag[h] > root**h * cap:
                failures.append({"h": h})
        log_value = mpmath.log(value)
    return CheckOutcome.from_points(
        failures,
        summary={"n": n, "log_C_hat": log_value, "log_cap": 12 + root},
        precision=precision,
    )


# ---------------------------------------------------------------------------
# Evaluation estimates
# ---------------------------------------------------------------------------


def section9_suite(n: int, r: int, precision: int = DEFAULT_PRECISION) -> CheckOutcome:
    """Check the three evaluation estimates at (n, r).

    Ĉ(1/r) <= e^(n/r + 12n/r^2), 1 <= Ĉ(1/r)/C(1/r) <= e^(17n/r^2), and with
    r' = sqrt(n) a(n), a(n) = log log n: C(1/r') >= e^(sqrt(n)/(2 a(n))).

    Raises:
        DomainError: If r < 10 or log log n < 1 (n <= 15)

    """
    if r < 10:
        raise DomainError(f"evaluation estimates assume r >= 10, got {r}")
    if n <= 15:
        raise DomainError(f"log log n must be at least 1, got n={n}")
    failures: list[dict[str, Any]] = []
    with mpmath.workprec(precision):
        x = mpmath.mpf(1) / r
        majorant = eval_diagonal(n, x, precision, majorant=True)
        plain = eval_diagonal(n, x, precision)
        bound = mpmath.exp(mpmath.mpf(n) / r + mpmath.mpf(12 * n) / r**2)
        if majorant > bound:
            failures.append({"claim": "majorant growth", "value": majorant, "bound": bound})
        ratio = majorant / plain
        ratio_bound = mpmath.exp(mpmath.mpf(17 * n) / r**2)
        if not 1 <= ratio <= ratio_bound:
            failures.append({"claim": "majorant ratio", "ratio": ratio, "bound": ratio_bound})
        a = mpmath.log(mpmath.log(n))
        point = 1 / (mpmath.sqrt(n) * a)
        lower = mpmath.exp(mpmath.sqrt(n) / (2 * a))
        value = eval_diagonal(n, point, precision)
        if value < lower:
            failures.append({"claim": "minoration", "value": value, "bound": lower})
    return CheckOutcome.from_points(
        failures,
        summary={
            "n": n,
            "r": r,
            "C_hat": majorant,
            "C": plain,
            "ratio": ratio,
            "log_C_small": mpmath.log(value),
            "log_lower": mpmath.log(lower),
        },
        precision=precision,
    )


def lemma10_tail_check(
    n: int,
    a: float,
    *,
    r: int | None = None,
    c: float | None = None,
    budget: int = DEFAULT_COEFF_BUDGET,
    cache: CoefficientCache | None = None,
    precision: int = DEFAULT_PRECISION,
) -> CheckOutcome:
    """Check |CMR_R| <= majorant tail, and report the asymptotic cap 2e^12/a.

    With r = floor(sqrt(n) a) and c = log a by default, the remainder beyond
    tau = floor(sqrt(n)/c) is bounded exactly by the Ĉ tail over the same
    staircase indices, which in turn is at most the full tail
    ĈR_inf - sum_{h <= tau} Ĉ_h r^-h. Whether that tail is already below
    2e^12/a is reported without affecting the verdict.
    """
    radius = math.floor(math.sqrt(n) * a) if r is None else r
    spread = math.log(a) if c is None else c
    tau = truncation_threshold(n, spread)
    decomp = cmr_decomposition(n, radius, spread, budget=budget, cache=cache)
    box = staircase_box(n)
    check_budget(box, budget)
    hat = coefficients(n, box, majorant=True, cache=cache)
    staircase_tail = sum(
        (
            Fraction(int(value), radius ** sum(ks))
            for ks, value in hat.items()
            if sum(ks) > tau and in_staircase(n, ks)
        ),
        Fraction(0),
    )
    diag = diagonal_C_hat_formula(n, tau)
    head = sum((Fraction(diag[h], radius**h) for h in range(tau + 1)), Fraction(0))
    full_tail = decomp.CRhat_inf - head
    failures: list[dict[str, Any]] = []
    if abs(decomp.CMR_R) > staircase_tail:
        failures.append({"CMR_R": decomp.CMR_R, "tail": staircase_tail})
    if staircase_tail > full_tail:
        failures.append({"staircase_tail": staircase_tail, "full_tail": full_tail})
    with mpmath.workprec(precision):
        cap = 2 * mpmath.exp(12) / a
        asymptotic = mpmath.mpf(full_tail.numerator) / full_tail.denominator <= cap
    return CheckOutcome.from_points(
        failures,
        summary={
            "n": n,
            "r": radius,
            "c": spread,
            "tau": tau,
            "CMR_R": decomp.CMR_R,
            "tail": staircase_tail,
            "full_tail": full_tail,
            "asymptotic_cap": cap,
            "asymptotic_bound_holds": asymptotic,
        },
        precision=precision,
    )


def final_minorant(n: int | mpmath.mpf, precision: int = DEFAULT_PRECISION) -> mpmath.mpf:
    """Return the closing lower bound of the truncation argument at dimension n.

    e^(sqrt(n)/(2a)) [e^(-2/(log a)^2) - (e^(17/a^2) - 1)/2]
    - 2 e^12 e^(-log a) (1 + e^(-2/(log a)^2)), a = log log n.

    Raises:
        DomainError: If log log n <= 1

    """
    with mpmath.workprec(precision):
        x = mpmath.mpf(n)
        a = mpmath.log(mpmath.log(x))
        if a <= 1:
            raise DomainError(f"final minorant needs log log n > 1, got n={n}")
        c = mpmath.log(a)
        gauss = mpmath.exp(-2 / c**2)
        head = mpmath.exp(mpmath.sqrt(x) / (2 * a)) * (
            gauss - (mpmath.exp(17 / a**2) - 1) / 2
        )
        return head - 2 * mpmath.exp(12) / a * (1 + gauss)
