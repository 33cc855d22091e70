"""Central monomial, multinomial quotients and the CA constant-term sum.

CA is the constant term of A(w) * C(w): the sum over the staircase of
M_k * r^-(k_2+...+k_n) * C_k. The conjecture is CA >= 1 for every n >= 2.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
import itertools
import logging
import math
import time
from typing import TYPE_CHECKING, Any

import mpmath
import numpy as np

from .arith import factorial, falling_quotient, log_exact, multinomial
from .cache import coefficients
from .const import (
    CERTIFIED_TAIL_ORDER,
    CERTIFIED_TAIL_RADIUS,
    DEFAULT_COEFF_BUDGET,
    DEFAULT_EXACT_MAX_N,
    DEFAULT_PRECISION,
    DEFAULT_TRUNC,
    MODE_AUTO,
    MODE_CERTIFIED,
    MODE_EXACT,
    MODE_INCONCLUSIVE,
    RUN_MODES,
)
from .errors import DomainError, ResourceLimitError
from .generating import (
    diagonal_C_hat_formula,
    eval_diagonal,
    i_indices,
    in_staircase,
    staircase,
    staircase_box,
)
from .types import CheckOutcome

if TYPE_CHECKING:
    from collections.abc import Iterable

    from .cache import CoefficientCache
    from .series import MultiSeries, TruncationBox
    from .types import MultiIndex

_LOGGER = logging.getLogger(__name__)

# Grid for log(1-delta) >= -delta - delta^2 and its two sharp-edge points.
DELTA_GRID_MAX = Fraction(3, 5)
DELTA_GRID_STEPS = 600
DELTA_SHARP_HOLDS = Fraction(683, 1000)
DELTA_SHARP_FAILS = Fraction(7, 10)


@dataclass(frozen=True)
class MultinomialQuotient:
    """M_k = n!/(n-k_2)! * ... * n!/(n+k_n)! at a staircase index."""

    n: int
    ks: MultiIndex
    value: Fraction


@dataclass(frozen=True, kw_only=True)
class ConjectureReport:
    """Verdict on CA >= 1 (equivalently I_0 >= Ĩ_0) for one (n, r).

    In certified mode ``CA`` is a rigorous lower bound and ``I0`` the
    corresponding lower bound on I_0.
    """

    n: int
    r: int
    I0_tilde: int  # noqa: N815
    CA: Fraction  # noqa: N815
    I0: Fraction  # noqa: N815
    mode: str
    truncation: int | None = None
    elapsed: float = field(default=0.0, compare=False)

    @property
    def margin(self) -> Fraction:
        """Return CA - 1."""
        return self.CA - 1

    @property
    def holds(self) -> bool:
        """Return True when the report proves CA >= 1."""
        return self.mode != MODE_INCONCLUSIVE and self.CA >= 1

    def as_dict(self) -> dict[str, Any]:
        """Return the report fields; timing is left to the caller."""
        return {
            "n": self.n,
            "r": self.r,
            "I0_tilde": self.I0_tilde,
            "CA": self.CA,
            "I0": self.I0,
            "margin": self.margin,
            "mode": self.mode,
            "truncation": self.truncation,
        }


@dataclass(frozen=True)
class Interval:
    """Closed rational interval [low, high]."""

    low: Fraction
    high: Fraction

    def __contains__(self, value: object) -> bool:
        """Return True if value lies in the interval."""
        return isinstance(value, int | Fraction) and self.low <= value <= self.high


@dataclass(frozen=True, kw_only=True)
class CmrDecomposition:
    """The truncated / remainder / signed split of CA and of its M-free variant."""

    n: int
    r: int
    c: float
    tau: int
    CMR: Fraction  # noqa: N815
    CMR_T: Fraction  # noqa: N815
    CMR_R: Fraction  # noqa: N815
    CMR_T_plus: Fraction  # noqa: N815
    CMR_T_minus: Fraction  # noqa: N815
    CR: Fraction  # noqa: N815
    CR_T: Fraction  # noqa: N815
    CR_R: Fraction  # noqa: N815
    CR_T_plus: Fraction  # noqa: N815
    CR_T_minus: Fraction  # noqa: N815
    CR_inf: Fraction  # noqa: N815
    CR_inf_plus: Interval  # noqa: N815
    CR_inf_minus: Interval  # noqa: N815
    CRhat_inf: Fraction  # noqa: N815
    box_tail: Fraction

    def as_dict(self) -> dict[str, Any]:
        """Return every quantity; intervals become [low, high] pairs."""
        out: dict[str, Any] = {}
        for name, value in vars(self).items():
            out[name] = [value.low, value.high] if isinstance(value, Interval) else value
        return out


@dataclass(frozen=True)
class RatioRow:
    """One computed row of the I_0/Ĩ_0 table."""

    n: int
    r: int
    CA: Fraction  # noqa: N815
    log_per_n: mpmath.mpf


# ---------------------------------------------------------------------------
# Central monomial and quotients
# ---------------------------------------------------------------------------


def _weight_exponent(n: int) -> int:
    """Return n * n(n-1)/2, the r-exponent of the central monomial."""
    return n * n * (n - 1) // 2


def central_monomial(n: int, r: int) -> int:
    """Return Ĩ_0 = (n^2)!/(n!)^n * r^(n * n(n-1)/2).

    Raises:
        DomainError: If n < 1 or r < 1

    """
    if n < 1 or r < 1:
        raise DomainError(f"central_monomial needs n >= 1 and r >= 1, got n={n}, r={r}")
    return multinomial([n] * n) * r ** _weight_exponent(n)


def multinomial_quotient(n: int, ks: MultiIndex) -> MultinomialQuotient:
    """Return M_k as a product of falling quotients.

    Raises:
        DomainError: If ks lies outside the staircase

    """
    if not in_staircase(n, ks):
        raise DomainError(f"index {ks} lies outside the staircase for n={n}")
    value = Fraction(1)
    for i in i_indices(n, ks):
        value *= falling_quotient(n, i - n)
    return MultinomialQuotient(n, ks, value)


def quotient_table(n: int) -> dict[MultiIndex, Fraction]:
    """Return M_k for every staircase index."""
    return {ks: multinomial_quotient(n, ks).value for ks in staircase(n)}


def quotient_bounds_check(n: int, *, samples: int = 0, seed: int = 0) -> CheckOutcome:
    """Check 0 < M_k <= 1 with equality only at k = 0.

    ``samples == 0`` enumerates the whole staircase; otherwise a seeded random
    sample of staircase indices is drawn.
    """
    if samples:
        rng = np.random.default_rng(seed)
        indices: Iterable[MultiIndex] = (_random_staircase(n, rng) for _ in range(samples))
    else:
        indices = staircase(n)
    failures: list[dict[str, Any]] = []
    checked = 0
    zero = (0,) * (n - 1)
    largest = Fraction(0)
    for ks in indices:
        checked += 1
        value = multinomial_quotient(n, ks).value
        if ks != zero:
            largest = max(largest, value)
        if not (0 < value <= 1) or (value == 1) != (ks == zero):
            failures.append({"ks": list(ks), "M": value})
    return CheckOutcome.from_points(
        failures, summary={"n": n, "checked": checked, "max_nonzero_M": largest}
    )


def _random_staircase(n: int, rng: np.random.Generator) -> MultiIndex:
    """Draw a staircase index coordinate by coordinate."""
    ks: list[int] = []
    limit = n
    for _ in range(n - 1):
        k = int(rng.integers(0, limit + 1))
        ks.append(k)
        limit = n + k
    return tuple(ks)


def verify_central_dominance(n: int) -> bool:
    """Return True iff every multinomial m of n^2 into n parts is below the central one.

    Raises:
        DomainError: If n > 4 (brute force only)

    """
    if not 1 <= n <= 4:
        raise DomainError(f"central dominance is enumerated for 1 <= n <= 4, got {n}")
    central = multinomial([n] * n)
    target = (n,) * n
    for head in itertools.product(range(n * n + 1), repeat=n - 1):
        last = n * n - sum(head)
        if last < 0:
            continue
        parts = (*head, last)
        if parts != target and multinomial(parts) >= central:
            _LOGGER.warning("Composition %s reaches the central value for n=%s", parts, n)
            return False
    return True


# ---------------------------------------------------------------------------
# CA
# ---------------------------------------------------------------------------


def check_budget(box: TruncationBox, budget: int) -> None:
    """Refuse boxes that need more dense coefficients than the budget.

    Raises:
        ResourceLimitError: If box.size exceeds budget

    """
    if box.size > budget:
        raise ResourceLimitError(
            f"coefficient box needs {box.size} entries, budget is {budget}",
            required=box.size,
            budget=budget,
        )


def _weighted_numerator(n: int, r: int, series: MultiSeries, depth: int) -> int:
    """Return sum over staircase terms of C_k * multinomial(i(k)) * r^(depth - |k|).

    Partial sums are kept per leading index k_2 and reduced in ascending order.
    """
    partial: dict[int, int] = {}
    for ks, value in series.items():
        if not in_staircase(n, ks):
            continue
        term = int(value) * multinomial(i_indices(n, ks)) * r ** (depth - sum(ks))
        partial[ks[0]] = partial.get(ks[0], 0) + term
    _LOGGER.debug("Reducing %d k2-partitions for n=%s", len(partial), n)
    return sum(partial[k2] for k2 in sorted(partial))


def compute_CA_exact(  # noqa: N802
    n: int,
    r: int,
    *,
    budget: int = DEFAULT_COEFF_BUDGET,
    cache: CoefficientCache | None = None,
) -> ConjectureReport:
    """Return CA and I_0 exactly.

    The numerator is an integer, so I_0 = CA * Ĩ_0 is that integer.

    Raises:
        DomainError: If n < 1 or r < 1
        ResourceLimitError: If the C box exceeds budget

    """
    started = time.perf_counter()
    tilde = central_monomial(n, r)
    if n == 1:
        return ConjectureReport(
            n=n, r=r, I0_tilde=tilde, CA=Fraction(1), I0=Fraction(tilde), mode=MODE_EXACT
        )
    box = staircase_box(n)
    check_budget(box, budget)
    series = coefficients(n, box, cache=cache)
    numerator = _weighted_numerator(n, r, series, _weight_exponent(n))
    ca = Fraction(numerator, tilde)
    elapsed = time.perf_counter() - started
    _LOGGER.info("Exact CA for n=%s, r=%s computed in %.3fs", n, r, elapsed)
    return ConjectureReport(
        n=n,
        r=r,
        I0_tilde=tilde,
        CA=ca,
        I0=Fraction(numerator),
        mode=MODE_EXACT,
        elapsed=elapsed,
    )


def certified_tail(n: int, r: int, trunc: int, *, order: int | None = None) -> Fraction:
    """Return an exact upper bound on sum_{h > trunc} Ĉ_h r^-h.

    Terms up to ``order`` use the exact diagonal coefficients of Ĉ; beyond it
    the Cauchy estimate Ĉ_h <= Ĉ(rho) rho^-h with rho = 2/5 (inside the
    radius sqrt(2) - 1) closes the sum geometrically.
    """
    if trunc < 0:
        raise DomainError(f"truncation must be nonnegative, got {trunc}")
    if r * CERTIFIED_TAIL_RADIUS <= 1:
        raise DomainError(f"certified tail needs r * 2/5 > 1, got r={r}")
    top = max(CERTIFIED_TAIL_ORDER, trunc + 1) if order is None else max(order, trunc)
    diag = diagonal_C_hat_formula(n, top)
    head = sum(
        (Fraction(diag[h], r**h) for h in range(trunc + 1, top + 1)), Fraction(0)
    )
    q = 1 / (r * CERTIFIED_TAIL_RADIUS)
    cap = eval_diagonal(n, CERTIFIED_TAIL_RADIUS, majorant=True)
    return head + cap * q ** (top + 1) / (1 - q)


def compute_CA_certified(  # noqa: N802
    n: int,
    r: int,
    trunc: int,
    *,
    budget: int = DEFAULT_COEFF_BUDGET,
    cache: CoefficientCache | None = None,
) -> ConjectureReport:
    """Return a rigorous lower bound on CA from the terms with |k| <= trunc.

    Raises:
        DomainError: If trunc < 0
        ResourceLimitError: If the truncated box exceeds budget

    """
    if trunc < 0:
        raise DomainError(f"truncation must be nonnegative, got {trunc}")
    started = time.perf_counter()
    tilde = central_monomial(n, r)
    if n == 1:
        return ConjectureReport(
            n=n,
            r=r,
            I0_tilde=tilde,
            CA=Fraction(1),
            I0=Fraction(tilde),
            mode=MODE_CERTIFIED,
            truncation=trunc,
        )
    box = staircase_box(n, trunc)
    check_budget(box, budget)
    series = coefficients(n, box, cache=cache)
    head = Fraction(
        _weighted_numerator(n, r, series, trunc), multinomial([n] * n) * r**trunc
    )
    bound = head - certified_tail(n, r, trunc)
    mode = MODE_CERTIFIED if bound >= 1 else MODE_INCONCLUSIVE
    if mode == MODE_INCONCLUSIVE:
        _LOGGER.warning(
            "Certified bound for n=%s, r=%s at truncation %s is below 1",
            n,
            r,
            trunc,
        )
    return ConjectureReport(
        n=n,
        r=r,
        I0_tilde=tilde,
        CA=bound,
        I0=bound * tilde,
        mode=mode,
        truncation=trunc,
        elapsed=time.perf_counter() - started,
    )


def compute_CA(  # noqa: N802
    n: int,
    r: int,
    *,
    mode: str = MODE_AUTO,
    trunc: int = DEFAULT_TRUNC,
    exact_max_n: int = DEFAULT_EXACT_MAX_N,
    budget: int = DEFAULT_COEFF_BUDGET,
    cache: CoefficientCache | None = None,
) -> ConjectureReport:
    """Dispatch to the exact or certified computation (auto: exact up to exact_max_n)."""
    if mode not in RUN_MODES:
        raise DomainError(f"unknown mode {mode!r}")
    if mode == MODE_EXACT or (mode == MODE_AUTO and n <= exact_max_n):
        return compute_CA_exact(n, r, budget=budget, cache=cache)
    return compute_CA_certified(n, r, trunc, budget=budget, cache=cache)


def ratio_table(
    n_values: Iterable[int],
    r: int,
    *,
    budget: int = DEFAULT_COEFF_BUDGET,
    cache: CoefficientCache | None = None,
    precision: int = DEFAULT_PRECISION,
) -> list[RatioRow]:
    """Return exact CA = I_0/Ĩ_0 with log(CA)/n for each n; rows are never extrapolated."""
    rows = []
    for n in n_values:
        report = compute_CA_exact(n, r, budget=budget, cache=cache)
        log_per_n = log_exact(report.CA, precision) / n
        rows.append(RatioRow(n, r, report.CA, log_per_n))
    return rows


def describe_trend(rows: list[RatioRow]) -> dict[str, Any]:
    """Summarize whether log(CA)/n stays positive and how much it moves."""
    if not rows:
        return {"positive": False, "spread": None}
    values = [row.log_per_n for row in rows]
    return {
        "positive": all(value > 0 for value in values),
        "spread": max(values) - min(values),
    }


# ---------------------------------------------------------------------------
# Minorations
# ---------------------------------------------------------------------------


def _log_lemma_gap(delta: Fraction) -> mpmath.mpf:
    """Return log(1 - delta) + delta + delta^2."""
    d = mpmath.mpf(delta.numerator) / delta.denominator
    return mpmath.log(1 - d) + d + d * d


def log_bound_crossing(precision: int = DEFAULT_PRECISION) -> mpmath.mpf:
    """Return the positive delta where log(1-delta) = -delta - delta^2."""
    with mpmath.workprec(precision):
        return mpmath.findroot(
            lambda d: mpmath.log(1 - d) + d + d * d, (0.6, 0.75), solver="anderson"
        )


def minoration_suite(
    n: int, k_max: int, ell_max: int, *, precision: int = DEFAULT_PRECISION
) -> CheckOutcome:
    """Check the falling-quotient minorations and the log(1-delta) bound.

    n!/(n-k)! >= n^k e^(-k^2/n) for 0 <= k <= k_max, n!/(n+l)! >= n^-l e^(-l^2/n)
    for 0 <= l <= ell_max, the uniform form over -floor(3n/5) <= m <= ell_max,
    and log(1-delta) >= -delta - delta^2 on a grid of [0, 3/5].

    Raises:
        DomainError: If k_max > 3n/5 or a bound is negative

    """
    if k_max < 0 or ell_max < 0:
        raise DomainError("k_max and ell_max must be nonnegative")
    if 5 * k_max > 3 * n:
        raise DomainError(f"k_max={k_max} exceeds 3n/5 for n={n}")
    failures: list[dict[str, Any]] = []
    with mpmath.workprec(precision):
        log_n = mpmath.log(n)
        log_fact_n = mpmath.log(factorial(n))
        # Negative m covers the falling side (k = -m), positive m the rising side.
        for m in range(-(3 * n // 5), ell_max + 1):
            lhs = log_fact_n - mpmath.log(factorial(n + m))
            rhs = -m * log_n - mpmath.mpf(m * m) / n
            if lhs < rhs:
                failures.append({"n": n, "m": m, "log_lhs": lhs, "log_rhs": rhs})
        for step in range(DELTA_GRID_STEPS + 1):
            delta = DELTA_GRID_MAX * step / DELTA_GRID_STEPS
            if _log_lemma_gap(delta) < 0:
                failures.append({"delta": delta})
        edge_holds = _log_lemma_gap(DELTA_SHARP_HOLDS) >= 0
        edge_fails = _log_lemma_gap(DELTA_SHARP_FAILS) < 0
    if not edge_holds:
        failures.append({"delta": DELTA_SHARP_HOLDS, "sharp_edge": True})
    return CheckOutcome.from_points(
        failures,
        summary={
            "n": n,
            "k_max": k_max,
            "ell_max": ell_max,
            "holds_at_0_683": edge_holds,
            "fails_at_0_70": edge_fails,
            "crossing": log_bound_crossing(precision),
        },
        precision=precision,
    )


def truncation_threshold(n: int, c: float) -> int:
    """Return floor(sqrt(n)/c), the index bound of the truncated sums."""
    if c <= 0:
        raise DomainError(f"c must be positive, got {c}")
    return math.floor(math.sqrt(n) / c)


def uniform_minoration_check(
    n: int, c: float, *, precision: int = DEFAULT_PRECISION
) -> CheckOutcome:
    """Check M_k >= e^(-sum m_j^2/n) >= e^(-4/c^2) for |k| <= floor(sqrt(n)/c).

    m_j = i_j - n are the offsets of the derived i-indices. Whether the sharper
    constant e^(-2/c^2) also holds is reported without affecting the verdict.
    """
    tau = truncation_threshold(n, c)
    failures: list[dict[str, Any]] = []
    with mpmath.workprec(precision):
        floor4 = mpmath.exp(-4 / mpmath.mpf(c) ** 2)
        floor2 = mpmath.exp(-2 / mpmath.mpf(c) ** 2)
        smallest = mpmath.mpf(1)
        for ks in staircase(n, tau):
            value = multinomial_quotient(n, ks).value
            m_squares = sum((i - n) ** 2 for i in i_indices(n, ks))
            quotient = mpmath.mpf(value.numerator) / value.denominator
            gauss = mpmath.exp(-mpmath.mpf(m_squares) / n)
            smallest = min(smallest, quotient)
            if quotient < gauss or gauss < floor4:
                failures.append({"ks": list(ks), "M": value, "gaussian": gauss})
    return CheckOutcome.from_points(
        failures,
        summary={
            "n": n,
            "c": c,
            "tau": tau,
            "min_M": smallest,
            "floor": floor4,
            "sharper_constant_holds": smallest >= floor2,
        },
        precision=precision,
    )


# ---------------------------------------------------------------------------
# Truncated / remainder decomposition
# ---------------------------------------------------------------------------


def cmr_decomposition(
    n: int,
    r: int,
    c: float,
    *,
    budget: int = DEFAULT_COEFF_BUDGET,
    cache: CoefficientCache | None = None,
) -> CmrDecomposition:
    """Return the exact CMR / CR split and the infinite-sum intervals.

    Sums over the staircase are exact. The infinite sums CR_inf^+ and
    CR_inf^- run over all k >= 0; they are bracketed by the box sums plus the
    exact majorant tail ĈR_inf - sum_box Ĉ_k r^-|k|.
    """
    if n < 2:
        raise DomainError(f"cmr_decomposition needs n >= 2, got {n}")
    tau = truncation_threshold(n, c)
    box = staircase_box(n)
    check_budget(box, budget)
    c_series = coefficients(n, box, cache=cache)
    c_hat = coefficients(n, box, majorant=True, cache=cache)
    depth = _weight_exponent(n)
    central = multinomial([n] * n)

    # Integer accumulators scaled by r^depth (and by the central multinomial for CMR).
    cmr_t = [0, 0]
    cmr_r = 0
    cr_t = [0, 0]
    cr_r = 0
    box_signed = [0, 0]
    for ks, value in c_series.items():
        coeff = int(value)
        weight = r ** (depth - sum(ks))
        side = 0 if coeff >= 0 else 1
        box_signed[side] += abs(coeff) * weight
        if not in_staircase(n, ks):
            continue
        weighted = coeff * multinomial(i_indices(n, ks)) * weight
        if sum(ks) <= tau:
            cmr_t[side] += abs(weighted)
            cr_t[side] += abs(coeff) * weight
        else:
            cmr_r += weighted
            cr_r += coeff * weight
    hat_box = sum(int(value) * r ** (depth - sum(ks)) for ks, value in c_hat.items())

    scale = r**depth
    cmr_scale = central * scale
    cr_inf = eval_diagonal(n, Fraction(1, r))
    crhat_inf = eval_diagonal(n, Fraction(1, r), majorant=True)
    tail = crhat_inf - Fraction(hat_box, scale)
    plus_low = Fraction(box_signed[0], scale)
    minus_low = Fraction(box_signed[1], scale)
    # CR_inf^- <= (ĈR_inf - CR_inf)/2 since CR^+ + CR^- <= ĈR_inf.
    minus_high = min(minus_low + tail, (crhat_inf - cr_inf) / 2)
    plus_high = min(plus_low + tail, cr_inf + minus_high)

    cmr_t_value = Fraction(cmr_t[0] - cmr_t[1], cmr_scale)
    cr_t_value = Fraction(cr_t[0] - cr_t[1], scale)
    return CmrDecomposition(
        n=n,
        r=r,
        c=c,
        tau=tau,
        CMR=cmr_t_value + Fraction(cmr_r, cmr_scale),
        CMR_T=cmr_t_value,
        CMR_R=Fraction(cmr_r, cmr_scale),
        CMR_T_plus=Fraction(cmr_t[0], cmr_scale),
        CMR_T_minus=Fraction(cmr_t[1], cmr_scale),
        CR=cr_t_value + Fraction(cr_r, scale),
        CR_T=cr_t_value,
        CR_R=Fraction(cr_r, scale),
        CR_T_plus=Fraction(cr_t[0], scale),
        CR_T_minus=Fraction(cr_t[1], scale),
        CR_inf=cr_inf,
        CR_inf_plus=Interval(plus_low, plus_high),
        CR_inf_minus=Interval(minus_low, minus_high),
        CRhat_inf=crhat_inf,
        box_tail=tail,
    )


def cmr_identity_check(decomp: CmrDecomposition) -> CheckOutcome:
    """Check the exact split identities and the majorant inequality."""
    failures: list[dict[str, Any]] = []
    if decomp.CMR != decomp.CMR_T + decomp.CMR_R:
        failures.append({"identity": "CMR = CMR_T + CMR_R"})
    if decomp.CMR_T != decomp.CMR_T_plus - decomp.CMR_T_minus:
        failures.append({"identity": "CMR_T = CMR_T+ - CMR_T-"})
    if decomp.CR != decomp.CR_T + decomp.CR_R:
        failures.append({"identity": "CR = CR_T + CR_R"})
    if decomp.CR_T != decomp.CR_T_plus - decomp.CR_T_minus:
        failures.append({"identity": "CR_T = CR_T+ - CR_T-"})
    if decomp.CR_inf_plus.low + decomp.CR_inf_minus.low > decomp.CRhat_inf:
        failures.append({"inequality": "CR_inf+ + CR_inf- <= ĈR_inf"})
    box_value = decomp.CR_inf_plus.low - decomp.CR_inf_minus.low
    if abs(decomp.CR_inf - box_value) > decomp.box_tail:
        failures.append({"inequality": "|CR_inf - box sum| <= tail"})
    return CheckOutcome.from_points(
        failures, summary={"n": decomp.n, "r": decomp.r, "tau": decomp.tau}
    )


def sign_balance_check(
    decomp: CmrDecomposition, *, precision: int = DEFAULT_PRECISION
) -> CheckOutcome:
    """Check CR_inf^- <= (e^(17n/r^2) - 1)/2 * CR_inf^+ on the certified interval ends."""
    with mpmath.workprec(precision):
        factor = (mpmath.exp(mpmath.mpf(17 * decomp.n) / decomp.r**2) - 1) / 2
        minus_high = decomp.CR_inf_minus.high
        plus_low = decomp.CR_inf_plus.low
        lhs = mpmath.mpf(minus_high.numerator) / minus_high.denominator
        rhs = factor * mpmath.mpf(plus_low.numerator) / plus_low.denominator
        passed = lhs <= rhs
    return CheckOutcome(
        passed=passed,
        witness={"n": decomp.n, "r": decomp.r, "CR_inf_minus_max": lhs, "bound": rhs},
        precision=precision,
    )
