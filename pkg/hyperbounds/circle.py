"""Maximum-modulus scans and positivity checks on circles |z| = rho.

G_k(z) = (1 - z^k)/(1 - 2z^k) and H_l(z) = (1 - z^l)/(1 - 2z^l - z^(l+1)) are the
building blocks of the diagonal products. Their maximum modulus on a small
circle sits at the real point; for H_l this reduces to the positivity of the
trigonometric polynomial f_{l,rho}, minorized by g_{l,rho} and h_{l,rho}.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
import logging
import math
from pathlib import Path
from typing import Any, Final

import numpy as np
import numpy.typing as npt

from .const import (
    CIRCLE_MAX_RHO,
    CIRCLE_MAX_TOLERANCE,
    CIRCLE_REFINE_FACTOR,
    DEFAULT_SAMPLES,
    FINITE_DIFFERENCE_STEP,
    IDENTITY_TOLERANCE,
    POLE_TOLERANCE,
)
from .errors import DomainError, PoleError
from .types import CheckOutcome

_LOGGER = logging.getLogger(__name__)

type FloatArray = npt.NDArray[np.float64]

FUNC_G: Final = "G"
FUNC_H: Final = "H"
FUNC_F: Final = "f"
FUNC_SMALL_G: Final = "g"
FUNC_SMALL_H: Final = "h"
FUNC_G_PRIME: Final = "g_prime"
MODULUS_FUNCS: Final = (FUNC_G, FUNC_H)
EVEN_FUNCS: Final = (FUNC_F, FUNC_SMALL_G, FUNC_SMALL_H, FUNC_G_PRIME)

TIE_TOLERANCE: Final = 1e-12
SINE_TOLERANCE: Final = 1e-15

# Printed certificates: (label, value as printed). Computed values must start with these digits.
CERTIFICATES: Final = (
    ("g1 on [pi/4, pi]", "0.286"),
    ("h on [pi/(4l), 7pi/(4l)]", "0.01164"),
    ("h2 on [7pi/8, pi]", "0.820"),
    ("remainder absorption", "0.328"),
    ("g1 derivative bracket", "5.563"),
    ("g derivative bracket, l = 2", "1.442"),
)


@dataclass(frozen=True)
class CircleScan:
    """Sampled values of one function family member on a theta grid.

    For G and H the values are |F(rho e^(i theta))| / F(rho); for f, g, h and
    g' they are the raw function values on [0, pi].
    """

    func_id: str
    index: int
    rho: float
    samples: int
    theta: FloatArray
    values: FloatArray
    min_value: float
    argmin: float
    max_value: float
    argmax: float


def _check_rho(rho: float, *, allow_zero: bool = False) -> None:
    low_ok = rho >= 0 if allow_zero else rho > 0
    if not low_ok or rho > CIRCLE_MAX_RHO:
        raise DomainError(f"rho must lie in (0, {CIRCLE_MAX_RHO}], got {rho}")


def _guarded(denominator: Any) -> Any:
    if np.any(np.abs(denominator) <= POLE_TOLERANCE):
        raise PoleError("denominator vanishes on the evaluation set")
    return denominator


def eval_G(k: int, z: Any) -> Any:  # noqa: N802
    """Return G_k(z) = (1 - z^k)/(1 - 2z^k); works elementwise on arrays.

    Raises:
        PoleError: If 1 - 2z^k vanishes

    """
    zk = np.power(z, k)
    return (1 - zk) / _guarded(1 - 2 * zk)


def eval_H(ell: int, z: Any) -> Any:  # noqa: N802
    """Return H_l(z) = (1 - z^l)/(1 - 2z^l - z^(l+1)); works elementwise on arrays.

    Raises:
        PoleError: If the denominator vanishes

    """
    zl = np.power(z, ell)
    return (1 - zl) / _guarded(1 - 2 * zl - zl * z)


# ---------------------------------------------------------------------------
# Trigonometric minorants
# ---------------------------------------------------------------------------


def eval_f(ell: int, rho: float, theta: Any) -> Any:
    """Return f_{l,rho}(theta), the cleared difference behind the H maximum."""
    c1, cl, cl1 = np.cos(theta), np.cos(ell * theta), np.cos((ell + 1) * theta)
    return (
        2 * rho**ell * (1 - 2 * rho ** (2 * ell)) * (1 - cl)
        + 2 * rho ** (ell + 1) * (1 - cl1)
        + rho ** (2 * ell + 1) * (4 * c1 + 4 * cl1 - 4 * cl - 4)
        + rho ** (3 * ell + 1) * (-8 * c1 - 2 * cl1 + 8 * cl + 2)
        + rho ** (3 * ell + 2) * (2 * cl - 2)
        + rho ** (4 * ell + 1) * (4 * c1 - 4)
    )


def eval_g(ell: int, rho: float, theta: Any) -> Any:
    """Return g_{l,rho}(theta) <= f_{l,rho}(theta) / rho^l."""
    c1, cl, cl1 = np.cos(theta), np.cos(ell * theta), np.cos((ell + 1) * theta)
    return (
        1
        - cl
        + 2 * rho * (1 - cl1)
        + rho ** (ell + 1) * (4 * c1 + 4 * cl1 - 4 * cl - 4)
        + rho ** (2 * ell + 1) * (-8 * c1 - 2 * cl1 + 8 * cl + 2)
        + rho ** (2 * ell + 2) * (2 * cl - 2)
        + rho ** (3 * ell + 1) * (4 * c1 - 4)
    )


def eval_g_prime(ell: int, rho: float, theta: Any) -> Any:
    """Return the closed-form theta-derivative of g_{l,rho}."""
    s1, sl, sl1 = np.sin(theta), np.sin(ell * theta), np.sin((ell + 1) * theta)
    return (
        ell * sl
        + 2 * rho * (ell + 1) * sl1
        + rho ** (ell + 1) * (-4 * s1 - 4 * (ell + 1) * sl1 + 4 * ell * sl)
        + rho ** (2 * ell + 1) * (8 * s1 + 2 * (ell + 1) * sl1 - 8 * ell * sl)
        + rho ** (2 * ell + 2) * (-2 * ell * sl)
        + rho ** (3 * ell + 1) * (-4 * s1)
    )


def eval_h(ell: int, rho: float, theta: Any) -> Any:
    """Return h_{l,rho}(theta) = 1 - cos(l theta) + 2 rho (1 - cos((l+1) theta)) - 18 rho^(l+1)."""
    return (
        1
        - np.cos(ell * theta)
        + 2 * rho * (1 - np.cos((ell + 1) * theta))
        - 18 * rho ** (ell + 1)
    )


_EVEN_EVALUATORS = {
    FUNC_F: eval_f,
    FUNC_SMALL_G: eval_g,
    FUNC_SMALL_H: eval_h,
    FUNC_G_PRIME: eval_g_prime,
}


# ---------------------------------------------------------------------------
# Scans
# ---------------------------------------------------------------------------


def _symmetric_grid(samples: int) -> FloatArray:
    """Return an odd-sized uniform grid of [-pi, pi] whose middle point is exactly 0."""
    count = samples if samples % 2 else samples + 1
    theta = np.pi * np.linspace(-1.0, 1.0, count)
    theta[count // 2] = 0.0
    return theta


def _profile(func_id: str, index: int, rho: float, theta: FloatArray) -> FloatArray:
    if func_id in MODULUS_FUNCS:
        evaluate = eval_G if func_id == FUNC_G else eval_H
        z = rho * np.exp(1j * theta)
        return np.abs(evaluate(index, z)) / float(np.real(evaluate(index, rho)))
    if func_id in _EVEN_EVALUATORS:
        return np.asarray(_EVEN_EVALUATORS[func_id](index, rho, theta), dtype=np.float64)
    raise DomainError(f"unknown circle function {func_id!r}")


def _extreme(theta: FloatArray, values: FloatArray, target: float) -> float:
    """Return the theta of smallest modulus among samples tied with target."""
    tied = np.abs(values - target) <= TIE_TOLERANCE
    candidates = theta[tied]
    return float(candidates[np.argmin(np.abs(candidates))])


def max_modulus_on_circle(
    func_id: str, index: int, rho: float, samples: int = DEFAULT_SAMPLES
) -> CircleScan:
    """Scan a function on a uniform theta grid and refine around its extrema.

    G and H are scanned on [-pi, pi], the even families on [0, pi]. Each
    extremum is resampled on a window of two grid steps at 100x density.

    Raises:
        DomainError: If rho is outside (0, 1/4] or func_id is unknown

    """
    _check_rho(rho)
    theta = _symmetric_grid(samples)
    if func_id not in MODULUS_FUNCS:
        theta = theta[theta >= 0]
    values = _profile(func_id, index, rho, theta)
    step = float(theta[1] - theta[0])
    low, high = float(theta[0]), float(theta[-1])

    best = {"max": float(values.max()), "min": float(values.min())}
    where = {
        "max": _extreme(theta, values, best["max"]),
        "min": _extreme(theta, values, best["min"]),
    }
    for kind in ("max", "min"):
        centre = where[kind]
        local = np.linspace(
            max(low, centre - 2 * step),
            min(high, centre + 2 * step),
            4 * CIRCLE_REFINE_FACTOR + 1,
        )
        local_values = _profile(func_id, index, rho, local)
        candidate = float(local_values.max() if kind == "max" else local_values.min())
        improves = candidate > best[kind] if kind == "max" else candidate < best[kind]
        if improves:
            best[kind] = candidate
            where[kind] = _extreme(local, local_values, candidate)
    _LOGGER.debug(
        "Scanned %s_%s at rho=%s: max %.12g at %.3g", func_id, index, rho, best["max"], where["max"]
    )
    return CircleScan(
        func_id=func_id,
        index=index,
        rho=rho,
        samples=len(theta),
        theta=theta,
        values=values,
        min_value=best["min"],
        argmin=where["min"],
        max_value=best["max"],
        argmax=where["max"],
    )


def real_point_maximum_check(
    func_id: str, index: int, rho: float, samples: int = DEFAULT_SAMPLES
) -> CheckOutcome:
    """Check that the maximum modulus sits at theta = 0 and equals the real-point value."""
    scan = max_modulus_on_circle(func_id, index, rho, samples)
    step = float(scan.theta[1] - scan.theta[0])
    failures = []
    if abs(scan.argmax) > step:
        failures.append({"argmax": scan.argmax})
    if abs(scan.max_value - 1) > CIRCLE_MAX_TOLERANCE:
        failures.append({"max_ratio": scan.max_value})
    return CheckOutcome.from_points(
        failures,
        summary={
            "func": func_id,
            "index": index,
            "rho": rho,
            "argmax": scan.argmax,
            "max_ratio": scan.max_value,
            "min_ratio": scan.min_value,
        },
    )


def evenness_check(
    func_id: str, index: int, rho: float, samples: int = 2001
) -> CheckOutcome:
    """Check values at theta and -theta agree to 1e-12."""
    _check_rho(rho)
    theta = _symmetric_grid(samples)
    theta = theta[theta > 0]
    gap = np.abs(
        _profile(func_id, index, rho, theta) - _profile(func_id, index, rho, -theta)
    )
    worst = int(np.argmax(gap))
    failures = (
        [{"theta": float(theta[worst]), "gap": float(gap[worst])}]
        if gap[worst] > IDENTITY_TOLERANCE
        else []
    )
    return CheckOutcome.from_points(failures, summary={"func": func_id, "index": index})


# ---------------------------------------------------------------------------
# Identities
# ---------------------------------------------------------------------------


def G_identity_check(k: int, rho: float, theta_grid: FloatArray) -> bool:  # noqa: N802
    """Return True if the cleared G-difference equals 2rho^k(1-2rho^2k)(1-cos k theta) >= 0."""
    _check_rho(rho, allow_zero=True)
    zk = (rho * np.exp(1j * theta_grid)) ** k
    rk = rho**k
    cleared = (1 - rk) ** 2 * np.abs(1 - 2 * zk) ** 2 - (1 - 2 * rk) ** 2 * np.abs(1 - zk) ** 2
    factored = 2 * rk * (1 - 2 * rho ** (2 * k)) * (1 - np.cos(k * theta_grid))
    return bool(
        np.all(np.abs(cleared - factored) <= IDENTITY_TOLERANCE)
        and np.all(factored >= 0)
    )


def H_identity_check(ell: int, rho: float, theta_grid: FloatArray) -> bool:  # noqa: N802
    """Return True if the cleared H-difference equals f_{l,rho} on the grid."""
    _check_rho(rho, allow_zero=True)
    z = rho * np.exp(1j * theta_grid)
    zl = z**ell
    rl = rho**ell
    numerator = np.abs(1 - zl) ** 2
    denominator = np.abs(1 - 2 * zl - zl * z) ** 2
    cleared = (1 - rl) ** 2 * denominator - (1 - 2 * rl - rl * rho) ** 2 * numerator
    return bool(
        np.all(np.abs(cleared - eval_f(ell, rho, theta_grid)) <= IDENTITY_TOLERANCE)
    )


# ---------------------------------------------------------------------------
# Positivity
# ---------------------------------------------------------------------------


def derivative_bracket(ell: int, rho: float = CIRCLE_MAX_RHO) -> float:
    """Return the final positive bracket of the g' minoration.

    For l = 1 it is 8/sqrt(2) - 6 rho^3; for l >= 2 the coefficient of t in
    the last minorant of g'_{l,rho}(theta), t = l theta.
    """
    if ell < 1:
        raise DomainError(f"ell must be at least 1, got {ell}")
    if ell == 1:
        return 8 / math.sqrt(2) - 6 * rho**3
    return (
        5 / 6 * ell
        - rho ** (ell + 1) * (8 + 16 / 6 * ell)
        - rho ** (2 * ell + 1) * (5 / 4 + 27 / 4 * ell)
        - rho ** (2 * ell + 2) * (2 * ell)
        - rho ** (3 * ell + 1) * 2
    )


def derivative_positivity(ell: int, rho: float, samples: int = 1000) -> CheckOutcome:
    """Check g'_{l,rho} > 0 on (0, pi/(4l)] by sampling, and the brackets at rho and 1/4."""
    _check_rho(rho)
    theta = np.linspace(0, math.pi / (4 * ell), samples + 1)[1:]
    values = eval_g_prime(ell, rho, theta)
    failures: list[dict[str, Any]] = [
        {"theta": float(theta[i]), "g_prime": float(values[i])}
        for i in np.flatnonzero(values <= 0)
    ]
    worst_case = derivative_bracket(ell)
    at_rho = derivative_bracket(ell, rho)
    if worst_case <= 0 or at_rho <= 0:
        failures.append({"bracket": worst_case, "bracket_at_rho": at_rho})
    if ell == 1:
        # sin(theta) {1 + 8 rho cos - 16 rho^2 cos + 8 rho^3 cos - 6 rho^4}
        cos = np.cos(theta)
        brace = 1 + 8 * rho * cos - 16 * rho**2 * cos + 8 * rho**3 * cos - 6 * rho**4
        if np.any(brace <= 0):
            failures.append({"brace_min": float(brace.min())})
    return CheckOutcome.from_points(
        failures,
        summary={
            "ell": ell,
            "rho": rho,
            "min_g_prime": float(values.min()),
            "bracket": worst_case,
        },
    )


def g_prime_finite_difference_check(
    ell: int, rho: float, samples: int = 200, step: float = FINITE_DIFFERENCE_STEP
) -> CheckOutcome:
    """Check the closed-form g' against central differences (relative 1e-6)."""
    _check_rho(rho)
    theta = np.linspace(0.05, math.pi - 0.05, samples)
    exact = eval_g_prime(ell, rho, theta)
    numeric = (eval_g(ell, rho, theta + step) - eval_g(ell, rho, theta - step)) / (2 * step)
    error = np.abs(numeric - exact) / np.maximum(1.0, np.abs(exact))
    bad = np.flatnonzero(error > FINITE_DIFFERENCE_STEP)
    failures = [{"theta": float(theta[i]), "error": float(error[i])} for i in bad]
    return CheckOutcome.from_points(
        failures, summary={"ell": ell, "rho": rho, "max_error": float(error.max())}
    )


def certificate_values() -> dict[str, float]:
    """Return the numeric certificates of the positivity proofs at rho = 1/4."""
    quarter = CIRCLE_MAX_RHO
    root_half = 1 / math.sqrt(2)
    return {
        "g1 on [pi/4, pi]": (1 - root_half) * (1 - 6 * quarter**4),
        "h on [pi/(4l), 7pi/(4l)]": 1 - root_half - 18 * quarter**3,
        "h2 on [7pi/8, pi]": (1 - math.cos(5 * math.pi / 8)) - 9 * quarter**2,
        "remainder absorption": 1 - 10 * quarter**2 - 2 * quarter**3 - 4 * quarter**4,
        "g1 derivative bracket": derivative_bracket(1),
        "g derivative bracket, l = 2": derivative_bracket(2),
    }


def _matches_printed(value: float, printed: str) -> bool:
    """Return True if value, truncated to the printed decimals, equals printed."""
    decimals = len(printed.partition(".")[2])
    return float(printed) <= value < float(printed) + 10.0**-decimals


def _positive_on(
    func: Any, ell: int, rho: float, low: float, high: float, samples: int
) -> dict[str, Any] | None:
    theta = np.linspace(low, high, samples)
    values = func(ell, rho, theta)
    worst = int(np.argmin(values))
    if values[worst] > 0:
        return None
    return {"ell": ell, "theta": float(theta[worst]), "value": float(values[worst])}


def interval_positivity_suite(
    rho: float, ell_max: int = 20, samples: int = 2000
) -> CheckOutcome:
    """Check the printed certificates and sample the positivity of g and h by interval.

    g_1 on [pi/4, pi]; h_l on [pi/(4l), 7pi/(4l)] for l >= 2; h_2 on [7pi/8, pi];
    h_l on [7pi/(4l), pi] for l >= 3; and the ordering h <= g <= f/rho^l
    wherever h is positive.
    """
    _check_rho(rho)
    failures: list[dict[str, Any]] = []
    values = certificate_values()
    for label, printed in CERTIFICATES:
        if not _matches_printed(values[label], printed):
            failures.append({"certificate": label, "value": values[label], "printed": printed})
    pieces = [_positive_on(eval_g, 1, rho, math.pi / 4, math.pi, samples)]
    pieces.append(_positive_on(eval_h, 2, rho, 7 * math.pi / 8, math.pi, samples))
    for ell in range(2, ell_max + 1):
        pieces.append(
            _positive_on(eval_h, ell, rho, math.pi / (4 * ell), 7 * math.pi / (4 * ell), samples)
        )
        if ell >= 3:
            pieces.append(_positive_on(eval_h, ell, rho, 7 * math.pi / (4 * ell), math.pi, samples))
        theta = np.linspace(math.pi / (4 * ell), math.pi, samples)
        h = eval_h(ell, rho, theta)
        g = eval_g(ell, rho, theta)
        f = eval_f(ell, rho, theta)
        broken = (h > 0) & ((g < h - IDENTITY_TOLERANCE) | (f < rho**ell * g - IDENTITY_TOLERANCE))
        if np.any(broken):
            failures.append({"ell": ell, "chain_theta": float(theta[np.argmax(broken)])})
    failures.extend(piece for piece in pieces if piece is not None)
    return CheckOutcome.from_points(
        failures, summary={"rho": rho, "ell_max": ell_max, "certificates": values}
    )


def assertion_11_7_check(
    ell_range: range, rho: float = CIRCLE_MAX_RHO, samples: int = DEFAULT_SAMPLES
) -> CheckOutcome:
    """Check that no theta in [7pi/(4l), pi] makes both sine-square terms small.

    The decisive inequality 3(1 + sqrt 2)/2^l < 7pi/(8l) is recomputed per l,
    and the interval is sampled for a theta with sin^2(l theta/2) <= 9 rho^(l+1)
    and sin^2((l+1) theta/2) <= (9/2) rho^l.

    Raises:
        DomainError: If the range contains l < 3

    """
    if min(ell_range) < 3:
        raise DomainError("the sine-square assertion needs l >= 3")
    _check_rho(rho)
    failures: list[dict[str, Any]] = []
    margins: dict[int, float] = {}
    for ell in ell_range:
        left = 3 * (1 + math.sqrt(2)) / 2**ell
        right = 7 * math.pi / (8 * ell)
        margins[ell] = right - left
        if left >= right:
            failures.append({"ell": ell, "left": left, "right": right})
        theta = np.linspace(7 * math.pi / (4 * ell), math.pi, samples)
        both = (np.sin(ell * theta / 2) ** 2 <= 9 * rho ** (ell + 1)) & (
            np.sin((ell + 1) * theta / 2) ** 2 <= 4.5 * rho**ell
        )
        if np.any(both):
            failures.append({"ell": ell, "theta": float(theta[np.argmax(both)])})
    return CheckOutcome.from_points(failures, summary={"margins": margins})


def sine_bounds_check(samples: int = 10_001) -> CheckOutcome:
    """Check |g|/2 <= |sin g| <= |g| on [-pi/2, pi/2] and sin p >= p - p^3/6 on [0, pi]."""
    gamma = np.linspace(-math.pi / 2, math.pi / 2, samples)
    sine = np.abs(np.sin(gamma))
    failures: list[dict[str, Any]] = []
    bad = (np.abs(gamma) / 2 > sine + SINE_TOLERANCE) | (sine > np.abs(gamma) + SINE_TOLERANCE)
    if np.any(bad):
        failures.append({"gamma": float(gamma[np.argmax(bad)])})
    phi = np.linspace(0, math.pi, samples)
    cubic = np.sin(phi) < phi - phi**3 / 6 - SINE_TOLERANCE
    if np.any(cubic):
        failures.append({"phi": float(phi[np.argmax(cubic)])})
    return CheckOutcome.from_points(failures, summary={"samples": samples})


def emit_plot_csv(scan: CircleScan, path: str | Path) -> Path:
    """Write the scan as ``theta,value`` rows at full grid resolution.

    Raises:
        OSError: If the file cannot be written

    """
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    with target.open("w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(["theta", "value"])
        writer.writerows(
            (repr(float(t)), repr(float(v))) for t, v in zip(scan.theta, scan.values, strict=True)
        )
    _LOGGER.info("Wrote %d plot rows to %s", len(scan.theta), target)
    return target
