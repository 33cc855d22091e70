"""Tests for the maximum-modulus analysis on small circles."""

from __future__ import annotations

import csv
import math
from typing import TYPE_CHECKING

import numpy as np
import pytest

from hyperbounds.circle import (
    CERTIFICATES,
    FUNC_F,
    FUNC_G,
    FUNC_G_PRIME,
    FUNC_H,
    FUNC_SMALL_G,
    FUNC_SMALL_H,
    G_identity_check,
    H_identity_check,
    assertion_11_7_check,
    certificate_values,
    derivative_bracket,
    derivative_positivity,
    emit_plot_csv,
    eval_G,
    eval_H,
    eval_h,
    evenness_check,
    g_prime_finite_difference_check,
    interval_positivity_suite,
    max_modulus_on_circle,
    real_point_maximum_check,
    sine_bounds_check,
)
from hyperbounds.errors import DomainError, PoleError

from .conftest import CIRCLE_CERTIFICATES

if TYPE_CHECKING:
    from pathlib import Path

GRID = np.linspace(-math.pi, math.pi, 4097)

# ---------------------------------------------------------------------------
# Building blocks
# ---------------------------------------------------------------------------


def test_eval_g_and_h_at_real_points() -> None:
    """Test G_1 and H_1 at z = 1/4."""
    assert eval_G(1, 0.25) == pytest.approx(1.5)
    assert eval_H(1, 0.25) == pytest.approx(0.75 / 0.4375)


def test_eval_g_pole() -> None:
    """Test that 1 - 2z vanishing at z = 1/2 raises."""
    with pytest.raises(PoleError):
        eval_G(1, 0.5)
    with pytest.raises(PoleError):
        eval_G(2, np.array([0.1, math.sqrt(0.5)]))


def test_eval_h_value() -> None:
    """Test h_{2,1/4}(pi) = 1 + 4 rho - 18 rho^3."""
    assert eval_h(2, 0.25, math.pi) == pytest.approx(0.71875)


# ---------------------------------------------------------------------------
# Scans
# ---------------------------------------------------------------------------


def test_scan_of_g1() -> None:
    """Test that |G_1| peaks at theta = 0 and bottoms out at theta = +-pi."""
    scan = max_modulus_on_circle(FUNC_G, 1, 0.25, samples=2001)
    assert scan.samples == 2001
    assert abs(scan.argmax) < 1e-12
    assert scan.max_value == pytest.approx(1.0, abs=1e-12)
    assert abs(scan.argmin) == pytest.approx(math.pi)
    assert scan.min_value == pytest.approx((1.25 / 1.5) / 1.5)


def test_scan_tie_prefers_smallest_theta() -> None:
    """Test that G_2 attains its maximum at 0 and pi and 0 is reported."""
    scan = max_modulus_on_circle(FUNC_G, 2, 0.25, samples=2000)
    assert scan.samples == 2001
    assert abs(scan.argmax) < 1e-12


def test_scan_of_even_family_uses_half_circle() -> None:
    """Test that f, g, h and g' are scanned on [0, pi]."""
    scan = max_modulus_on_circle(FUNC_SMALL_H, 2, 0.25, samples=2001)
    assert scan.samples == 1001
    assert scan.theta[0] == 0.0
    assert scan.theta[-1] == pytest.approx(math.pi)


def test_scan_rejects_bad_input() -> None:
    """Test rho outside (0, 1/4] and unknown functions."""
    with pytest.raises(DomainError):
        max_modulus_on_circle(FUNC_G, 1, 0.3, samples=101)
    with pytest.raises(DomainError):
        max_modulus_on_circle(FUNC_G, 1, 0.0, samples=101)
    with pytest.raises(DomainError, match="unknown"):
        max_modulus_on_circle("Q", 1, 0.25, samples=101)


@pytest.mark.parametrize("func_id", [FUNC_G, FUNC_H])
@pytest.mark.parametrize("index", [1, 2, 5, 10])
def test_real_point_maximum(func_id: str, index: int) -> None:
    """Test that the maximum modulus sits at the real point."""
    outcome = real_point_maximum_check(func_id, index, 0.25, samples=4001)
    assert outcome.passed
    assert outcome.witness["max_ratio"] == pytest.approx(1.0, abs=1e-10)


@pytest.mark.parametrize("func_id", [FUNC_G, FUNC_H, FUNC_F, FUNC_SMALL_G, FUNC_SMALL_H])
def test_evenness(func_id: str) -> None:
    """Test symmetry under theta -> -theta."""
    assert evenness_check(func_id, 3, 0.2).passed


def test_derivative_is_odd() -> None:
    """Test that g' is not even."""
    assert not evenness_check(FUNC_G_PRIME, 2, 0.25).passed


# ---------------------------------------------------------------------------
# Identities and positivity
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("index", [1, 2, 5, 10])
@pytest.mark.parametrize("rho", [0.05, 0.25])
def test_cleared_difference_identities(index: int, rho: float) -> None:
    """Test the factored G-difference and the H-difference against f."""
    assert G_identity_check(index, rho, GRID)
    assert H_identity_check(index, rho, GRID)


def test_identity_allows_zero_radius() -> None:
    """Test that rho = 0 is accepted by the identities."""
    assert G_identity_check(2, 0.0, GRID)
    with pytest.raises(DomainError):
        H_identity_check(2, 0.3, GRID)


def test_derivative_brackets() -> None:
    """Test the l = 1 and l = 2 brackets at rho = 1/4."""
    assert derivative_bracket(1) == pytest.approx(8 / math.sqrt(2) - 6 / 64)
    assert derivative_bracket(2) == pytest.approx(1.44283, abs=1e-5)
    assert all(derivative_bracket(ell) > 0 for ell in range(1, 21))
    with pytest.raises(DomainError):
        derivative_bracket(0)


@pytest.mark.parametrize("ell", [1, 2, 5, 20])
def test_derivative_positivity(ell: int) -> None:
    """Test g' > 0 on (0, pi/(4l)]."""
    outcome = derivative_positivity(ell, 0.25)
    assert outcome.passed
    assert outcome.witness["min_g_prime"] > 0


@pytest.mark.parametrize("ell", [1, 2, 7])
def test_derivative_closed_form(ell: int) -> None:
    """Test the closed-form g' against central differences."""
    assert g_prime_finite_difference_check(ell, 0.25).passed


def test_certificates_match_printed_values() -> None:
    """Test each certificate against its printed digits."""
    values = certificate_values()
    assert [label for label, _ in CERTIFICATES] == list(values)
    for (label, printed), expected in zip(
        CERTIFICATES, CIRCLE_CERTIFICATES.items(), strict=True
    ):
        assert printed == expected[0]
        assert values[label] == pytest.approx(expected[1], abs=1e-5)


def test_interval_positivity_suite() -> None:
    """Test the interval certificates and sampled positivity."""
    outcome = interval_positivity_suite(0.25, ell_max=8, samples=800)
    assert outcome.passed
    assert set(outcome.witness["certificates"]) == {label for label, _ in CERTIFICATES}


def test_sine_square_assertion() -> None:
    """Test that both sine-square terms are never small together for l >= 3."""
    outcome = assertion_11_7_check(range(3, 12), samples=20001)
    assert outcome.passed
    assert 0.01 < outcome.witness["margins"][3] < 0.012
    with pytest.raises(DomainError):
        assertion_11_7_check(range(2, 5))


def test_sine_bounds() -> None:
    """Test the elementary sine inequalities."""
    assert sine_bounds_check().passed


# ---------------------------------------------------------------------------
# Plot data
# ---------------------------------------------------------------------------


def test_emit_plot_csv(tmp_path: Path) -> None:
    """Test the theta,value CSV at full grid resolution."""
    scan = max_modulus_on_circle(FUNC_H, 2, 0.25, samples=101)
    path = emit_plot_csv(scan, tmp_path / "plots" / "H2_rho0.25.csv")
    with path.open(newline="", encoding="utf-8") as handle:
        rows = list(csv.reader(handle))
    assert rows[0] == ["theta", "value"]
    assert len(rows) == scan.samples + 1
    middle = rows[1 + scan.samples // 2]
    assert float(middle[0]) == 0.0
    assert float(middle[1]) == pytest.approx(1.0)
