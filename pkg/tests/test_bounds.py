"""Tests for the degree-bound pipeline and the majorant estimates."""

from __future__ import annotations

from fractions import Fraction

import mpmath
import pytest

from hyperbounds.bounds import (
    MAJORANT_RADIUS,
    alpha_r,
    b_factor_check,
    binomial_root_check,
    c_hat_inverse_weights,
    c_hat_inverse_weights_check,
    cauchy_bound_check,
    cauchy_instantiation_check,
    dGG_final,
    dK_final,
    degree_bound,
    degree_pipeline_check,
    elementary_symmetric,
    exp_inverse_weight_grid,
    final_minorant,
    find_N_GG,
    find_N_K,
    fujiwara_bound,
    fujiwara_random_check,
    gate_sweep,
    geometric_gap_grid,
    inverse_weight_sigma_check,
    kappa_monotone_check,
    kappa_n,
    lemma10_tail_check,
    mac_laurin_check,
    mu_weight,
    pole_radii,
    pole_radii_check,
    quantifier_summary,
    random_sigma_chain_check,
    refined_vs_coarse_check,
    section9_suite,
    sigma_p,
    sigma_root_chain_check,
    theorem13_gate,
    theorem14_gate,
)
from hyperbounds.const import GATE_R_RANGE
from hyperbounds.errors import DomainError
from hyperbounds.generating import eval_diagonal

from .conftest import SAMPLE_R

# ---------------------------------------------------------------------------
# Weights and symmetric functions
# ---------------------------------------------------------------------------


def test_mu_weight_closed_form() -> None:
    """Test mu(a) for geometric weights."""
    assert mu_weight(1, SAMPLE_R) == 1
    assert mu_weight(3, SAMPLE_R) == 102
    with pytest.raises(DomainError):
        mu_weight(3, 1)


def test_elementary_symmetric() -> None:
    """Test sigma_0..sigma_3 of (1, 2, 3)."""
    assert elementary_symmetric([1, 2, 3]) == [1, 6, 11, 6]
    assert sigma_p([1, 2, 3], 2) == 11
    assert sigma_p([1, 2, 3], 5) == 0
    with pytest.raises(DomainError):
        sigma_p([1, 2], -1)
    with pytest.raises(DomainError):
        elementary_symmetric([1, 0])


def test_symmetric_chains() -> None:
    """Test both root chains on a fixed vector."""
    values = [Fraction(1, 2), 2, 3, 7]
    assert mac_laurin_check(values)
    assert sigma_root_chain_check(values)


def test_random_and_binomial_chains() -> None:
    """Test the seeded random chains and the binomial root inequality."""
    assert random_sigma_chain_check(trials=40, max_n=6, seed=3).passed
    assert binomial_root_check(20).passed


def test_inverse_weight_sigma() -> None:
    """Test sigma_1(1/a) <= r/(r-1) and the position of the maximum."""
    outcome = inverse_weight_sigma_check(5, SAMPLE_R)
    assert outcome.passed
    assert outcome.witness["sigma_1"] < Fraction(SAMPLE_R, SAMPLE_R - 1)


# ---------------------------------------------------------------------------
# Root bounds
# ---------------------------------------------------------------------------


def test_kappa_values() -> None:
    """Test kappa_1 = 1 and kappa_2 = golden ratio."""
    assert kappa_n(1) == 1
    assert abs(kappa_n(2) - (1 + mpmath.sqrt(5)) / 2) < 1e-11
    assert kappa_monotone_check(12).passed
    with pytest.raises(DomainError):
        kappa_n(0)


def test_fujiwara_bound() -> None:
    """Test the root bound on z^2 - 4 and on random polynomials."""
    bound = fujiwara_bound([1, 0, -4])
    assert 2 <= bound < 3.3
    assert fujiwara_random_check(trials=20, seed=1).passed
    with pytest.raises(DomainError):
        fujiwara_bound([0, 1])


# ---------------------------------------------------------------------------
# Majorant at the inverse weights
# ---------------------------------------------------------------------------


def test_c_hat_inverse_weights_is_diagonal() -> None:
    """Test the product formula against the diagonal majorant at 1/r."""
    value = c_hat_inverse_weights(4, SAMPLE_R)
    assert value == eval_diagonal(4, Fraction(1, SAMPLE_R), majorant=True)
    assert value <= (1 + Fraction(3, SAMPLE_R)) ** 3
    approx = c_hat_inverse_weights(4, SAMPLE_R, exact=False)
    assert abs(approx - mpmath.mpf(value.numerator) / value.denominator) < 1e-12
    with pytest.raises(DomainError):
        c_hat_inverse_weights(4, 3)


@pytest.mark.parametrize(("n", "r"), [(3, 9), (6, 9), (5, 20)])
def test_c_hat_inverse_weights_chains(n: int, r: int) -> None:
    """Test both bounding chains of the product."""
    assert c_hat_inverse_weights_check(n, r).passed


def test_alpha_r() -> None:
    """Test 1 < alpha(r) <= e^(2/(r-1))."""
    alpha = alpha_r(SAMPLE_R)
    assert 1 < alpha <= mpmath.exp(mpmath.mpf(2) / (SAMPLE_R - 1))


def test_inverse_weight_grids() -> None:
    """Test the two numeric grids and that they fail where expected."""
    assert exp_inverse_weight_grid().passed
    assert not exp_inverse_weight_grid(range(3, 5)).passed
    assert geometric_gap_grid().passed
    assert not geometric_gap_grid(range(5, 6), range(2, 3)).passed


# ---------------------------------------------------------------------------
# Degree bounds and gates
# ---------------------------------------------------------------------------


def test_degree_bound_values() -> None:
    """Test the refined and coarse bounds at (2, 9)."""
    bound = degree_bound(2, SAMPLE_R)
    assert bound.refined == Fraction(24057, 16)
    assert bound.coarse == 14400
    with pytest.raises(DomainError):
        degree_bound(0, SAMPLE_R)


@pytest.mark.parametrize(("n", "r"), [(2, 9), (3, 9), (7, 12), (10, 20)])
def test_degree_pipeline(n: int, r: int) -> None:
    """Test the exact re-derivation of the refined bound."""
    assert degree_pipeline_check(n, r).passed


def test_refined_below_coarse() -> None:
    """Test refined <= coarse on a smaller grid."""
    assert refined_vs_coarse_check(range(2, 21), range(9, 13)).passed


def test_theorem13_gate_thresholds() -> None:
    """Test the per-r thresholds of 2^(5n) >= refined(n, r)."""
    low = theorem13_gate(9)
    assert low.n_min == 4
    assert low.factor_at(4) <= 1 < low.factor_at(3)
    assert theorem13_gate(20).n_min == 18
    assert low.as_dict()["factor_before_n_min"] > 1


def test_theorem13_quantifier_summary() -> None:
    """Test that n >= 20 covers every r while n >= 10 does not."""
    summary = quantifier_summary(gate_sweep(theorem13_gate, GATE_R_RANGE))
    assert summary["worst"] == 18
    assert not summary["holds_from_stated"]
    assert summary["holds_from_checked"]


def test_theorem13_gate_unsettled_below_cap() -> None:
    """Test that a gate failing at the cap reports no threshold."""
    result = theorem13_gate(20, cap=10)
    assert result.n_min is None
    assert "factor_at_n_min" not in result.as_dict()


def test_theorem14_gate_settles() -> None:
    """Test 4^(5n) >= refined(2n, r) across the r range."""
    summary = quantifier_summary(gate_sweep(theorem14_gate, GATE_R_RANGE))
    assert summary["worst"] is not None


def test_green_griffiths_threshold() -> None:
    """Test that the final Green-Griffiths gate settles at n = 26."""
    assert find_N_GG() == 26
    assert dGG_final(26).gate_holds
    assert not dGG_final(25).gate_holds
    with pytest.raises(DomainError):
        dGG_final(2)


def test_kobayashi_threshold() -> None:
    """Test that the final Kobayashi gate settles between 30 and 50."""
    threshold = find_N_K()
    assert 30 < threshold <= 50
    assert dK_final(threshold).gate_holds
    assert all(dK_final(m).gate_holds for m in range(threshold, 2 * threshold + 1))


def test_b_factor() -> None:
    """Test (2n/(2n-1))^(n+1) <= 2 from n = 4 and its failure at n = 3."""
    assert b_factor_check().passed
    assert not b_factor_check([3]).passed


# ---------------------------------------------------------------------------
# Radii and Cauchy bounds
# ---------------------------------------------------------------------------


def test_pole_radii() -> None:
    """Test R = 1/2 and R̂ = sqrt(2) - 1."""
    radius, radius_hat = pole_radii(6)
    assert abs(radius - 0.5) < 1e-9
    assert abs(radius_hat - MAJORANT_RADIUS) < 1e-9
    assert pole_radii_check(6).passed
    with pytest.raises(DomainError):
        pole_radii(2)


def test_cauchy_bound() -> None:
    """Test the Cauchy estimate of the diagonal majorant."""
    assert cauchy_bound_check(4, 0.25, 20).passed
    with pytest.raises(DomainError):
        cauchy_bound_check(4, 0.5, 20)


def test_cauchy_instantiation() -> None:
    """Test Ĉ(1/sqrt(n)) <= e^(12 + sqrt(n)) at n = 16."""
    outcome = cauchy_instantiation_check(16, h_max=10)
    assert outcome.passed
    assert outcome.witness["log_C_hat"] < outcome.witness["log_cap"]
    with pytest.raises(DomainError):
        cauchy_instantiation_check(4)


# ---------------------------------------------------------------------------
# Evaluation estimates
# ---------------------------------------------------------------------------


def test_section9_suite_passes() -> None:
    """Test the three evaluation estimates at n = 20, r = 10."""
    outcome = section9_suite(20, 10)
    assert outcome.passed
    assert outcome.witness["ratio"] >= 1


@pytest.mark.parametrize(("n", "r"), [(20, 9), (15, 10)])
def test_section9_suite_domain(n: int, r: int) -> None:
    """Test the r >= 10 and log log n >= 1 requirements."""
    with pytest.raises(DomainError):
        section9_suite(n, r)


def test_lemma10_tail_default_scale() -> None:
    """Test the remainder bound with r = floor(sqrt(n) a) and c = log a."""
    outcome = lemma10_tail_check(4, 5.0)
    assert outcome.passed
    assert outcome.witness["r"] == 10
    assert outcome.witness["tau"] == 1
    assert outcome.witness["tail"] <= outcome.witness["full_tail"]


def test_lemma10_tail_explicit_parameters() -> None:
    """Test the remainder bound with r and c given."""
    outcome = lemma10_tail_check(3, 5.0, r=SAMPLE_R, c=1.0)
    assert outcome.passed
    assert outcome.witness["c"] == 1.0


def test_final_minorant_sign() -> None:
    """Test that the closing bound is negative at 10^3 and positive at 10^100."""
    assert final_minorant(10**3) < 0
    assert final_minorant(10**100) > 0
    with pytest.raises(DomainError):
        final_minorant(10)
