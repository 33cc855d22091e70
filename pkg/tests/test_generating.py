"""Tests for the generating functions C, Ĉ and A."""

from __future__ import annotations

from fractions import Fraction
import math
from unittest.mock import patch

import mpmath
import numpy as np
import pytest

from hyperbounds.errors import DomainError, PoleError
from hyperbounds.generating import (
    E_series,
    F_coeff,
    F_hat_coeff,
    P_series,
    WeightVector,
    a_constructions_check,
    build_A,
    build_A_from_i_indices,
    build_C,
    build_C_alternative,
    build_C_hat,
    coefficient_table_size,
    coordinate_change_check,
    diagonal_C_formula,
    diagonal_C_hat_formula,
    diagonal_forms_agree,
    diagonal_positivity_check,
    eval_C_t,
    eval_C_w,
    eval_diagonal,
    grouping_check,
    i_indices,
    in_staircase,
    majorant_domination_check,
    reduced_diagonal,
    series_partial_sum,
    staircase,
    staircase_box,
    w_from_t,
)
from hyperbounds.series import TruncationBox, UniSeries, diagonal, uni_evaluate

from .conftest import N2_C_COEFFS, SAMPLE_R

# ---------------------------------------------------------------------------
# Staircase domain
# ---------------------------------------------------------------------------


def test_weight_vector() -> None:
    """Test geometric weights and their inverses."""
    weights = WeightVector(3, SAMPLE_R)
    assert weights.values == (81, 9, 1)
    assert weights.inverse_values == (Fraction(1, 81), Fraction(1, 9), 1)


def test_i_indices_sum_to_n_squared() -> None:
    """Test the derived i-indices on every staircase index of n = 4."""
    for ks in staircase(4):
        indices = i_indices(4, ks)
        assert sum(indices) == 16
        assert min(indices) >= 0


def test_staircase_counts() -> None:
    """Test the staircase sizes for n = 2 and n = 3 and the total filter."""
    assert list(staircase(2)) == [(0,), (1,), (2,)]
    assert len(list(staircase(3))) == 22
    assert all(sum(ks) <= 2 for ks in staircase(3, 2))
    assert len(list(staircase(3, 2))) == 6


def test_in_staircase() -> None:
    """Test staircase membership."""
    assert in_staircase(3, (3, 6))
    assert not in_staircase(3, (4, 0))
    assert not in_staircase(3, (0, 4))
    assert not in_staircase(3, (1,))
    with pytest.raises(DomainError):
        i_indices(3, (1,))


def test_staircase_box_caps() -> None:
    """Test the covering box and its size."""
    assert staircase_box(2).caps == (2,)
    assert staircase_box(4).caps == (4, 8, 12)
    assert staircase_box(4, 5) == TruncationBox((4, 5, 5), 5)
    assert coefficient_table_size(3) == 28


# ---------------------------------------------------------------------------
# Univariate factors and diagonals
# ---------------------------------------------------------------------------


def test_e_series() -> None:
    """Test E_0 = 1 and E_k = 2^(k-1)."""
    assert E_series(4).coeffs == (1, 1, 2, 4, 8)
    with pytest.raises(DomainError):
        E_series(-1)


@pytest.mark.parametrize(
    ("k", "ell", "expected"), [(0, 0, 1), (1, 0, 0), (0, 1, 1), (1, 1, 1), (0, 2, 2), (1, 2, 3)]
)
def test_f_hat_coefficients(k: int, ell: int, expected: int) -> None:
    """Test hand expansions of (1-y)/(1-2y-xy)."""
    assert F_hat_coeff(k, ell) == expected
    assert F_coeff(k, ell) == (-1) ** k * expected


def test_f_hat_beyond_diagonal_vanishes() -> None:
    """Test that x^k y^l with k > l never appears."""
    assert F_hat_coeff(3, 2) == 0
    assert F_hat_coeff(-1, 2) == 0


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_diagonal_forms_agree(n: int) -> None:
    """Test the E-times-P form against the direct product."""
    assert diagonal_forms_agree(n, 12)


def test_p_series_small_n() -> None:
    """Test P^2 = 1/(1-x)."""
    assert P_series(3, 5).coeffs == (1, 1, 1, 1, 1, 1)
    with pytest.raises(DomainError):
        P_series(1, 5)


def test_diagonal_positivity_n4() -> None:
    """Test P_h, E*P and C_h by hand for n = 4: C_h >= 2^h for h <= 2."""
    assert P_series(4, 2).coeffs == (1, 2, 4)
    assert reduced_diagonal(4, 2).coeffs == (1, 3, 8)
    assert diagonal_C_formula(4, 2).coeffs == (1, 3, 9)
    outcome = diagonal_positivity_check(4)
    assert outcome.passed
    assert outcome.witness["h_max"] == 2
    assert outcome.witness["C"] == [1, 3, 9]


@pytest.mark.parametrize("n", [4, 9, 16, 25])
def test_diagonal_positivity_at_squares(n: int) -> None:
    """Test P_h >= 1 and C_h >= 2^h up to h = sqrt(n)."""
    outcome = diagonal_positivity_check(n)
    assert outcome.passed
    assert len(outcome.witness["P"]) == math.isqrt(n) + 1
    assert all(value >= 1 for value in outcome.witness["P"])
    assert all(value >= 2**h for h, value in enumerate(outcome.witness["E*P"]))


def test_diagonal_positivity_reports_shortfall() -> None:
    """Test the witness when a coefficient falls below its floor."""
    with patch(
        "hyperbounds.generating.P_series", return_value=UniSeries(2, (1, 0, 4))
    ):
        outcome = diagonal_positivity_check(4)
    assert not outcome.passed
    assert outcome.witness["first_failure"] == {"h": 1, "series": "P", "coefficient": 0}
    with pytest.raises(DomainError):
        diagonal_positivity_check(1)


def test_diagonal_of_c_matches_formula() -> None:
    """Test the diagonal of the multivariate C against the univariate product."""
    box = TruncationBox((6, 6), total=6)
    assert diagonal(build_C(3, box)) == diagonal_C_formula(3, 6)
    assert diagonal(build_C_hat(3, box)) == diagonal_C_hat_formula(3, 6)


# ---------------------------------------------------------------------------
# Multivariate expansions
# ---------------------------------------------------------------------------


def test_build_c_for_n2() -> None:
    """Test C(w) = E(w) for two dimensions."""
    series = build_C(2, staircase_box(2))
    assert dict(series.coeffs) == N2_C_COEFFS


@pytest.mark.parametrize("n", [2, 3, 4])
def test_alternative_grouping_agrees(n: int) -> None:
    """Test the dense kernel against the sparse two-block grouping to total degree 8."""
    box = TruncationBox((8,) * (n - 1), total=8)
    assert build_C(n, box).coeffs == build_C_alternative(n, box).coeffs
    assert build_C_hat(n, box).coeffs == build_C_alternative(n, box, majorant=True).coeffs


def test_majorant_dominates() -> None:
    """Test |C_k| <= Ĉ_k with nonnegative majorant coefficients."""
    box = staircase_box(3)
    c_series = build_C(3, box)
    c_hat = build_C_hat(3, box)
    assert all(value > 0 for value in c_hat.coeffs.values())
    assert any(value < 0 for value in c_series.coeffs.values())
    for idx, value in c_series.items():
        assert abs(value) <= c_hat[idx]


def test_build_c_validates_arguments() -> None:
    """Test dimension checks."""
    with pytest.raises(DomainError):
        build_C(1, TruncationBox(()))
    with pytest.raises(DomainError):
        build_C(3, TruncationBox((2,)))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_build_a_constructions_agree(n: int) -> None:
    """Test A(w) from falling quotients against the i-index enumeration."""
    direct = build_A(n, SAMPLE_R)
    enumerated = build_A_from_i_indices(n, SAMPLE_R)
    assert dict(direct.entries) == dict(enumerated.entries)
    assert direct.entries[(0,) * (n - 1)] == 1


def test_build_a_n2_entries() -> None:
    """Test the three entries of A(w) for n = 2."""
    entries = dict(build_A(2, SAMPLE_R).entries)
    assert entries == {(0,): 1, (1,): Fraction(2, 27), (2,): Fraction(1, 486)}


# ---------------------------------------------------------------------------
# Evaluation
# ---------------------------------------------------------------------------


def _increasing_t(n: int, rng: np.random.Generator) -> list[Fraction]:
    t = [Fraction(1)]
    for _ in range(n - 1):
        t.append(t[-1] * (3 + Fraction(int(rng.integers(0, 100)), 100)))
    return t


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_t_coordinates_match_w_coordinates(n: int) -> None:
    """Test C(t) = C(w(t)) exactly at seeded points with t_{i+1} >= 3 t_i."""
    rng = np.random.default_rng(n)
    for _ in range(5):
        t = _increasing_t(n, rng)
        assert eval_C_t(t) == eval_C_w(n, w_from_t(t))


def test_t_coordinates_float_input() -> None:
    """Test the mpmath path on float input."""
    t = [1.0, 3.5, 12.25]
    expected = eval_C_w(3, [Fraction(2, 7), Fraction(2, 7)])
    value = eval_C_t(t)
    assert abs(value - mpmath.mpf(expected.numerator) / expected.denominator) < 1e-12


@pytest.mark.parametrize("n", [2, 3, 5])
def test_diagonal_evaluation_matches_product(n: int) -> None:
    """Test the reorganized diagonal product against C at equal arguments."""
    x = Fraction(1, SAMPLE_R)
    assert eval_diagonal(n, x) == eval_C_w(n, [x] * (n - 1))
    assert eval_diagonal(n, x, majorant=True) == eval_C_w(n, [x] * (n - 1), majorant=True)


def test_diagonal_partial_sum_converges() -> None:
    """Test that the truncated diagonal series approaches the closed form."""
    x = Fraction(1, 100)
    partial = uni_evaluate(diagonal_C_formula(4, 30), x)
    assert abs(eval_diagonal(4, x) - partial) < Fraction(1, 10**40)


def test_series_partial_sum_of_n2() -> None:
    """Test the partial sum of 1 + w + 2w^2."""
    series = build_C(2, staircase_box(2))
    assert series_partial_sum(series, [Fraction(1, 2)]) == Fraction(2)


def test_pole_detection() -> None:
    """Test that a vanishing denominator raises."""
    with pytest.raises(PoleError):
        eval_C_w(2, [Fraction(1, 2)])
    with pytest.raises(PoleError):
        eval_C_w(2, [0.5])
    with pytest.raises(PoleError):
        eval_C_t([1, 2])
    with pytest.raises(DomainError):
        eval_C_w(3, [Fraction(1, 2)])


# ---------------------------------------------------------------------------
# Consistency checks
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_a_constructions_check(n: int) -> None:
    """Test the A(w) oracle at n = 2..5."""
    outcome = a_constructions_check(n, SAMPLE_R)
    assert outcome.passed
    assert outcome.witness["entries"] == len(build_A(n, SAMPLE_R))


def test_grouping_check_total_8() -> None:
    """Test the grouping oracle for n = 4 up to total degree 8."""
    outcome = grouping_check(4, 8)
    assert outcome.passed
    assert outcome.witness == {"n": 4, "total": 8}


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_coordinate_change_check(n: int) -> None:
    """Test 100 random points per dimension within 1e-12."""
    outcome = coordinate_change_check(n, 100, seed=n)
    assert outcome.passed
    assert outcome.witness["max_deviation"] < 1e-12
    assert outcome.precision == 128


def test_coordinate_change_check_is_seeded() -> None:
    """Test that the same seed gives the same witness."""
    first = coordinate_change_check(4, 10, seed=7)
    assert first == coordinate_change_check(4, 10, seed=7)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_majorant_domination_check(n: int) -> None:
    """Test |C_k| <= Ĉ_k on the staircase box and the diagonal to h = 20."""
    outcome = majorant_domination_check(n, 20)
    assert outcome.passed
    assert outcome.witness["coefficients"] == len(build_C(n, staircase_box(n)))


def test_majorant_domination_check_reports_failure() -> None:
    """Test the witness when the majorant falls short on the diagonal."""
    shrunk = UniSeries(2, (1, 0, 0))
    with patch("hyperbounds.generating.diagonal_C_hat_formula", return_value=shrunk):
        outcome = majorant_domination_check(3, 2)
    assert not outcome.passed
    assert outcome.witness["first_failure"]["h"] == 1
