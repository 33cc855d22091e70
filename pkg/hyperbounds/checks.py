"""Registry of verification checks, grouped by suite."""

from __future__ import annotations

from collections.abc import Callable, Iterable
from dataclasses import dataclass, field
from fractions import Fraction
import functools
import logging
import math
from pathlib import Path
from typing import Any

import numpy as np

from .bounds import (
    b_factor_check,
    binomial_root_check,
    c_hat_inverse_weights_check,
    cauchy_bound_check,
    cauchy_instantiation_check,
    degree_pipeline_check,
    dGG_final,
    dK_final,
    exp_inverse_weight_grid,
    find_N_GG,
    find_N_K,
    final_minorant,
    fujiwara_random_check,
    gate_sweep,
    geometric_gap_grid,
    inverse_weight_sigma_check,
    kappa_monotone_check,
    lemma10_tail_check,
    mu_weight,
    pole_radii_check,
    quantifier_summary,
    random_sigma_chain_check,
    refined_vs_coarse_check,
    section9_suite,
    theorem13_gate,
    theorem14_gate,
)
from .cache import CoefficientCache, resolve_cache_dir
from .circle import (
    FUNC_F,
    FUNC_G,
    FUNC_H,
    FUNC_SMALL_G,
    FUNC_SMALL_H,
    G_identity_check,
    H_identity_check,
    assertion_11_7_check,
    derivative_positivity,
    emit_plot_csv,
    evenness_check,
    g_prime_finite_difference_check,
    interval_positivity_suite,
    max_modulus_on_circle,
    real_point_maximum_check,
    sine_bounds_check,
)
from .config import RunConfig
from .conjecture import (
    cmr_decomposition,
    cmr_identity_check,
    compute_CA,
    compute_CA_certified,
    compute_CA_exact,
    describe_trend,
    minoration_suite,
    quotient_bounds_check,
    ratio_table,
    sign_balance_check,
    uniform_minoration_check,
    verify_central_dominance,
)
from .const import (
    BRUTE_FORCE_MAX_N,
    CAUCHY_H_MAX,
    CAUCHY_INSTANTIATION_RANGE,
    CAUCHY_MAX_N,
    CAUCHY_RHOS,
    CIRCLE_CHECK_INDICES,
    CIRCLE_ELL_MAX,
    CIRCLE_FIGURE_INDICES,
    COORDINATE_POINTS,
    COORDINATE_RANGE,
    COORDINATE_SEED,
    DEFAULT_TAIL_SCALE,
    ESTIMATE_DIMENSIONS,
    ESTIMATE_R,
    FINAL_GATE_SCAN_CAP,
    GATE_R_RANGE,
    GATE_SCAN_CAP,
    GROUPING_RANGE,
    GROUPING_TOTAL,
    INDEX_ALGEBRA_R,
    INDEX_ALGEBRA_RANGE,
    MAJORANT_DIAGONAL_ORDER,
    MAJORANT_RANGE,
    MINORANT_DIMENSIONS,
    MU_GRID_MAX_N,
    MU_GRID_MAX_R,
    POLE_RADII_RANGE,
    POSITIVITY_SQUARES,
    QUOTIENT_ENUMERATE_MAX_N,
    QUOTIENT_SAMPLES,
    SUBCOMMAND_ALL,
    SUBCOMMAND_CIRCLE,
    SUBCOMMAND_DEGREE_BOUNDS,
    SUBCOMMAND_ESTIMATES,
    SUBCOMMAND_VERIFY,
)
from .errors import DomainError
from .generating import (
    a_constructions_check,
    coordinate_change_check,
    diagonal_positivity_check,
    grouping_check,
    majorant_domination_check,
)
from .types import CheckOutcome

_LOGGER = logging.getLogger(__name__)

# Parameters that tune how a check runs but do not identify it.
_AMBIENT_PARAMS = frozenset(
    {"budget", "cache", "directory", "exact_max_n", "mode", "precision", "samples", "trunc"}
)
IDENTITY_GRID_SIZE = 4097
GATE_THEOREM13 = "theorem13"
GATE_THEOREM14 = "theorem14"
FINAL_GREEN_GRIFFITHS = "green_griffiths"
FINAL_KOBAYASHI = "kobayashi"


def _single(config: RunConfig) -> Iterable[dict[str, Any]]:
    return ({},)


@dataclass(frozen=True, kw_only=True)
class CheckDescription:
    """Describes one family of checks.

    ``params_fn`` expands the family into concrete units for a configuration;
    ``run_fn`` must be a module-level function so units can cross process
    boundaries.
    """

    key: str
    claim: str
    anchor: str
    run_fn: Callable[..., CheckOutcome]
    params_fn: Callable[[RunConfig], Iterable[dict[str, Any]]] = _single
    informational: bool = False
    data_key: str | None = None


@dataclass(frozen=True)
class CheckUnit:
    """One concrete, independently runnable check."""

    check_id: str
    claim: str
    run_fn: Callable[..., CheckOutcome]
    params: dict[str, Any] = field(default_factory=dict)
    informational: bool = False
    data_key: str | None = None
    anchor: str = ""

    def run(self) -> CheckOutcome:
        """Run the check in the current process."""
        return self.run_fn(**self.params)

    def bound(self) -> functools.partial[CheckOutcome]:
        """Return a picklable callable for an executor."""
        return functools.partial(self.run_fn, **self.params)


def _label(key: str, params: dict[str, Any]) -> str:
    shown = [
        f"{name}={value}"
        for name, value in params.items()
        if name not in _AMBIENT_PARAMS and isinstance(value, int | float | str)
    ]
    return f"{key}[{','.join(shown)}]" if shown else key


def expand_units(
    descriptions: Iterable[CheckDescription], config: RunConfig
) -> list[CheckUnit]:
    """Expand check families into units, in registry order."""
    units: list[CheckUnit] = []
    for description in descriptions:
        for params in description.params_fn(config):
            units.append(
                CheckUnit(
                    _label(description.key, params),
                    description.claim,
                    description.run_fn,
                    dict(params),
                    description.informational,
                    description.data_key,
                    description.anchor,
                )
            )
    return units


def config_cache(config: RunConfig) -> CoefficientCache | None:
    """Return the coefficient cache selected by the environment or configuration."""
    directory = resolve_cache_dir(config.cache_dir)
    return CoefficientCache(directory) if directory is not None else None


# ---------------------------------------------------------------------------
# Conjecture suite
# ---------------------------------------------------------------------------


def _ca_unit(
    n: int,
    r: int,
    *,
    mode: str,
    trunc: int,
    exact_max_n: int,
    budget: int,
    cache: CoefficientCache | None,
) -> CheckOutcome:
    report = compute_CA(
        n, r, mode=mode, trunc=trunc, exact_max_n=exact_max_n, budget=budget, cache=cache
    )
    return CheckOutcome(passed=report.holds, witness=report.as_dict())


def _closed_form_unit(r: int, *, budget: int, cache: CoefficientCache | None) -> CheckOutcome:
    report = compute_CA_exact(2, r, budget=budget, cache=cache)
    expected = 1 + Fraction(2, 3 * r) + Fraction(1, 3 * r * r)
    return CheckOutcome(
        passed=report.CA == expected,
        witness={"r": r, "CA": report.CA, "closed_form": expected},
    )


def _certified_agreement_unit(
    n: int, r: int, *, trunc: int, budget: int, cache: CoefficientCache | None
) -> CheckOutcome:
    exact = compute_CA_exact(n, r, budget=budget, cache=cache)
    certified = compute_CA_certified(n, r, trunc, budget=budget, cache=cache)
    return CheckOutcome(
        passed=certified.CA <= exact.CA,
        witness={
            "n": n,
            "r": r,
            "exact_CA": exact.CA,
            "certified_lower_bound": certified.CA,
            "certified_mode": certified.mode,
        },
    )


def _ratio_unit(
    n_values: tuple[int, ...],
    r: int,
    *,
    budget: int,
    cache: CoefficientCache | None,
    precision: int,
) -> CheckOutcome:
    rows = ratio_table(n_values, r, budget=budget, cache=cache, precision=precision)
    trend = describe_trend(rows)
    return CheckOutcome(
        passed=trend["positive"],
        witness={
            "r": r,
            "rows": [
                {"n": row.n, "CA": row.CA, "log_CA_per_n": row.log_per_n} for row in rows
            ],
            **trend,
        },
        precision=precision,
    )


def _dominance_unit(n: int) -> CheckOutcome:
    return CheckOutcome(passed=verify_central_dominance(n), witness={"n": n})


def _cmr_unit(
    n: int, r: int, c: float, *, budget: int, cache: CoefficientCache | None
) -> CheckOutcome:
    decomp = cmr_decomposition(n, r, c, budget=budget, cache=cache)
    outcome = cmr_identity_check(decomp)
    return CheckOutcome(
        passed=outcome.passed,
        witness={**outcome.witness, "decomposition": decomp.as_dict()},
    )


def _sign_balance_unit(
    n: int,
    r: int,
    c: float,
    *,
    budget: int,
    cache: CoefficientCache | None,
    precision: int,
) -> CheckOutcome:
    decomp = cmr_decomposition(n, r, c, budget=budget, cache=cache)
    return sign_balance_check(decomp, precision=precision)


def _exact_n(config: RunConfig) -> list[int]:
    return [n for n in config.n_values if 2 <= n <= config.exact_max_n]


def _ca_params(config: RunConfig) -> Iterable[dict[str, Any]]:
    cache = config_cache(config)
    for n in config.n_values:
        for r in config.r_values:
            yield {
                "n": n,
                "r": r,
                "mode": config.mode,
                "trunc": config.trunc,
                "exact_max_n": config.exact_max_n,
                "budget": config.budget,
                "cache": cache,
            }


def _closed_form_params(config: RunConfig) -> Iterable[dict[str, Any]]:
    if 2 not in config.n_values:
        return
    cache = config_cache(config)
    for r in config.r_values:
        yield {"r": r, "budget": config.budget, "cache": cache}


def _agreement_params(config: RunConfig) -> Iterable[dict[str, Any]]:
    cache = config_cache(config)
    r = config.r_values[0]
    for n in _exact_n(config):
        yield {"n": n, "r": r, "trunc": config.trunc, "budget": config.budget, "cache": cache}


def _ratio_params(config: RunConfig) -> Iterable[dict[str, Any]]:
    n_values = tuple(_exact_n(config))
    if not n_values:
        return
    cache = config_cache(config)
    for r in config.r_values:
        yield {
            "n_values": n_values,
            "r": r,
            "budget": config.budget,
            "cache": cache,
            "precision": config.precision,
        }


def _quotient_params(config: RunConfig) -> Iterable[dict[str, Any]]:
    for n in config.n_values:
        if n < 2:
            continue
        samples = 0 if n <= QUOTIENT_ENUMERATE_MAX_N else QUOTIENT_SAMPLES
        yield {"n": n, "samples": samples}


def _dominance_params(config: RunConfig) -> Iterable[dict[str, Any]]:
    return ({"n": n} for n in config.n_values if n <= BRUTE_FORCE_MAX_N)


def _minoration_params(config: RunConfig) -> Iterable[dict[str, Any]]:
    for n in config.n_values:
        yield {"n": n, "k_max": 3 * n // 5, "ell_max": n, "precision": config.precision}


def _uniform_params(config: RunConfig) -> Iterable[dict[str, Any]]:
    for n in config.n_values:
        if n >= 2:
            yield {"n": n, "c": config.c, "precision": config.precision}


def _cmr_params(config: RunConfig) -> Iterable[dict[str, Any]]:
    cache = config_cache(config)
    r = config.r_values[0]
    for n in _exact_n(config):
        yield {"n": n, "r": r, "c": config.c, "budget": config.budget, "cache": cache}


def _sign_balance_params(config: RunConfig) -> Iterable[dict[str, Any]]:
    for params in _cmr_params(config):
        yield {**params, "precision": config.precision}


CONJECTURE_CHECKS: tuple[CheckDescription, ...] = (
    CheckDescription(
        key="ca_at_least_one",
        claim="CA >= 1: the weighted constant term I0 dominates the central monomial",
        anchor="Problem 4.2 / Proposition 4.1",
        run_fn=_ca_unit,
        params_fn=_ca_params,
        data_key="conjectures",
    ),
    CheckDescription(
        key="ca_closed_form_n2",
        claim="CA = 1 + 2/(3r) + 1/(3r^2) in dimension 2",
        anchor="Problem 4.2",
        run_fn=_closed_form_unit,
        params_fn=_closed_form_params,
    ),
    CheckDescription(
        key="certified_below_exact",
        claim="certified truncation bound never exceeds the exact CA",
        anchor="Lemma 10.1 / §10",
        run_fn=_certified_agreement_unit,
        params_fn=_agreement_params,
    ),
    CheckDescription(
        key="ratio_table",
        claim="trend of log(I0/central)/n over computed dimensions",
        anchor="Problem 2.3",
        run_fn=_ratio_unit,
        params_fn=_ratio_params,
        informational=True,
        data_key="ratio_tables",
    ),
    CheckDescription(
        key="multinomial_quotient_bounds",
        claim="0 < M_k <= 1 on the staircase with equality only at k = 0",
        anchor="Lemma 5.1",
        run_fn=quotient_bounds_check,
        params_fn=_quotient_params,
    ),
    CheckDescription(
        key="central_multinomial_dominance",
        claim="the central multinomial of n^2 into n parts is the strict maximum",
        anchor="Lemma 2.1",
        run_fn=_dominance_unit,
        params_fn=_dominance_params,
    ),
    CheckDescription(
        key="falling_quotient_minoration",
        claim="n!/(n+m)! >= n^-m e^(-m^2/n) and log(1-d) >= -d-d^2 on [0, 3/5]",
        anchor="Lemma 5.3",
        run_fn=minoration_suite,
        params_fn=_minoration_params,
    ),
    CheckDescription(
        key="uniform_minoration",
        claim="M_k >= e^(-4/c^2) for |k| <= sqrt(n)/c",
        anchor="Lemma 5.3 / §10",
        run_fn=uniform_minoration_check,
        params_fn=_uniform_params,
    ),
    CheckDescription(
        key="truncation_identities",
        claim="CMR and CR split into truncated and remainder parts exactly",
        anchor="§10",
        run_fn=_cmr_unit,
        params_fn=_cmr_params,
        data_key="decompositions",
    ),
    CheckDescription(
        key="sign_balance",
        claim="negative part of CR_inf is at most (e^(17n/r^2) - 1)/2 of the positive part",
        anchor="Lemma 9.2 / §10",
        run_fn=_sign_balance_unit,
        params_fn=_sign_balance_params,
    ),
)


# ---------------------------------------------------------------------------
# Degree-bound suite
# ---------------------------------------------------------------------------


def _mu_grid_unit(n_max: int, r_max: int) -> CheckOutcome:
    # mu_weight raises VerificationError on a mismatch, which the runner records.
    checked = 0
    for n in range(1, n_max + 1):
        for r in range(2, r_max + 1):
            mu_weight(n, r)
            checked += 1
    return CheckOutcome(passed=True, witness={"n_max": n_max, "r_max": r_max, "checked": checked})


def _gate_table_unit(gate: str, r_values: tuple[int, ...], cap: int) -> CheckOutcome:
    scan = theorem13_gate if gate == GATE_THEOREM13 else theorem14_gate
    results = gate_sweep(functools.partial(scan, cap=cap), r_values)
    summary = quantifier_summary(results)
    settled = all(result.n_min is not None for result in results.values())
    passed = summary["holds_from_checked"] if gate == GATE_THEOREM13 else settled
    return CheckOutcome(
        passed=bool(passed),
        witness={
            "gate": results[r_values[0]].name,
            "rows": [result.as_dict() for result in results.values()],
            **summary,
        },
    )


def _final_gate_unit(kind: str, cap: int) -> CheckOutcome:
    if kind == FINAL_GREEN_GRIFFITHS:
        threshold, evaluate = find_N_GG(cap), dGG_final
    else:
        threshold, evaluate = find_N_K(cap), dK_final
    window = [evaluate(n) for n in range(threshold, min(2 * threshold, cap) + 1)]
    broken = [bound.n for bound in window if not bound.gate_holds]
    first = window[0]
    return CheckOutcome.from_points(
        [{"n": n} for n in broken],
        summary={
            "kind": kind,
            "threshold": threshold,
            "gate_factor": first.gate_factor,
            "ratio": first.ratio,
            "window_end": window[-1].n,
        },
    )


def _grid_params(config: RunConfig) -> Iterable[dict[str, Any]]:
    for n in config.n_values:
        for r in config.r_values:
            yield {"n": n, "r": r}


def _c_hat_params(config: RunConfig) -> Iterable[dict[str, Any]]:
    for params in _grid_params(config):
        if params["r"] > 3:
            yield {**params, "precision": config.precision}


def _gate_params(gate: str) -> Callable[[RunConfig], Iterable[dict[str, Any]]]:
    def params(config: RunConfig) -> Iterable[dict[str, Any]]:
        return ({"gate": gate, "r_values": GATE_R_RANGE, "cap": GATE_SCAN_CAP},)

    return params


def _final_params(kind: str) -> Callable[[RunConfig], Iterable[dict[str, Any]]]:
    def params(config: RunConfig) -> Iterable[dict[str, Any]]:
        return ({"kind": kind, "cap": FINAL_GATE_SCAN_CAP},)

    return params


DEGREE_BOUND_CHECKS: tuple[CheckDescription, ...] = (
    CheckDescription(
        key="mu_closed_form",
        claim="closed form of mu(a) = sum i r^(n-i) equals the direct sum",
        anchor="§3",
        run_fn=_mu_grid_unit,
        params_fn=lambda config: ({"n_max": MU_GRID_MAX_N, "r_max": MU_GRID_MAX_R},),
    ),
    CheckDescription(
        key="exp_inverse_weight_grid",
        claim="exp(2/(r-1)) <= 1 + 3/r",
        anchor="§3",
        run_fn=exp_inverse_weight_grid,
    ),
    CheckDescription(
        key="geometric_gap_grid",
        claim="4r + 2 <= r^l - r^(l-1) for r >= 6, l >= 2",
        anchor="Lemma 3.2",
        run_fn=geometric_gap_grid,
    ),
    CheckDescription(
        key="binomial_roots",
        claim="C(n,p)^(p+1) >= C(n,p+1)^p",
        anchor="Assertion 3.5",
        run_fn=binomial_root_check,
    ),
    CheckDescription(
        key="sigma_root_chains",
        claim="Mac Laurin and sigma-root chains on random positive vectors",
        anchor="Lemma 3.4 / Assertion 3.5",
        run_fn=random_sigma_chain_check,
    ),
    CheckDescription(
        key="inverse_weight_sigma",
        claim="sigma_1(1/a) <= r/(r-1) dominates every sigma_p(1/a)^(1/p)",
        anchor="Lemma 3.4",
        run_fn=inverse_weight_sigma_check,
        params_fn=_grid_params,
    ),
    CheckDescription(
        key="kappa_monotone",
        claim="kappa_n increases and stays below 2",
        anchor="§3",
        run_fn=kappa_monotone_check,
    ),
    CheckDescription(
        key="fujiwara_roots",
        claim="Fujiwara bound contains every root",
        anchor="Theorem 3.3",
        run_fn=fujiwara_random_check,
    ),
    CheckDescription(
        key="c_hat_inverse_weights",
        claim="product formula for the majorant at inverse weights and its bounds",
        anchor="§3",
        run_fn=c_hat_inverse_weights_check,
        params_fn=_c_hat_params,
    ),
    CheckDescription(
        key="degree_pipeline",
        claim="refined degree bound re-derived from its chain of estimates",
        anchor="Proposition 3.1",
        run_fn=degree_pipeline_check,
        params_fn=_grid_params,
    ),
    CheckDescription(
        key="refined_below_coarse",
        claim="refined degree bound <= coarse degree bound",
        anchor="Proposition 3.1",
        run_fn=refined_vs_coarse_check,
    ),
    CheckDescription(
        key="gate_2_pow_5n",
        claim="2^(5n) >= refined d_GG(n, r) from n = 20 for r = 9..20",
        anchor="Theorem 1.3",
        run_fn=_gate_table_unit,
        params_fn=_gate_params(GATE_THEOREM13),
        data_key="gate_tables",
    ),
    CheckDescription(
        key="gate_4_pow_5n",
        claim="4^(5n) >= refined d_GG(2n, r) eventually for r = 9..20",
        anchor="Theorem 1.4",
        run_fn=_gate_table_unit,
        params_fn=_gate_params(GATE_THEOREM14),
        data_key="gate_tables",
    ),
    CheckDescription(
        key="final_green_griffiths",
        claim="d_GG(n) <= (sqrt(n) log n)^n on [N_GG, 2 N_GG]",
        anchor="Theorem 1.1",
        run_fn=_final_gate_unit,
        params_fn=_final_params(FINAL_GREEN_GRIFFITHS),
        data_key="final_thresholds",
    ),
    CheckDescription(
        key="final_kobayashi",
        claim="d_K(n) <= (n log n)^n on [N_K, 2 N_K]",
        anchor="Theorem 1.2",
        run_fn=_final_gate_unit,
        params_fn=_final_params(FINAL_KOBAYASHI),
        data_key="final_thresholds",
    ),
    CheckDescription(
        key="b_factor",
        claim="(2n/(2n-1))^(n+1) <= 2",
        anchor="Theorem 1.2 proof",
        run_fn=b_factor_check,
    ),
)


# ---------------------------------------------------------------------------
# Generating-function consistency
# ---------------------------------------------------------------------------


def _span_params(
    span: tuple[int, int], **extra: Any
) -> Callable[[RunConfig], Iterable[dict[str, Any]]]:
    def params(config: RunConfig) -> Iterable[dict[str, Any]]:
        return ({"n": n, **extra} for n in range(span[0], span[1] + 1))

    return params


def _coordinate_params(config: RunConfig) -> Iterable[dict[str, Any]]:
    for n in range(COORDINATE_RANGE[0], COORDINATE_RANGE[1] + 1):
        yield {
            "n": n,
            "points": COORDINATE_POINTS,
            "seed": COORDINATE_SEED + n,
            "precision": config.precision,
        }


SERIES_CHECKS: tuple[CheckDescription, ...] = (
    CheckDescription(
        key="a_constructions_agree",
        claim="A(w) from falling quotients equals A(w) from the i-index enumeration",
        anchor="Proposition 4.1",
        run_fn=a_constructions_check,
        params_fn=_span_params(INDEX_ALGEBRA_RANGE, r=INDEX_ALGEBRA_R),
    ),
    CheckDescription(
        key="grouping_agrees",
        claim="C and Ĉ equal their two-block groupings coefficient for coefficient",
        anchor="§4 / §6",
        run_fn=grouping_check,
        params_fn=_span_params(GROUPING_RANGE, total=GROUPING_TOTAL),
    ),
    CheckDescription(
        key="coordinate_change",
        claim="|C(t) - C(w(t))| < 1e-12 at random points",
        anchor="§2 / §4",
        run_fn=coordinate_change_check,
        params_fn=_coordinate_params,
    ),
    CheckDescription(
        key="majorant_domination",
        claim="|C_k| <= Ĉ_k on the staircase box and on the diagonal",
        anchor="§6",
        run_fn=majorant_domination_check,
        params_fn=_span_params(MAJORANT_RANGE, h_max=MAJORANT_DIAGONAL_ORDER),
    ),
    CheckDescription(
        key="diagonal_positivity",
        claim="P_h >= 1 and C_h >= 2^h for h <= sqrt(n) at square n",
        anchor="Lemma 7.1",
        run_fn=diagonal_positivity_check,
        params_fn=lambda config: ({"n": n} for n in POSITIVITY_SQUARES),
    ),
)


# ---------------------------------------------------------------------------
# Estimates suite
# ---------------------------------------------------------------------------


def _cauchy_instantiation_unit(low: int, high: int, h_max: int, precision: int) -> CheckOutcome:
    failures: list[dict[str, Any]] = []
    for n in range(low, high + 1):
        outcome = cauchy_instantiation_check(n, h_max, precision)
        if not outcome.passed:
            failures.append({"n": n, **outcome.witness})
    return CheckOutcome.from_points(
        failures, summary={"n_range": [low, high], "h_max": h_max}, precision=precision
    )


def _final_minorant_unit(n_values: tuple[int, ...], precision: int) -> CheckOutcome:
    values = {str(n): final_minorant(n, precision) for n in n_values}
    return CheckOutcome(
        passed=all(value >= 1 for value in values.values()),
        witness={"values": values},
        precision=precision,
    )


def _tail_params(config: RunConfig) -> Iterable[dict[str, Any]]:
    cache = config_cache(config)
    for n in _exact_n(config):
        yield {
            "n": n,
            "a": DEFAULT_TAIL_SCALE,
            "budget": config.budget,
            "cache": cache,
            "precision": config.precision,
        }


def _cauchy_params(config: RunConfig) -> Iterable[dict[str, Any]]:
    for n in range(2, CAUCHY_MAX_N + 1):
        for rho in CAUCHY_RHOS:
            yield {"n": n, "rho": rho, "h_max": CAUCHY_H_MAX}


ESTIMATE_CHECKS: tuple[CheckDescription, ...] = (
    CheckDescription(
        key="pole_radii",
        claim="poles of the diagonal products sit at 1/2 and sqrt(2) - 1",
        anchor="Lemma 8.1",
        run_fn=pole_radii_check,
        params_fn=lambda config: (
            {"n": n} for n in range(POLE_RADII_RANGE[0], POLE_RADII_RANGE[1] + 1)
        ),
    ),
    CheckDescription(
        key="cauchy_bound",
        claim="Ĉ_h rho^h <= Ĉ(rho) inside the majorant disc",
        anchor="Observation 8.2",
        run_fn=cauchy_bound_check,
        params_fn=_cauchy_params,
    ),
    CheckDescription(
        key="cauchy_instantiation",
        claim="Ĉ(1/sqrt(n)) <= e^(12 + sqrt(n))",
        anchor="§10",
        run_fn=_cauchy_instantiation_unit,
        params_fn=lambda config: (
            {
                "low": CAUCHY_INSTANTIATION_RANGE[0],
                "high": CAUCHY_INSTANTIATION_RANGE[1],
                "h_max": CAUCHY_H_MAX,
                "precision": config.precision,
            },
        ),
    ),
    CheckDescription(
        key="evaluation_estimates",
        claim="majorant evaluations at 1/r and 1/sqrt(n) and the log log n scale",
        anchor="Lemmas 9.1-9.3",
        run_fn=section9_suite,
        params_fn=lambda config: (
            {"n": n, "r": ESTIMATE_R, "precision": config.precision}
            for n in ESTIMATE_DIMENSIONS
        ),
    ),
    CheckDescription(
        key="remainder_tail",
        claim="|CMR_R| is bounded by the majorant tail beyond sqrt(n)/c",
        anchor="Lemma 10.1",
        run_fn=lemma10_tail_check,
        params_fn=_tail_params,
    ),
    CheckDescription(
        key="final_minorant",
        claim="closing lower bound of the truncation argument",
        anchor="§10",
        run_fn=_final_minorant_unit,
        params_fn=lambda config: (
            {"n_values": MINORANT_DIMENSIONS, "precision": config.precision},
        ),
        informational=True,
    ),
)


# ---------------------------------------------------------------------------
# Circle suite
# ---------------------------------------------------------------------------


def _figure_unit(
    func_id: str, index: int, rho: float, *, samples: int, directory: Path
) -> CheckOutcome:
    scan = max_modulus_on_circle(func_id, index, rho, samples)
    path = emit_plot_csv(scan, directory / f"{func_id}{index}_rho{rho}.csv")
    return CheckOutcome(
        passed=True,
        witness={
            "path": path.name,
            "rows": len(scan.theta),
            "max_ratio": scan.max_value,
            "min_ratio": scan.min_value,
        },
    )


def _identity_unit(func_id: str, index: int, rho: float) -> CheckOutcome:
    if func_id not in (FUNC_G, FUNC_H):
        raise DomainError(f"no identity for {func_id!r}")
    grid = np.linspace(-math.pi, math.pi, IDENTITY_GRID_SIZE)
    check = G_identity_check if func_id == FUNC_G else H_identity_check
    return CheckOutcome(
        passed=check(index, rho, grid),
        witness={"func": func_id, "index": index, "rho": rho},
    )


def _modulus_params(indices: tuple[int, ...]) -> Callable[[RunConfig], Iterable[dict[str, Any]]]:
    def params(config: RunConfig) -> Iterable[dict[str, Any]]:
        for func_id in (FUNC_G, FUNC_H):
            for index in indices:
                yield {
                    "func_id": func_id,
                    "index": index,
                    "rho": config.rho,
                    "samples": config.samples,
                }

    return params


def _figure_params(config: RunConfig) -> Iterable[dict[str, Any]]:
    for params in _modulus_params(CIRCLE_FIGURE_INDICES)(config):
        yield {**params, "directory": config.plots_dir}


def _identity_params(config: RunConfig) -> Iterable[dict[str, Any]]:
    for func_id in (FUNC_G, FUNC_H):
        for index in range(1, 11):
            yield {"func_id": func_id, "index": index, "rho": config.rho}


def _evenness_params(config: RunConfig) -> Iterable[dict[str, Any]]:
    for func_id in (FUNC_G, FUNC_H, FUNC_F, FUNC_SMALL_G, FUNC_SMALL_H):
        for index in (2, 5):
            yield {"func_id": func_id, "index": index, "rho": config.rho}


def _ell_params(ells: Iterable[int]) -> Callable[[RunConfig], Iterable[dict[str, Any]]]:
    values = tuple(ells)

    def params(config: RunConfig) -> Iterable[dict[str, Any]]:
        return ({"ell": ell, "rho": config.rho} for ell in values)

    return params


CIRCLE_CHECKS: tuple[CheckDescription, ...] = (
    CheckDescription(
        key="real_point_maximum",
        claim="max of |G_k| and |H_l| on |z| = rho is attained at z = rho",
        anchor="Proposition 11.1",
        run_fn=real_point_maximum_check,
        params_fn=_modulus_params(CIRCLE_CHECK_INDICES),
    ),
    CheckDescription(
        key="modulus_profile",
        claim="normalized modulus profile on |z| = rho",
        anchor="Proposition 11.1",
        run_fn=_figure_unit,
        params_fn=_figure_params,
        informational=True,
        data_key="plots",
    ),
    CheckDescription(
        key="cleared_difference_identity",
        claim="cleared-fraction difference factors into a nonnegative trigonometric form",
        anchor="Proposition 11.1 proof",
        run_fn=_identity_unit,
        params_fn=_identity_params,
    ),
    CheckDescription(
        key="evenness",
        claim="profiles are even in theta",
        anchor="§11",
        run_fn=evenness_check,
        params_fn=_evenness_params,
    ),
    CheckDescription(
        key="derivative_positivity",
        claim="g'_{l,rho} > 0 on (0, pi/(4l)]",
        anchor="Lemma 11.2",
        run_fn=derivative_positivity,
        params_fn=_ell_params(range(1, CIRCLE_ELL_MAX + 1)),
    ),
    CheckDescription(
        key="derivative_closed_form",
        claim="closed-form g' matches central differences",
        anchor="Lemma 11.2",
        run_fn=g_prime_finite_difference_check,
        params_fn=_ell_params(CIRCLE_CHECK_INDICES),
    ),
    CheckDescription(
        key="interval_positivity",
        claim="g and h are positive on their intervals and h <= g <= f/rho^l",
        anchor="Lemmas 11.3-11.6",
        run_fn=interval_positivity_suite,
        params_fn=lambda config: (
            {"rho": config.rho, "ell_max": CIRCLE_ELL_MAX, "samples": config.samples},
        ),
    ),
    CheckDescription(
        key="sine_square_exclusion",
        claim="no theta in [7pi/(4l), pi] makes both sine-square terms small",
        anchor="Assertion 11.7",
        run_fn=assertion_11_7_check,
        params_fn=lambda config: (
            {
                "ell_range": range(3, CIRCLE_ELL_MAX + 1),
                "rho": config.rho,
                "samples": config.samples,
            },
        ),
    ),
    CheckDescription(
        key="sine_bounds",
        claim="|g|/2 <= |sin g| <= |g| and sin p >= p - p^3/6",
        anchor="§11",
        run_fn=sine_bounds_check,
    ),
)


SUITES: dict[str, tuple[CheckDescription, ...]] = {
    SUBCOMMAND_VERIFY: CONJECTURE_CHECKS,
    SUBCOMMAND_DEGREE_BOUNDS: DEGREE_BOUND_CHECKS,
    SUBCOMMAND_ESTIMATES: SERIES_CHECKS + ESTIMATE_CHECKS,
    SUBCOMMAND_CIRCLE: CIRCLE_CHECKS,
}
SUITES[SUBCOMMAND_ALL] = (
    CONJECTURE_CHECKS
    + DEGREE_BOUND_CHECKS
    + SERIES_CHECKS
    + ESTIMATE_CHECKS
    + CIRCLE_CHECKS
)


def suite_units(config: RunConfig) -> list[CheckUnit]:
    """Return the units of the configured suite."""
    units = expand_units(SUITES[config.subcommand], config)
    _LOGGER.debug("Suite %s expands to %d checks", config.subcommand, len(units))
    return units
