"""Constants for the hyperbounds verification toolkit."""

from __future__ import annotations

from fractions import Fraction
from typing import Final

DOMAIN: Final = "hyperbounds"
VERSION: Final = "1.0.0"
REPORT_SCHEMA: Final = "1"

# Cache
CACHE_FORMAT_VERSION: Final = 1
CACHE_HEADER: Final = f"# hyperbounds-series v{CACHE_FORMAT_VERSION}"
CACHE_SUFFIX: Final = ".series"
ENV_CACHE_DIR: Final = "HYPERBOUNDS_CACHE"
SERIES_KIND_C: Final = "C"
SERIES_KIND_C_HAT: Final = "Chat"

# Configuration keys
CONF_SUBCOMMAND: Final = "subcommand"
CONF_N_RANGE: Final = "n_range"
CONF_R: Final = "r"
CONF_R_SWEEP: Final = "r_sweep"
CONF_MODE: Final = "mode"
CONF_TRUNC: Final = "trunc"
CONF_PRECISION: Final = "precision"
CONF_SAMPLES: Final = "samples"
CONF_RHO: Final = "rho"
CONF_C: Final = "c"
CONF_CACHE_DIR: Final = "cache_dir"
CONF_CACHE_ACTION: Final = "cache_action"
CONF_OUT: Final = "out"
CONF_WORKERS: Final = "workers"
CONF_BUDGET: Final = "budget"
CONF_EXACT_MAX_N: Final = "exact_max_n"

# Subcommands
SUBCOMMAND_VERIFY: Final = "verify-conjecture"
SUBCOMMAND_DEGREE_BOUNDS: Final = "degree-bounds"
SUBCOMMAND_ESTIMATES: Final = "estimates"
SUBCOMMAND_CIRCLE: Final = "circle"
SUBCOMMAND_ALL: Final = "all"
SUBCOMMAND_CACHE: Final = "cache"
SUBCOMMANDS: Final = (
    SUBCOMMAND_VERIFY,
    SUBCOMMAND_DEGREE_BOUNDS,
    SUBCOMMAND_ESTIMATES,
    SUBCOMMAND_CIRCLE,
    SUBCOMMAND_ALL,
    SUBCOMMAND_CACHE,
)

CACHE_ACTION_WARM: Final = "warm"
CACHE_ACTION_INSPECT: Final = "inspect"
CACHE_ACTION_PURGE: Final = "purge"
CACHE_ACTIONS: Final = (CACHE_ACTION_WARM, CACHE_ACTION_INSPECT, CACHE_ACTION_PURGE)

# CA evaluation modes
MODE_AUTO: Final = "auto"
MODE_EXACT: Final = "exact"
MODE_CERTIFIED: Final = "certified"
MODE_INCONCLUSIVE: Final = "inconclusive"
RUN_MODES: Final = (MODE_AUTO, MODE_EXACT, MODE_CERTIFIED)

# Defaults
DEFAULT_N_RANGE: Final = (2, 5)
DEFAULT_R_SWEEP: Final = (9, 12, 20)
DEFAULT_TRUNC: Final = 8
DEFAULT_PRECISION: Final = 128
DEFAULT_SAMPLES: Final = 100_000
DEFAULT_RHO: Final = 0.25
DEFAULT_RHO_SWEEP: Final = (0.05, 0.1, 0.2, 0.25)
DEFAULT_C: Final = 2.0
DEFAULT_WORKERS: Final = 1
DEFAULT_COEFF_BUDGET: Final = 2_000_000
DEFAULT_EXACT_MAX_N: Final = 6

# Limits
MIN_N: Final = 1
MAX_N: Final = 200
MIN_R: Final = 3
MAX_R: Final = 10_000
MIN_PRECISION: Final = 64
MAX_PRECISION: Final = 4096
MIN_SAMPLES: Final = 16
MAX_SAMPLES: Final = 10_000_000
MAX_WORKERS: Final = 64
MAX_TRUNC: Final = 200

# Gate scans
GATE_R_RANGE: Final = tuple(range(9, 21))
GATE_SCAN_CAP: Final = 500
FINAL_GATE_SCAN_CAP: Final = 5000
THEOREM13_QUANTIFIER: Final = 10
THEOREM13_CHECKED_FROM: Final = 20

# Numerics
POLE_TOLERANCE: Final = 1e-14
KAPPA_TOLERANCE: Final = 1e-12
ROOT_TOLERANCE: Final = 1e-9
CIRCLE_MAX_TOLERANCE: Final = 1e-10
IDENTITY_TOLERANCE: Final = 1e-12
CIRCLE_REFINE_FACTOR: Final = 100
CIRCLE_FIGURE_INDICES: Final = (2, 5, 10)
CIRCLE_MAX_RHO: Final = 0.25
FINITE_DIFFERENCE_STEP: Final = 1e-6
LOG_COMPARE_TOLERANCE: Final = 1e-20

# Certified tails: diagonal order computed exactly, radius of the Cauchy cap.
CERTIFIED_TAIL_ORDER: Final = 60
CERTIFIED_TAIL_RADIUS: Final = Fraction(2, 5)

# Report statuses
STATUS_PASS: Final = "pass"
STATUS_FAIL: Final = "fail"
STATUS_INFO: Final = "info"

# Exit codes
EXIT_OK: Final = 0
EXIT_CLAIM_FAILURE: Final = 1
EXIT_RESOURCE: Final = 2
EXIT_CONFIG: Final = 3

LOG_FORMAT: Final = "%(asctime)s %(levelname)-8s %(name)s: %(message)s"

# Suite parameters
CONF_PLOTS_DIR: Final = "plots_dir"
CONF_VERBOSE: Final = "verbose"
DEFAULT_PLOTS_DIR: Final = "plots"
DEFAULT_TAIL_SCALE: Final = 5.0
CIRCLE_CHECK_INDICES: Final = (1, 2, 5, 10)
CIRCLE_ELL_MAX: Final = 20
CAUCHY_RHOS: Final = (0.1, 0.25, 0.4)
CAUCHY_MAX_N: Final = 8
CAUCHY_H_MAX: Final = 20
CAUCHY_INSTANTIATION_RANGE: Final = (16, 100)
POLE_RADII_RANGE: Final = (3, 10)
ESTIMATE_DIMENSIONS: Final = (50, 100, 200)
ESTIMATE_R: Final = 10
MINORANT_DIMENSIONS: Final = (10**3, 10**6, 10**12, 10**100)
QUOTIENT_ENUMERATE_MAX_N: Final = 5
QUOTIENT_SAMPLES: Final = 1000
BRUTE_FORCE_MAX_N: Final = 4
MU_GRID_MAX_N: Final = 30
MU_GRID_MAX_R: Final = 20

# Generating-function consistency checks
POSITIVITY_SQUARES: Final = (4, 9, 16, 25)
INDEX_ALGEBRA_RANGE: Final = (2, 5)
INDEX_ALGEBRA_R: Final = 9
GROUPING_RANGE: Final = (2, 4)
GROUPING_TOTAL: Final = 8
COORDINATE_RANGE: Final = (2, 6)
COORDINATE_POINTS: Final = 100
COORDINATE_SEED: Final = 20240
COORDINATE_TOLERANCE: Final = 1e-12
MAJORANT_RANGE: Final = (2, 5)
MAJORANT_DIAGONAL_ORDER: Final = 20
