"""Tunable constants shared by the toolkit, the harness and the command line."""

import os

# =============== CONFIGURATION VARIABLES ===============
# Name of the formal parameter in every function-field computation
Q_SYMBOL_NAME = "q"

# Default seed for every sampler and for the intertwiner search
DEFAULT_SEED = 20240901

# Random rationals are n/m with n, m drawn from this pool (sign added separately)
SAMPLE_POOL = tuple(range(1, 10))

# Laurent-monomial sampler uses exponents in [-d - margin, d + margin]
LAURENT_EXPONENT_MARGIN = 2

# Seeded samples drawn per (family, d, q) cell when a config does not say
DEFAULT_SAMPLES = 5

# Matrices larger than this are rejected before any exact arithmetic starts
MAX_DIMENSION = 32

# Factor matching escalates to an intertwiner search up to this dimension
INTERTWINER_CROSSCHECK_MAX_DIM = 4

# Random small combinations tried when no intertwiner basis element is invertible
INTERTWINER_RANDOM_TRIES = 8
INTERTWINER_COEFF_RANGE = (-3, 3)

# Rejection sampling gives up after this many draws per grid point
MAX_SAMPLE_ATTEMPTS = 200
# =======================================================

# Default sweep ranges per family
DEFAULT_D_RANGE = {
    "Vd": (0, 1, 2, 3),
    "E": (1, 3),
    "O": (0, 2, 4),
}
DEFAULT_Q_VALUES = ("2",)

# Logging
LOG_LEVEL_ENV = "AWDAHA_LOG_LEVEL"
LOG_FORMAT = "%(asctime)s %(levelname)-7s %(name)s: %(message)s"
DEFAULT_LOG_LEVEL = os.environ.get(LOG_LEVEL_ENV, "WARNING").upper()
