# config.py

# --- Tool ---
TOOL_VERSION = "1.0.0"

# --- Character-table cache ---
# Directory override; set it in your .env file or the shell.
CACHE_ENV_VAR = "SYMCHAR_CACHE"

# Bump when the on-disk layout of a cache entry changes. Old files are ignored.
CACHE_FORMAT_VERSION = 1
CACHE_FILE_TEMPLATE = "chartab_v{version}_n{n}.json"
CACHE_DIR_NAME = "symchar"

# --- Oracle ---
# Largest graded piece (number of monomials) the oracle will row-reduce.
ORACLE_MAX_MONOMIALS = 200000

# --- Output ---
DEFAULT_BASIS = "s"
DEFAULT_FORMAT = "text"
REPORTS_DIR = "reports"

# --- Verification ---
DEFAULT_JOBS = 1
# q-degree used for the OT side of the oracle comparison
ORACLE_OT_MAX_DEGREE = 4
# Largest n for checks whose cost grows too fast to follow --n-max
CHECK_N_LIMITS = {"subtraction": 4, "projection": 6}
# Random inner functions for the subtraction check; the seed is offset by n
SUBTRACTION_SAMPLES = 4
VERIFY_SEED = 20240611
