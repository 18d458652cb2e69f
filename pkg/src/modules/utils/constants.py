"""
Constants

Shared constants used across the application.
"""

# Degree cutoff constants
DEFAULT_CUTOFF = 6
CUTOFF_ENV_VAR = "GRASSFLOP_CUTOFF"
SEED_ENV_VAR = "GRASSFLOP_SEED"
DEFAULT_SEED = 0

# Multiplicities are signed 64-bit integers
INT64_MIN = -(2 ** 63)
INT64_MAX = 2 ** 63 - 1

# Random specialization oracle
DEFAULT_TRIALS = 100
SPECIALIZATION_RANGE = (-9, 9)

# Symbolic expansion grows quickly with matrix size
MAX_MATRIX_DIM = 6

# Memo tables are cleared once they reach these sizes
REP_CACHE_MAX_ENTRIES = 50_000
KERNEL_CACHE_MAX_ENTRIES = 64

# Serre-duality grid: weight entries range over [-bound, bound]
DEFAULT_SERRE_BOUND = 2

# Output constants
DEFAULT_OUTPUT_DIR = "output"
SUPPORTED_OUTPUT_FORMATS = ["json", "table"]
SUPPORTED_CONFIG_FORMATS = ['json', 'yaml', 'yml']

# Exit codes
EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2

# Names of the three group slots of the flop profile
SLOT_V = "V"
SLOT_W = "W"
SLOT_WPRIME = "W'"
