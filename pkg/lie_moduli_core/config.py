"""
Default configuration values for the Lie moduli engine.
Scenarios and the CLI override these by passing explicit arguments.
"""
from fractions import Fraction

SUPPORTED_DIMENSIONS: tuple = (3, 4)

DEFAULT_MAX_ORDER: int = 4

ORBIT_ENTRY_RANGE: int = 3
DEFAULT_ORBIT_SAMPLES: int = 100
DEFAULT_ORBIT_SEED: int = 4242
MAX_SINGULAR_RESAMPLES: int = 10000

RANDOM_MATRIX_ENTRY_RANGE: int = 2
JACOBI_ORACLE_SAMPLES: int = 1000
JACOBI_ORACLE_SEED: int = 1979

# Small rationals tried when looking for points on a relation variety.
RELATION_SCAN_VALUES: tuple = (Fraction(0), Fraction(1), Fraction(-1), Fraction(1, 2), Fraction(2), Fraction(-2))
RELATION_SCAN_LIMIT: int = 20
RELATION_SCAN_BUDGET: int = 5000

DEFAULT_DOT_GRAPH_NAME: str = 'moduli4'

EXIT_OK: int = 0
EXIT_VALIDATION_FAILURE: int = 1
EXIT_USAGE_ERROR: int = 2

LOG_LEVEL: str = "INFO"
