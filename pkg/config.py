import os

# Labels and magic sums
MAX_LABEL = 10**6  # largest admissible label / magic sum
EDGE_COUNT = 12
VERTEX_COUNT = 8

# Verification ranges (defaults for the CLI flags)
DEFAULT_MAX_SUM = 8  # exhaustive oracle comparisons run for r <= this
DEFAULT_MAX_KSUM = 5  # classify(compose(...)) round trip for sum(k) <= this
LEMMA_Q_RANGE = 5  # q-coordinate box [-5, 5]^6 for the membership conditions
POLYNOMIAL_CHECK_TERMS = 200  # closed-form count vs type count
FINITE_DIFFERENCE_TERMS = 30

# Distinct labellings
GROUP_ORDER = 48
FIRST_DISTINCT_SUM = 17
DISTINCT_SUMS = range(17, 24)
CANONICAL_CHECK_SUMS = (17, 18)
ORACLE_DISTINCT_SUMS = range(17, 21)  # oracle vs type-based distinct counts
# Reference coefficients of y^17 .. y^23 in the distinct-labelling series
REFERENCE_GSTAR_TERMS = {17: 6, 18: 13, 19: 34, 20: 60, 21: 128, 22: 199, 23: 331}
GSTAR_PERIOD = 720720

# Constrained counts (F1 / F2 sets) are compared for these sums
CONSTRAINED_SUMS = range(8, 15)

# Series output
DEFAULT_SERIES_TERMS = 23

# Paths
PROJECT_ROOT = os.path.dirname(os.path.abspath(__file__))
DATA_DIR = os.path.join(PROJECT_ROOT, "data")
GSTAR_NUMERATOR_FILE = os.path.join(DATA_DIR, "gstar_numerator.json")
