"""Tool-wide defaults.  Everything that affects output is fixed here so that
certificate reports are reproducible bit-for-bit."""

# Seed for the pseudo-random element sequences used by equal-degree
# splitting and by the module-decomposition search.
DEFAULT_SEED = 1567

# Largest group enumerated by breadth-first closure.
CLOSURE_CAP = 10**6

# Commutant algebras with at most this many elements are enumerated directly.
COMMUTANT_ENUMERATION_LIMIT = 10**7

# Full scans of GL_n(F_q) are refused above this group order.
SCAN_LIMIT = 3 * 10**7

# Working precision (decimal digits) for the analytic bounds.
MP_DPS = 50

# Default truncation of the prime-power sum in the explicit formula.
M_MAX = 100

# Absolute tolerance for numeric certificate comparisons.
NUMERIC_TOLERANCE = 1e-2

# Required margin for root-discriminant contradictions.
CONTRADICTION_MARGIN = 1e-3
