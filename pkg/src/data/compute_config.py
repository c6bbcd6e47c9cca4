#!/usr/bin/env python3
"""
SUPERCHAR - Compute Configuration
Centralized defaults, exit codes and verification grids
"""

from typing import Any, Dict, List, Tuple

# ============================================================================
# Truncation Defaults
# ============================================================================

# Default total (y, z)-degree of truncated series
DEFAULT_DEGREE = 6

# Largest degree accepted from the command line
MAX_DEGREE = 16

# Largest d, m, n accepted from the command line
MAX_PARAMETER = 8


# ============================================================================
# Output
# ============================================================================

# JSON schema tag carried by every payload
SCHEMA_VERSION = "superchar/1"

# Supported output formats
OUTPUT_FORMATS: List[str] = ['json', 'text']

DEFAULT_FORMAT = 'json'

# Logging format shared by the CLI and pytest live logging
LOG_FORMAT = '%(asctime)s [%(levelname)8s] %(message)s'


# ============================================================================
# Exit Codes
# ============================================================================

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2


# ============================================================================
# Tensor Rank Policy
# ============================================================================

# Classical rank used for tensor coefficients is max(mu_1, gamma_1) plus this
TENSOR_RANK_MARGIN = 0

# Smallest classical rank ever used
TENSOR_MIN_RANK = 1

# Safety bound on the number of peeling steps of a classical tensor product
MAX_PEELING_STEPS = 10_000


# ============================================================================
# Selftest Grids
# ============================================================================

# (identity, d, m, n, degree)
QUICK_IDENTITY_GRID: List[Tuple[str, int, int, int, int]] = [
    ('glgl', 1, 1, 1, 4),
    ('glgl', 2, 1, 1, 4),
    ('o-sp', 1, 1, 0, 5),
    ('o-sp', 2, 2, 0, 4),
    ('sp-so', 2, 2, 0, 4),
    ('o-spo', 1, 1, 1, 4),
    ('sp-osp', 2, 1, 1, 4),
    ('o-invariants', 1, 1, 1, 4),
    ('sp-invariants', 2, 1, 1, 4),
    ('trivial-hs', 1, 1, 1, 4),
    ('hs-stability', 1, 1, 1, 3),
]

FULL_IDENTITY_GRID: List[Tuple[str, int, int, int, int]] = (
    [('glgl', d, m, n, 6) for d, m, n in ((1, 1, 1), (2, 1, 1), (2, 2, 1))]
    + [('glgl', 3, 1, 2, 5)]
    + [('o-sp', d, m, 0, 6) for d in range(1, 6) for m in (1, 2, 3)]
    + [('sp-so', d, m, 0, 6) for d in (2, 4) for m in (1, 2, 3)]
    + [('o-spo', d, m, n, 5) for d in (1, 2, 3, 4) for m in (1, 2) for n in (1, 2)]
    + [('sp-osp', d, m, n, 5) for d in (2, 4) for m in (1, 2) for n in (1, 2)]
    + [('o-invariants', d, m, n, 6) for d in (1, 3) for m in (1, 2) for n in (1, 2)]
    + [('sp-invariants', 2, m, n, 6) for m in (1, 2) for n in (1, 2)]
    + [('trivial-hs', d, m, n, 6) for d in (1, 3) for m in (1, 2) for n in (1, 2)]
    + [('hs-stability', d, m, n, 5) for d in (1, 2, 3) for m in (1, 2) for n in (1, 2)]
)

# (mu, gamma, d, r, kind) for the tensor stability suite
QUICK_TENSOR_GRID: List[Tuple[Tuple[int, ...], Tuple[int, ...], int, int, str]] = [
    ((1,), (1,), 1, 1, 'spo'),
    ((2,), (1,), 3, 1, 'spo'),
    ((1,), (1,), 2, 2, 'osp'),
]

# (d, k, branch) for the exterior dimension check
EXTERIOR_GRID: List[Tuple[int, int, str]] = (
    [(d, k, 'O') for d in (1, 2, 3) for k in (1, 2, 3)]
    + [(d, k, 'Sp') for d in (2, 4) for k in (1, 2)]
)

# (d, r, kind) for the full tensor stability suite over every admissible
# mu, gamma with |mu|, |gamma| <= TENSOR_STABILITY_MAX_SIZE
TENSOR_STABILITY_CASES: List[Tuple[int, int, str]] = [
    (3, 3, 'spo'),
    (2, 2, 'osp'),
]
TENSOR_STABILITY_MAX_SIZE = 3

# (mu, gamma, d, r, m, n, kind, degree) for the character product check
TENSOR_PRODUCT_GRID: List[Tuple[Tuple[int, ...], Tuple[int, ...], int, int, int, int, str, int]] = (
    [((1,), (1,), 1, 1, 1, 1, 'spo', degree) for degree in (3, 4)]
    + [(mu, gamma, 2, 2, m, n, 'osp', 4)
       for mu, gamma in (((), ()), ((1,), ()), ((1,), (1,)), ((2,), (1,)))
       for m in (1, 2) for n in (1, 2)]
)

# (family, k, w1, w2) for peeling against Brauer-Klimyk
PEELING_GRID: List[Tuple[str, int, Tuple[int, ...], Tuple[int, ...]]] = [
    ('C', 1, (1,), (1,)),
    ('C', 1, (2,), (1,)),
    ('C', 1, (3,), (2,)),
    ('C', 2, (1, 0), (1, 0)),
    ('C', 2, (1, 1), (1, 0)),
    ('C', 2, (2, 0), (1, 1)),
    ('C', 2, (2, 1), (2, 0)),
    ('D', 2, (1, 0), (1, 0)),
    ('D', 2, (1, 1), (1, -1)),
    ('D', 2, (2, 0), (1, 1)),
    ('D', 2, (2, 1), (1, 0)),
]

# Bounds (max |lam|, max d, max m and n) for the highest weight vector suites
HARMONIC_BOUNDS: Tuple[int, int, int] = (4, 3, 2)
SPAN_RANK_BOUNDS: Tuple[int, int, int] = (3, 2, 2)


# ============================================================================
# Configuration Validation
# ============================================================================

def validate_config() -> Dict[str, Any]:
    """
    Validate compute configuration.

    Returns:
        Dictionary with validation results
    """
    issues = []
    warnings = []

    if DEFAULT_DEGREE < 0 or DEFAULT_DEGREE > MAX_DEGREE:
        issues.append("DEFAULT_DEGREE must lie in 0..MAX_DEGREE")

    if DEFAULT_FORMAT not in OUTPUT_FORMATS:
        issues.append(f"DEFAULT_FORMAT must be one of {OUTPUT_FORMATS}")

    if len({EXIT_OK, EXIT_MISMATCH, EXIT_USAGE}) != 3:
        issues.append("Exit codes must be distinct")

    if TENSOR_MIN_RANK < 1:
        issues.append("TENSOR_MIN_RANK must be positive")

    for identity, d, m, n, degree in QUICK_IDENTITY_GRID + FULL_IDENTITY_GRID:
        if degree > MAX_DEGREE:
            warnings.append(f"Selftest entry {identity} d={d} uses degree {degree} above MAX_DEGREE")

    return {
        'valid': len(issues) == 0,
        'issues': issues,
        'warnings': warnings
    }


# Validate on import
_validation = validate_config()
if not _validation['valid']:
    raise ValueError(f"Invalid compute configuration: {_validation['issues']}")


__all__ = [
    'DEFAULT_DEGREE',
    'MAX_DEGREE',
    'MAX_PARAMETER',
    'SCHEMA_VERSION',
    'OUTPUT_FORMATS',
    'DEFAULT_FORMAT',
    'LOG_FORMAT',
    'EXIT_OK',
    'EXIT_MISMATCH',
    'EXIT_USAGE',
    'TENSOR_RANK_MARGIN',
    'TENSOR_MIN_RANK',
    'MAX_PEELING_STEPS',
    'QUICK_IDENTITY_GRID',
    'FULL_IDENTITY_GRID',
    'QUICK_TENSOR_GRID',
    'EXTERIOR_GRID',
    'TENSOR_STABILITY_CASES',
    'TENSOR_STABILITY_MAX_SIZE',
    'TENSOR_PRODUCT_GRID',
    'PEELING_GRID',
    'HARMONIC_BOUNDS',
    'SPAN_RANK_BOUNDS',
    'validate_config',
]
