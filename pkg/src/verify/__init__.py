"""
SUPERCHAR - Verification Module
Exact identity checks, tensor product coefficients and the selftest runner
"""

from .identities import (
    IDENTITY_IDS,
    VerificationReport,
    compare_series,
    identity_sides,
    verify_identity,
    graded_dimension_check
)

from .tensor import (
    TensorTable,
    tensor_decompose_classical,
    peeling_oracle,
    peeling_agreement_check,
    super_tensor_coeffs,
    verify_stability,
    super_character_product_check,
    exterior_dimension_check
)

from .selftest import (
    index_set_oracle_check,
    harmonic_cases,
    harmonic_suite_check,
    span_rank_check,
    tensor_stability_cases,
    run_selftest
)

__all__ = [
    'IDENTITY_IDS',
    'VerificationReport',
    'compare_series',
    'identity_sides',
    'verify_identity',
    'graded_dimension_check',
    'TensorTable',
    'tensor_decompose_classical',
    'peeling_oracle',
    'peeling_agreement_check',
    'super_tensor_coeffs',
    'verify_stability',
    'super_character_product_check',
    'exterior_dimension_check',
    'index_set_oracle_check',
    'harmonic_cases',
    'harmonic_suite_check',
    'span_rank_check',
    'tensor_stability_cases',
    'run_selftest'
]
