"""
SUPERCHAR - Core Mathematics Module

Exact-arithmetic characters of the unitarizable spo(2m|2n) and
osp(2m|2n) modules arising from Howe duality with O(d) and Sp(d).

Main Classes:
    - Partition: integer partitions with conjugation and hook tests
    - PowerSeries: truncated multi-alphabet series with exact integer coefficients
    - WeylCharacter: weight multisets of classical modules
    - SignGroupSpec: Enright (even) sign permutation groups
    - CharacterResult: spo/osp characters with their prefactor
    - SuperPoly / LieOperator: supercommutative polynomials and operators

Quick Start:
    from src.core import Partition, spo_character

    result = spo_character(Partition(), d=1, m=1, n=1, cap=4)
    print(result.series.pretty())
"""

from .errors import (
    SupercharError,
    PartitionConstraintError,
    AlphabetMismatchError,
    SeriesInversionError,
    NonDominantWeightError,
    IdentityParameterError,
    LogicFault,
    OperatorIndexError
)

from .combinatorics import (
    Partition,
    GeneralizedVector,
    HookTableau,
    Letter,
    parse_partition,
    conjugate,
    in_hook,
    column_sum_ok,
    bar_partition,
    half_vector,
    glmn_labels,
    dynkin_labels,
    highest_weight_labels,
    enumerate_partitions,
    enumerate_hook_tableaux,
    enumerate_ssyt
)

from .series import (
    SeriesLayout,
    PowerSeries,
    LaurentCharacter,
    series_mul,
    series_product,
    geometric_expand
)

from .symfunc import (
    SchurExpansion,
    DUALITY_PRODUCT_IDS,
    schur_expand,
    skew_schur_expand,
    hook_schur_expand,
    hook_tableau_series,
    omega_schur,
    duality_layout,
    duality_lhs,
    sp_side_factor,
    so_side_factor
)

from .classical_characters import (
    RootSystemCase,
    WeylCharacter,
    weyl_character,
    weyl_dimension,
    o_character,
    o_group_dimension,
    sp_group_character,
    sp_group_dimension
)

from .wgroups import (
    DualPair,
    Parity,
    SignGroupSpec,
    CosetElement,
    closed_index_set,
    bruteforce_wlambda,
    coset_elements,
    lambda_w
)

from .super_characters import (
    CharacterResult,
    HookSchurSum,
    enright_schur_sum,
    classical_unitary_character,
    hs_series,
    spo_character,
    osp_character,
    module_series,
    trivial_hs,
    trivial_character,
    invariants_character
)

from .grassmann import (
    SuperPoly,
    LieOperator,
    HarmonicReport,
    super_mul,
    super_derive,
    build_determinant,
    hwv_vector,
    basis_vectors,
    lie_operator,
    glmn_operator,
    check_highest_harmonic,
    span_rank,
    operator_commutator_vanishes,
    graded_dimension,
    tableau_dimension_sum
)

__version__ = '1.0.0'
__all__ = [
    # Errors
    'SupercharError',
    'PartitionConstraintError',
    'AlphabetMismatchError',
    'SeriesInversionError',
    'NonDominantWeightError',
    'IdentityParameterError',
    'LogicFault',
    'OperatorIndexError',
    # Combinatorics
    'Partition',
    'GeneralizedVector',
    'HookTableau',
    'Letter',
    'parse_partition',
    'conjugate',
    'in_hook',
    'column_sum_ok',
    'bar_partition',
    'half_vector',
    'glmn_labels',
    'dynkin_labels',
    'highest_weight_labels',
    'enumerate_partitions',
    'enumerate_hook_tableaux',
    'enumerate_ssyt',
    # Series
    'SeriesLayout',
    'PowerSeries',
    'LaurentCharacter',
    'series_mul',
    'series_product',
    'geometric_expand',
    # Symmetric functions
    'SchurExpansion',
    'DUALITY_PRODUCT_IDS',
    'schur_expand',
    'skew_schur_expand',
    'hook_schur_expand',
    'hook_tableau_series',
    'omega_schur',
    'duality_layout',
    'duality_lhs',
    'sp_side_factor',
    'so_side_factor',
    # Classical characters
    'RootSystemCase',
    'WeylCharacter',
    'weyl_character',
    'weyl_dimension',
    'o_character',
    'o_group_dimension',
    'sp_group_character',
    'sp_group_dimension',
    # Sign groups
    'DualPair',
    'Parity',
    'SignGroupSpec',
    'CosetElement',
    'closed_index_set',
    'bruteforce_wlambda',
    'coset_elements',
    'lambda_w',
    # Super characters
    'CharacterResult',
    'HookSchurSum',
    'enright_schur_sum',
    'classical_unitary_character',
    'hs_series',
    'spo_character',
    'osp_character',
    'module_series',
    'trivial_hs',
    'trivial_character',
    'invariants_character',
    # Grassmann engine
    'SuperPoly',
    'LieOperator',
    'HarmonicReport',
    'super_mul',
    'super_derive',
    'build_determinant',
    'hwv_vector',
    'basis_vectors',
    'lie_operator',
    'glmn_operator',
    'check_highest_harmonic',
    'span_rank',
    'operator_commutator_vanishes',
    'graded_dimension',
    'tableau_dimension_sum'
]
