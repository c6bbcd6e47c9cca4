#!/usr/bin/env python3
"""
SUPERCHAR - Identity Verification
Builds both sides of the duality character identities as truncated series
and compares them exactly, plus the graded dimension identity
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple

from ..core.classical_characters import o_character, sp_group_character
from ..core.combinatorics import Partition, enumerate_partitions
from ..core.errors import IdentityParameterError
from ..core.grassmann import graded_dimension, tableau_dimension_sum
from ..core.series import PowerSeries, SeriesLayout, graded_lex_key
from ..core.super_characters import (
    classical_unitary_character,
    hs_series,
    invariants_character,
    module_series,
    trivial_hs,
    truncation_rank,
)
from ..core.symfunc import (
    DUALITY_PRODUCT_IDS,
    duality_layout,
    duality_lhs,
    hook_schur_expand,
    schur_expand,
    so_side_factor,
    sp_side_factor,
)
from ..core.wgroups import DualPair

logger = logging.getLogger(__name__)

IDENTITY_IDS = DUALITY_PRODUCT_IDS + ('o-invariants', 'sp-invariants', 'trivial-hs', 'hs-stability')

EXACT_MATCH = 'exact-match'
MISMATCH = 'mismatch'


@dataclass
class VerificationReport:
    """Outcome of one exact comparison; status is exact-match iff first_mismatch is None."""
    identity: str
    parameters: Dict[str, Any] = field(default_factory=dict)
    first_mismatch: Optional[Dict[str, Any]] = None
    terms_checked: int = 0

    @property
    def status(self) -> str:
        return EXACT_MATCH if self.first_mismatch is None else MISMATCH

    @property
    def ok(self) -> bool:
        return self.first_mismatch is None

    def to_json(self) -> dict:
        return {
            'identity': self.identity,
            'parameters': dict(self.parameters),
            'status': self.status,
            'first_mismatch': self.first_mismatch,
            'terms_checked': self.terms_checked,
        }


def compare_series(lhs: PowerSeries, rhs: PowerSeries) -> Tuple[Optional[Dict[str, Any]], int]:
    """
    Exact comparison in graded-lex order.

    Returns:
        (first mismatch or None, number of monomials compared)
    """
    layout = lhs.layout
    exponents = sorted(set(lhs.terms) | set(rhs.terms), key=lambda e: graded_lex_key(layout, e))
    for checked, exp in enumerate(exponents, start=1):
        left, right = lhs.coeff(exp), rhs.coeff(exp)
        if left != right:
            return {'monomial': layout.split(exp), 'lhs': str(left), 'rhs': str(right)}, checked
    return None, len(exponents)


# ============================================================================
# Parameter checks
# ============================================================================

def _check_parameters(identity: str, d: int, m: int, n: int, cap: int):
    if identity not in IDENTITY_IDS:
        raise IdentityParameterError(f"Unknown identity {identity!r}; expected one of {IDENTITY_IDS}")
    if d < 1 or m < 0 or n < 0 or cap < 0:
        raise IdentityParameterError(f"Invalid parameters d={d}, m={m}, n={n}, degree={cap}")
    if identity in ('o-sp', 'sp-so') and n:
        raise IdentityParameterError(f"{identity} is a classical identity and takes n=0, got n={n}")
    if identity in ('sp-so', 'sp-osp', 'sp-invariants') and d % 2:
        raise IdentityParameterError(f"{identity} requires even d, got d={d}")
    if identity == 'o-invariants' and d % 2 == 0:
        raise IdentityParameterError(f"o-invariants is verified for odd d, got d={d}")


# ============================================================================
# Sum sides
# ============================================================================

def _glgl_rhs(d: int, m: int, n: int, cap: int, layout: SeriesLayout) -> PowerSeries:
    total = PowerSeries.zero(layout, cap)
    for lam in enumerate_partitions(cap, max_length=d, hook=(m, n)):
        total = total + schur_expand(lam, d, layout, 'x', cap) * hook_schur_expand(lam, m, n, layout, cap)
    return total


def _o_rhs(d: int, m: int, n: int, cap: int, layout: SeriesLayout, super_side: bool) -> PowerSeries:
    total = PowerSeries.zero(layout, cap)
    if super_side:
        family = enumerate_partitions(cap, col_sum_bound_d=d, hook=(m, n))
    else:
        family = enumerate_partitions(cap, col_sum_bound_d=d, max_length=m)
    for lam in family:
        group = o_character(d, lam, layout=layout)
        if super_side:
            dual = module_series(lam, d, m, n, cap, DualPair.O_SP, layout)
        else:
            dual = classical_unitary_character(lam, d, m, DualPair.O_SP, cap, layout).series
        total = total + group * dual
    return total


def _sp_rhs(d: int, m: int, n: int, cap: int, layout: SeriesLayout, super_side: bool) -> PowerSeries:
    total = PowerSeries.zero(layout, cap)
    if super_side:
        family = enumerate_partitions(cap, max_length=d // 2, hook=(m, n))
    else:
        family = enumerate_partitions(cap, max_length=min(d // 2, m))
    for lam in family:
        group = sp_group_character(d, lam, layout)
        if super_side:
            dual = module_series(lam, d, m, n, cap, DualPair.SP_SO, layout)
        else:
            dual = classical_unitary_character(lam, d, m, DualPair.SP_SO, cap, layout).series
        total = total + group * dual
    return total


def identity_sides(identity: str, d: int, m: int, n: int, cap: int) -> Tuple[PowerSeries, PowerSeries]:
    """
    Both sides of an identity, truncated at (y, z)-degree cap.

    Identity ids:
        glgl, o-sp, sp-so, o-spo, sp-osp: product side against the sum over
            contributing lam with |lam| <= cap
        o-invariants (d odd):  invariants of O(d) against sp side factor * trivial hook Schur sum
        sp-invariants (d even): invariants of Sp(d) against so side factor * trivial hook Schur sum
        trivial-hs: closed trivial hook Schur sum against the Enright construction for lam = ()

    Raises:
        IdentityParameterError: unknown id or parameters invalid for it
    """
    _check_parameters(identity, d, m, n, cap)
    if identity == 'hs-stability':
        raise IdentityParameterError("hs-stability compares many series; use verify_identity")

    if identity in DUALITY_PRODUCT_IDS:
        layout = duality_layout(identity, d, m, n)
        lhs = duality_lhs(identity, d, m, n, cap)
        if identity == 'glgl':
            rhs = _glgl_rhs(d, m, n, cap, layout)
        elif identity in ('o-sp', 'o-spo'):
            rhs = _o_rhs(d, m, n, cap, layout, super_side=identity == 'o-spo')
        else:
            rhs = _sp_rhs(d, m, n, cap, layout, super_side=identity == 'sp-osp')
        return lhs, rhs

    layout = SeriesLayout(y=m, z=n)
    if identity == 'o-invariants':
        lhs = invariants_character('O', d, m, n, cap, layout)
        rhs = sp_side_factor(layout, cap) * trivial_hs(DualPair.O_SP, d, m, n, cap, layout).series
        return lhs, rhs
    if identity == 'sp-invariants':
        lhs = invariants_character('Sp', d, m, n, cap, layout)
        rhs = so_side_factor(layout, cap) * trivial_hs(DualPair.SP_SO, d, m, n, cap, layout).series
        return lhs, rhs

    pair = DualPair.O_SP if d % 2 else DualPair.SP_SO
    lhs = trivial_hs(pair, d, m, n, cap, layout).series
    rhs = hs_series(Partition(), d, m, n, cap, pair, layout=layout).series
    return lhs, rhs


def _stability_report(d: int, m: int, n: int, cap: int, parameters: Dict[str, Any]) -> VerificationReport:
    report = VerificationReport('hs-stability', parameters)
    pairs = [DualPair.O_SP] + ([DualPair.SP_SO] if d % 2 == 0 else [])
    for pair in pairs:
        if pair is DualPair.O_SP:
            family = enumerate_partitions(cap, col_sum_bound_d=d)
        else:
            family = enumerate_partitions(cap, max_length=d // 2)
        for lam in family:
            k = truncation_rank(lam, d, cap, pair)
            low = hs_series(lam, d, m, n, cap, pair, rank=k)
            high = hs_series(lam, d, m, n, cap, pair, rank=k + 2)
            mismatch, checked = compare_series(low.series, high.series)
            report.terms_checked += checked
            if low.expansion != high.expansion and mismatch is None:
                mismatch = {'partition': lam.to_list(), 'pair': pair.value, 'rank': k,
                            'lhs': low.expansion.to_json(), 'rhs': high.expansion.to_json()}
            if mismatch is not None:
                mismatch.setdefault('partition', lam.to_list())
                mismatch.setdefault('pair', pair.value)
                report.first_mismatch = mismatch
                return report
    return report


def verify_identity(identity: str, d: int, m: int, n: int, cap: int) -> VerificationReport:
    """
    Exact verification of a character identity at (y, z)-degree <= cap.

    Args:
        identity: identity id (see IDENTITY_IDS)
        d: rank of the classical group side
        m, n: even and odd dimensions of the super side
        cap: truncation degree

    Returns:
        VerificationReport with the first mismatching monomial, if any
    """
    parameters = {'d': d, 'm': m, 'n': n, 'degree': cap}
    _check_parameters(identity, d, m, n, cap)
    if identity == 'hs-stability':
        report = _stability_report(d, m, n, cap, parameters)
    else:
        lhs, rhs = identity_sides(identity, d, m, n, cap)
        mismatch, checked = compare_series(lhs, rhs)
        report = VerificationReport(identity, parameters, mismatch, checked)
    if report.ok:
        logger.info(f"{identity} d={d} m={m} n={n} degree={cap}: exact match over {report.terms_checked} terms")
    else:
        logger.warning(f"{identity} d={d} m={m} n={n} degree={cap}: mismatch {report.first_mismatch}")
    return report


def graded_dimension_check(d: int, m: int, n: int, max_degree: int) -> VerificationReport:
    """dim S^N(C^d (x) C^(m|n)) against sum over lam of #SSYT_d(lam) * #hook tableaux(lam), N <= max_degree."""
    if d < 1 or m < 0 or n < 0 or max_degree < 0:
        raise IdentityParameterError(f"Invalid parameters d={d}, m={m}, n={n}, degree={max_degree}")
    report = VerificationReport('graded-dimension', {'d': d, 'm': m, 'n': n, 'degree': max_degree})
    for degree in range(max_degree + 1):
        left = graded_dimension(d, m, n, degree)
        right = tableau_dimension_sum(d, m, n, degree)
        report.terms_checked += 1
        if left != right:
            report.first_mismatch = {'degree': degree, 'lhs': str(left), 'rhs': str(right)}
            break
    return report
