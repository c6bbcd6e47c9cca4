#!/usr/bin/env python3
"""
SUPERCHAR - Tensor Products
Classical tensor product decomposition by character peeling, a
Brauer-Klimyk oracle, tensor product coefficients of the spo/osp modules
through the exterior dual pairs, their stability in the rank, and the
exterior dimension identity
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Union

import numpy as np
from sympy import Rational

from ..core.classical_characters import (
    RootSystemCase,
    o_group_dimension,
    sp_group_dimension,
    weyl_character,
    weyl_dimension,
    weyl_group,
)
from ..core.combinatorics import GeneralizedVector, Partition, column_sum_ok, enumerate_partitions, in_hook
from ..core.errors import LogicFault, PartitionConstraintError
from ..core.series import PowerSeries, SeriesLayout
from ..core.super_characters import module_series
from ..core.wgroups import DualPair
from ..data import compute_config
from .identities import VerificationReport, compare_series

logger = logging.getLogger(__name__)

TableKey = Union[Partition, GeneralizedVector]


@dataclass
class TensorTable:
    """Non-negative multiplicities keyed by partitions (super side) or weights (classical side)."""
    entries: Dict[TableKey, int] = field(default_factory=dict)
    metadata: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        self.entries = {key: c for key, c in self.entries.items() if c}

    def coefficient(self, key: TableKey) -> int:
        return self.entries.get(key, 0)

    def doubled_entries(self) -> Dict[tuple, int]:
        """Classical tables keyed by doubled weight tuples."""
        return {key.doubled: c for key, c in self.entries.items()}

    def restricted(self, max_first_row: int) -> Dict[Partition, int]:
        return {lam: c for lam, c in self.entries.items() if lam.row(1) <= max_first_row}

    def _sorted(self):
        if all(isinstance(key, Partition) for key in self.entries):
            return sorted(self.entries.items(), key=lambda item: item[0].sort_key())
        return sorted(self.entries.items(), key=lambda item: tuple(-v for v in item[0].doubled))

    def to_json(self) -> dict:
        rows = []
        for key, c in self._sorted():
            if isinstance(key, Partition):
                rows.append({'partition': key.to_list(), 'coeff': str(c)})
            else:
                rows.append({'weight': [str(v) for v in key.values()], 'coeff': str(c)})
        return {'metadata': dict(self.metadata), 'entries': rows}


# ============================================================================
# Classical decompositions
# ============================================================================

def tensor_decompose_classical(family: str, k: int, w1, w2) -> TensorTable:
    """
    Decompose V(w1) (x) V(w2) by repeatedly removing the character of the
    lex-maximal weight still present.

    Raises:
        NonDominantWeightError: w1 or w2 is not dominant
        LogicFault: a negative multiplicity appears or peeling does not terminate
    """
    case = RootSystemCase(family, k)
    remaining = (weyl_character(case, w1) * weyl_character(case, w2)).as_dict()
    found: Dict[GeneralizedVector, int] = {}
    steps = 0
    while remaining:
        steps += 1
        if steps > compute_config.MAX_PEELING_STEPS:
            logger.error(f"Peeling of {w1} (x) {w2} in {case} did not terminate")
            raise LogicFault(f"Peeling exceeded {compute_config.MAX_PEELING_STEPS} steps")
        top = max(remaining)
        coeff = remaining[top]
        if coeff < 0 or not case.is_dominant(top):
            logger.error(f"Peeling of {w1} (x) {w2} in {case} reached {top} with coefficient {coeff}")
            raise LogicFault(f"Peeling produced a negative or non-dominant term at {top}")
        found[GeneralizedVector(top)] = coeff
        for weight, mult in weyl_character(case, GeneralizedVector(top)).weights:
            value = remaining.get(weight, 0) - coeff * mult
            if value:
                remaining[weight] = value
            else:
                remaining.pop(weight, None)
    logger.debug(f"Peeled {w1} (x) {w2} in {case} in {steps} steps")
    return TensorTable(found, {'family': family, 'rank': k})


def peeling_oracle(family: str, k: int, w1, w2) -> TensorTable:
    """
    Brauer-Klimyk decomposition: every weight nu of V(w2) contributes
    det(w) * mult(nu) at w(w1 + nu + rho) - rho, for the w making it dominant.
    """
    case = RootSystemCase(family, k)
    top = weyl_character(case, w1)
    base = max(top.as_dict())
    rho = np.array(case.rho, dtype=np.int64)
    mats, dets = weyl_group(family, k)
    found: Dict[GeneralizedVector, int] = {}
    for weight, mult in weyl_character(case, w2).weights:
        shifted = np.array(base, dtype=np.int64) + np.array(weight, dtype=np.int64) + rho
        images = np.einsum('nij,j->ni', mats, shifted) - rho
        for image, det in zip(images, dets):
            candidate = tuple(int(v) for v in image)
            if case.is_dominant(candidate):
                key = GeneralizedVector(candidate)
                found[key] = found.get(key, 0) + int(det) * mult
                break
    if any(c < 0 for c in found.values()):
        raise LogicFault(f"Brauer-Klimyk sum for {w1} (x) {w2} in {case} has negative terms")
    return TensorTable(found, {'family': family, 'rank': k, 'method': 'brauer-klimyk'})


def peeling_agreement_check(family: str, k: int, w1, w2) -> VerificationReport:
    """Peeling and the Brauer-Klimyk sum give the same decomposition."""
    peeled = tensor_decompose_classical(family, k, w1, w2).doubled_entries()
    oracle = peeling_oracle(family, k, w1, w2).doubled_entries()
    report = VerificationReport('peeling-oracle', {'family': family, 'k': k,
                                                   'w1': [str(v) for v in w1], 'w2': [str(v) for v in w2]})
    for weight in sorted(set(peeled) | set(oracle), reverse=True):
        report.terms_checked += 1
        if peeled.get(weight, 0) != oracle.get(weight, 0):
            report.first_mismatch = {'weight': [str(Rational(v, 2)) for v in weight],
                                     'lhs': str(peeled.get(weight, 0)), 'rhs': str(oracle.get(weight, 0))}
            break
    return report


# ============================================================================
# Super tensor coefficients
# ============================================================================

def _check_tensor_factor(lam: Partition, d: int, m: int, n: int, kind: str):
    if kind == 'spo':
        if not column_sum_ok(lam, d):
            raise PartitionConstraintError(f"spo factor {lam} needs lam'_1 + lam'_2 <= {d}")
    elif kind == 'osp':
        if d % 2 or 2 * lam.length > d:
            raise PartitionConstraintError(f"osp factor {lam} needs even d and l(lam) <= d/2, got d={d}")
    else:
        raise PartitionConstraintError(f"Unknown superalgebra kind {kind!r}")
    if not in_hook(lam, m, n):
        raise PartitionConstraintError(f"{lam} does not lie in the ({m}|{n})-hook")


def exterior_weight(lam: Partition, d: int, k: int) -> GeneralizedVector:
    """Highest weight (d/2 - lam'_k, ..., d/2 - lam'_1) dual to lam on the exterior algebra, doubled."""
    if lam.row(1) > k:
        raise PartitionConstraintError(f"{lam} has a row longer than the rank {k}")
    conj = lam.conjugate()
    return GeneralizedVector(tuple(d - 2 * conj.row(k + 1 - i) for i in range(1, k + 1)))


def _partition_from_exterior(doubled, total: int) -> Optional[Partition]:
    k = len(doubled)
    cols = []
    for i in range(1, k + 1):
        twice = total - doubled[k - i]
        if twice % 2 or twice < 0:
            return None
        cols.append(twice // 2)
    try:
        return Partition(tuple(cols)).conjugate()
    except PartitionConstraintError:
        return None


def default_tensor_rank(mu: Partition, gamma: Partition) -> int:
    return max(mu.row(1), gamma.row(1), compute_config.TENSOR_MIN_RANK) + compute_config.TENSOR_RANK_MARGIN


def super_tensor_coeffs(mu: Partition, gamma: Partition, d: int, r: int, m: int, n: int,
                        kind: str, rank: Optional[int] = None) -> TensorTable:
    """
    Multiplicities of the modules of lam in the tensor product of the modules of mu and gamma.

    The classical tensor product runs in so(2k) (spo) or sp(2k) (osp) with
    k = rank (default max(mu_1, gamma_1)). The table covers every lam with
    lam_1 <= k; spo keeps lam in the hook with lam'_1 + lam'_2 <= d + r,
    osp keeps lam in the hook with l(lam) <= (d + r) / 2.
    """
    _check_tensor_factor(mu, d, m, n, kind)
    _check_tensor_factor(gamma, r, m, n, kind)
    k = default_tensor_rank(mu, gamma) if rank is None else rank
    if k < max(mu.row(1), gamma.row(1), 1):
        raise PartitionConstraintError(f"Rank {k} is below max(mu_1, gamma_1) for {mu}, {gamma}")

    family = 'D' if kind == 'spo' else 'C'
    classical = tensor_decompose_classical(family, k, exterior_weight(mu, d, k), exterior_weight(gamma, r, k))
    entries: Dict[Partition, int] = {}
    for weight, c in classical.entries.items():
        lam = _partition_from_exterior(weight.doubled, d + r)
        if lam is None:
            logger.debug(f"Exterior weight {weight} has no partition label for d+r={d + r}")
            continue
        if not in_hook(lam, m, n):
            continue
        if kind == 'spo' and not column_sum_ok(lam, d + r):
            continue
        if kind == 'osp' and 2 * lam.length > d + r:
            continue
        entries[lam] = entries.get(lam, 0) + c
    return TensorTable(entries, {'mu': mu.to_list(), 'gamma': gamma.to_list(), 'd': d, 'r': r,
                                 'k': k, 'm': m, 'n': n, 'kind': kind})


def verify_stability(mu: Partition, gamma: Partition, d: int, r: int, k: int,
                     m: int, n: int, kind: str) -> VerificationReport:
    """Tables at ranks k and k + 1 agree on lam with lam_1 <= k."""
    low = super_tensor_coeffs(mu, gamma, d, r, m, n, kind, rank=k).restricted(k)
    high = super_tensor_coeffs(mu, gamma, d, r, m, n, kind, rank=k + 1).restricted(k)
    report = VerificationReport('tensor-stability', {'mu': mu.to_list(), 'gamma': gamma.to_list(),
                                                     'd': d, 'r': r, 'k': k, 'm': m, 'n': n, 'kind': kind})
    for lam in sorted(set(low) | set(high), key=lambda p: p.sort_key()):
        report.terms_checked += 1
        if low.get(lam, 0) != high.get(lam, 0):
            report.first_mismatch = {'partition': lam.to_list(), 'lhs': str(low.get(lam, 0)),
                                     'rhs': str(high.get(lam, 0))}
            break
    return report


def super_character_product_check(mu: Partition, gamma: Partition, d: int, r: int, m: int, n: int,
                                  kind: str, cap: int) -> VerificationReport:
    """
    series(mu, d) * series(gamma, r) against sum of c_lam series(lam, d + r) at degree cap.

    Each series is the hook Schur sum times the side factor; the prefactors
    (y z^-1)^(d/2) and (y z^-1)^(r/2) multiply to (y z^-1)^((d+r)/2) on both sides.
    """
    pair = DualPair.O_SP if kind == 'spo' else DualPair.SP_SO
    layout = SeriesLayout(y=m, z=n)
    rank = max(default_tensor_rank(mu, gamma), cap)
    table = super_tensor_coeffs(mu, gamma, d, r, m, n, kind, rank=rank)
    lhs = module_series(mu, d, m, n, cap, pair, layout) * module_series(gamma, r, m, n, cap, pair, layout)
    rhs = PowerSeries.zero(layout, cap)
    for lam, c in table.entries.items():
        if lam.size <= cap:
            rhs = rhs + module_series(lam, d + r, m, n, cap, pair, layout).scale(c)
    mismatch, checked = compare_series(lhs, rhs)
    report = VerificationReport('tensor-character', {'mu': mu.to_list(), 'gamma': gamma.to_list(), 'd': d,
                                                     'r': r, 'm': m, 'n': n, 'kind': kind, 'degree': cap},
                                mismatch, checked)
    logger.info(f"Tensor character check {mu} (x) {gamma} ({kind}): {report.status}")
    return report


# ============================================================================
# Exterior dimension identity
# ============================================================================

def exterior_dimension_check(d: int, k: int, branch: str = 'O') -> VerificationReport:
    """
    Sum over lam of dim(group module) * dim(dual module) = 2^(d k) on the
    exterior algebra of C^d (x) C^k, for (O(d), so(2k)) or (Sp(d), sp(2k)).
    """
    if d < 1 or k < 1 or branch not in ('O', 'Sp') or (branch == 'Sp' and d % 2):
        raise PartitionConstraintError(f"Invalid exterior parameters d={d}, k={k}, branch={branch}")
    if branch == 'O':
        family = enumerate_partitions(d * k, max_length=d, col_sum_bound_d=d)
        case = RootSystemCase('D', k)
    else:
        family = enumerate_partitions(d * k, max_length=d // 2)
        case = RootSystemCase('C', k)

    total = 0
    terms = 0
    for lam in family:
        if lam.row(1) > k:
            continue
        group_dim = o_group_dimension(d, lam) if branch == 'O' else sp_group_dimension(d, lam)
        total += group_dim * weyl_dimension(case, exterior_weight(lam, d, k))
        terms += 1
    expected = 2 ** (d * k)
    report = VerificationReport('exterior-dimension', {'d': d, 'k': k, 'branch': branch},
                                None if total == expected else {'lhs': str(total), 'rhs': str(expected)},
                                terms)
    return report


__all__ = [
    'TensorTable',
    'tensor_decompose_classical',
    'peeling_oracle',
    'peeling_agreement_check',
    'exterior_weight',
    'super_tensor_coeffs',
    'verify_stability',
    'super_character_product_check',
    'exterior_dimension_check',
]
