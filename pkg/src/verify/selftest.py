#!/usr/bin/env python3
"""
SUPERCHAR - Selftest Runner
Runs the identity, oracle, highest weight vector, tensor and dimension
suites over the configured grids with a progress bar
"""

import logging
from typing import Callable, List, Tuple

from tqdm import tqdm

from ..core.combinatorics import (
    Partition,
    column_sum_ok,
    enumerate_hook_tableaux,
    enumerate_partitions,
    enumerate_ssyt,
)
from ..core.errors import SupercharError
from ..core.grassmann import basis_vectors, check_highest_harmonic, span_rank
from ..core.wgroups import DualPair, bruteforce_wlambda, closed_index_set
from ..data import compute_config
from .identities import VerificationReport, graded_dimension_check, verify_identity
from .tensor import (
    exterior_dimension_check,
    peeling_agreement_check,
    super_character_product_check,
    verify_stability,
)

logger = logging.getLogger(__name__)

HarmonicCase = Tuple[Partition, int, int, int, DualPair]


def index_set_oracle_check(max_size: int, max_d: int, m: int) -> VerificationReport:
    """Closed-form index sets against the root-condition oracle, both pairs."""
    report = VerificationReport('index-set-oracle', {'max_size': max_size, 'max_d': max_d, 'm': m})
    for d in range(1, max_d + 1):
        for pair in DualPair:
            if pair is DualPair.SP_SO:
                if d % 2:
                    continue
                family = enumerate_partitions(max_size, max_length=d // 2)
            else:
                family = enumerate_partitions(max_size, col_sum_bound_d=d)
            for lam in family:
                if lam.length > m:
                    continue
                report.terms_checked += 1
                closed = closed_index_set(lam, d, m, pair).canonical()
                oracle = bruteforce_wlambda(lam, d, m, pair).canonical()
                if closed != oracle:
                    report.first_mismatch = {'partition': lam.to_list(), 'd': d, 'pair': pair.value,
                                             'lhs': [list(closed[0]), closed[1].value],
                                             'rhs': [list(oracle[0]), oracle[1].value]}
                    return report
    return report


# ============================================================================
# Highest weight vector suites
# ============================================================================

def harmonic_cases(max_size: int, max_d: int, max_mn: int) -> List[HarmonicCase]:
    """Every (lam, d, m, n, pair) with a highest weight vector inside the bounds."""
    cases = []
    for d in range(1, max_d + 1):
        for m in range(1, max_mn + 1):
            for n in range(1, max_mn + 1):
                for lam in enumerate_partitions(max_size, max_length=d, hook=(m, n)):
                    if column_sum_ok(lam, d):
                        cases.append((lam, d, m, n, DualPair.O_SP))
                    if d % 2 == 0 and 2 * lam.length <= d:
                        cases.append((lam, d, m, n, DualPair.SP_SO))
    return cases


def harmonic_suite_check(max_size: int, max_d: int, max_mn: int) -> VerificationReport:
    """Raising operators and Laplacians kill every highest weight vector in the bounds."""
    report = VerificationReport('harmonic-hwv', {'max_size': max_size, 'max_d': max_d, 'max_mn': max_mn})
    for lam, d, m, n, pair in harmonic_cases(max_size, max_d, max_mn):
        harmonic = check_highest_harmonic(lam, d, m, n, pair)
        report.terms_checked += harmonic.operators_checked
        if not harmonic.all_zero:
            report.first_mismatch = harmonic.to_json()
            break
    return report


def span_rank_check(max_size: int, max_d: int, max_mn: int) -> VerificationReport:
    """Tableau vectors and tableau pair vectors are linearly independent."""
    report = VerificationReport('span-rank', {'max_size': max_size, 'max_d': max_d, 'max_mn': max_mn})
    for d in range(1, max_d + 1):
        for m in range(1, max_mn + 1):
            for n in range(1, max_mn + 1):
                for lam in enumerate_partitions(max_size, max_length=d, hook=(m, n)):
                    hooks = len(enumerate_hook_tableaux(lam, m, n))
                    expected = {False: hooks, True: hooks * len(enumerate_ssyt(lam, d))}
                    for paired, count in expected.items():
                        report.terms_checked += 1
                        rank = span_rank(basis_vectors(lam, d, m, n, paired=paired))
                        if rank != count:
                            report.first_mismatch = {'partition': lam.to_list(), 'd': d, 'm': m, 'n': n,
                                                     'paired': paired, 'lhs': str(rank), 'rhs': str(count)}
                            return report
    return report


# ============================================================================
# Tensor suites
# ============================================================================

def tensor_stability_cases(max_size: int) -> List[Tuple[Partition, Partition, int, int, str]]:
    """Every admissible pair of factors for the configured (d, r, kind) cases."""
    cases = []
    for d, r, kind in compute_config.TENSOR_STABILITY_CASES:
        if kind == 'spo':
            left = enumerate_partitions(max_size, col_sum_bound_d=d)
            right = enumerate_partitions(max_size, col_sum_bound_d=r)
        else:
            left = enumerate_partitions(max_size, max_length=d // 2)
            right = enumerate_partitions(max_size, max_length=r // 2)
        cases.extend((mu, gamma, d, r, kind) for mu in left for gamma in right)
    return cases


def _checks(quick: bool) -> List[Tuple[str, Callable[[], VerificationReport]]]:
    grid = compute_config.QUICK_IDENTITY_GRID if quick else compute_config.FULL_IDENTITY_GRID
    checks = [(f"{identity} d={d} m={m} n={n} L={cap}",
               lambda identity=identity, d=d, m=m, n=n, cap=cap: verify_identity(identity, d, m, n, cap))
              for identity, d, m, n, cap in grid]

    oracle_size = 3 if quick else 5
    checks.append((f"index sets |lam|<={oracle_size}",
                   lambda: index_set_oracle_check(oracle_size, 5, 8)))

    if quick:
        stability = [(Partition(mu), Partition(gamma), d, r, kind)
                     for mu, gamma, d, r, kind in compute_config.QUICK_TENSOR_GRID]
    else:
        stability = tensor_stability_cases(compute_config.TENSOR_STABILITY_MAX_SIZE)
    for mu, gamma, d, r, kind in stability:
        k = max(mu.row(1), gamma.row(1), 1)
        checks.append((f"tensor stability {mu} x {gamma} {kind}",
                       lambda mu=mu, gamma=gamma, d=d, r=r, k=k, kind=kind:
                       verify_stability(mu, gamma, d, r, k, 2, 2, kind)))

    exterior = compute_config.EXTERIOR_GRID[:3] if quick else compute_config.EXTERIOR_GRID
    for d, k, branch in exterior:
        checks.append((f"exterior d={d} k={k} {branch}",
                       lambda d=d, k=k, branch=branch: exterior_dimension_check(d, k, branch)))

    dims = [(1, 1, 1), (2, 1, 1)] if quick else [(d, m, n) for d in (1, 2, 3) for m in (1, 2, 3) for n in (1, 2, 3)]
    for d, m, n in dims:
        checks.append((f"graded dimension d={d} m={m} n={n}",
                       lambda d=d, m=m, n=n: graded_dimension_check(d, m, n, 4 if quick else 6)))

    if quick:
        return checks

    checks.append(("harmonic highest weight vectors",
                   lambda: harmonic_suite_check(*compute_config.HARMONIC_BOUNDS)))
    checks.append(("span rank of tableau vectors",
                   lambda: span_rank_check(*compute_config.SPAN_RANK_BOUNDS)))

    for family, k, w1, w2 in compute_config.PEELING_GRID:
        checks.append((f"peeling {family}{k} {w1} x {w2}",
                       lambda family=family, k=k, w1=w1, w2=w2: peeling_agreement_check(family, k, w1, w2)))

    for mu, gamma, d, r, m, n, kind, cap in compute_config.TENSOR_PRODUCT_GRID:
        checks.append((f"tensor character {mu} x {gamma} {kind} m={m} n={n} L={cap}",
                       lambda mu=mu, gamma=gamma, d=d, r=r, m=m, n=n, kind=kind, cap=cap:
                       super_character_product_check(Partition(mu), Partition(gamma), d, r, m, n, kind, cap)))
    return checks


def run_selftest(quick: bool = False, progress: bool = True) -> List[VerificationReport]:
    """
    Run the acceptance suites.

    Args:
        quick: use the reduced grids
        progress: show a tqdm progress bar on stderr

    Returns:
        One VerificationReport per check; errors become mismatch reports
    """
    reports = []
    checks = _checks(quick)
    for label, check in tqdm(checks, desc='selftest', unit='check', disable=not progress):
        try:
            report = check()
        except SupercharError as e:
            logger.error(f"Selftest check {label} raised: {e}")
            report = VerificationReport(label, first_mismatch={'error': str(e)})
        reports.append(report)
    failed = sum(1 for report in reports if not report.ok)
    logger.info(f"Selftest finished: {len(reports) - failed}/{len(reports)} checks passed")
    return reports
