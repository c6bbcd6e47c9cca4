#!/usr/bin/env python3
"""
SUPERCHAR - Super Characters
Enright Schur sums, classical unitary characters, truncated hook Schur
sums, spo(2m|2n) / osp(2m|2n) characters, trivial-module closed forms and
characters of the invariant algebras
"""

import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Tuple

from sympy import Rational

from .combinatorics import Partition, bar_partition, enumerate_partitions, in_hook
from .errors import LogicFault, PartitionConstraintError
from .series import PowerSeries, SeriesLayout, geometric_expand, series_product
from .symfunc import SchurExpansion, schur_expand, so_side_factor, sp_side_factor
from .wgroups import DualPair, check_pair_constraints, closed_index_set, coset_elements, lambda_w

logger = logging.getLogger(__name__)


@dataclass
class CharacterResult:
    """
    Character (y z^-1)^(d/2) * series of a unitarizable module.

    combined_pair marks the d-even spo case where the series is the sum of
    the modules of lam and its bar partition.
    """
    prefactor: Dict[str, Rational]
    series: PowerSeries
    lam: Partition
    d: int
    m: int
    n: int
    cap: Optional[int]
    rank_used: Optional[int] = None
    combined_pair: bool = False
    kind: str = 'spo'

    def to_json(self) -> dict:
        return {
            'prefactor': {slot: str(value) for slot, value in self.prefactor.items()},
            'combined_pair': self.combined_pair,
            'rank_used': self.rank_used,
            'series': self.series.to_json(),
        }


@dataclass
class HookSchurSum:
    """Signed partition list together with its truncated hook Schur series."""
    expansion: SchurExpansion
    series: PowerSeries
    rank_used: Optional[int] = None
    shapes: List[Tuple[Partition, int]] = field(default_factory=list)


def _prefactor(d: int) -> Dict[str, Rational]:
    return {'y': Rational(d, 2), 'z': Rational(-d, 2)}


# ============================================================================
# Classical (n = 0) characters
# ============================================================================

def enright_schur_sum(lam: Partition, d: int, m: int, pair: DualPair) -> SchurExpansion:
    """
    Signed Schur expansion sum_w sign(w) s_{Lambda_w} over coset representatives at rank m.

    Shapes with more than m rows vanish in m variables and are dropped.
    """
    if lam.length > m:
        raise PartitionConstraintError(f"{lam} has more than m={m} rows")
    spec = closed_index_set(lam, d, m, pair)
    terms: Dict[Partition, int] = {}
    for w in coset_elements(spec):
        shape, sign = lambda_w(lam, d, m, w, pair)
        if shape.length > m:
            continue
        if shape in terms:
            logger.warning(f"Lambda_w collision at {shape} for {lam}, d={d}, m={m}")
        terms[shape] = terms.get(shape, 0) + sign
    cap = max((shape.size for shape in terms), default=0)
    expansion = SchurExpansion(terms, cap)
    if expansion.coefficient(lam) != 1:
        raise LogicFault(f"Enright sum of {lam} does not start with +s_lam: {expansion.terms}")
    return expansion


def _classical_denominator(layout: SeriesLayout, cap: int, diagonal: bool) -> PowerSeries:
    m = layout.y
    factors = []
    for i in range(1, m + 1):
        for j in range(i if diagonal else i + 1, m + 1):
            y = [0] * m
            y[i - 1] += 1
            y[j - 1] += 1
            factors.append(geometric_expand(layout.build(y=y), layout, cap))
    return series_product(factors, layout, cap)


def classical_unitary_character(lam: Partition, d: int, m: int, pair: DualPair, cap: int,
                                layout: Optional[SeriesLayout] = None) -> CharacterResult:
    """
    Character of the sp(2m) (O_SP) or so(2m) (SP_SO) module dual to lam.

    series = (Enright Schur sum in y_1..y_m) / prod (1 - y_i y_j), i <= j for
    sp and i < j for so, truncated at cap.
    """
    check_pair_constraints(lam, d, pair)
    if lam.length > m:
        raise PartitionConstraintError(f"{lam} has more than m={m} rows")
    layout = layout or SeriesLayout(y=m)
    if m == 0:
        return CharacterResult(_prefactor(d), PowerSeries.one(layout, cap), lam, d, m, 0, cap,
                               kind='sp' if pair is DualPair.O_SP else 'so')
    numerator = PowerSeries.zero(layout, cap)
    for shape, sign in enright_schur_sum(lam, d, m, pair).items():
        if shape.size <= cap:
            numerator = numerator + schur_expand(shape, m, layout, 'y', cap).scale(sign)
    series = numerator * _classical_denominator(layout, cap, diagonal=pair is DualPair.O_SP)
    return CharacterResult(_prefactor(d), series, lam, d, m, 0, cap,
                           kind='sp' if pair is DualPair.O_SP else 'so')


# ============================================================================
# Truncated hook Schur sums
# ============================================================================

def truncation_rank(lam: Partition, d: int, cap: int, pair: DualPair) -> int:
    """
    Smallest k > d whose congruence degree exceeds cap.

    For the Sp pair the first shape lost at enumeration rank k - 1 can have
    size 2k + |lam| - d - 2, so the bound is taken one step further.
    """
    s = lam.length
    k = d + 1
    while True:
        if pair is DualPair.O_SP:
            bound = 2 * k + lam.size - 2 * s - 1 if 2 * s > d else 2 * k + lam.size - d
        else:
            bound = 2 * k + lam.size - d - 3
        if bound > cap:
            return k
        k += 1


def hs_series(lam: Partition, d: int, m: int, n: int, cap: int, pair: DualPair,
              rank: Optional[int] = None, layout: Optional[SeriesLayout] = None) -> HookSchurSum:
    """
    Degree-cap truncation of the formal hook Schur sum attached to lam.

    Cosets are enumerated at rank k - 1 where k is the truncation rank (or
    the given rank, which must not be smaller). Shapes outside the (m|n)-hook
    or above the cap contribute nothing.
    """
    check_pair_constraints(lam, d, pair)
    minimal = truncation_rank(lam, d, cap, pair)
    k = minimal if rank is None else rank
    if k < minimal:
        raise PartitionConstraintError(f"Rank {k} is below the truncation rank {minimal}")
    layout = layout or SeriesLayout(y=m, z=n)

    spec = closed_index_set(lam, d, k - 1, pair)
    terms: Dict[Partition, int] = {}
    kept = 0
    for w in coset_elements(spec):
        shape, sign = lambda_w(lam, d, k - 1, w, pair)
        if shape.size > cap or not in_hook(shape, m, n):
            continue
        kept += 1
        if shape in terms:
            logger.warning(f"Lambda_w collision at {shape} for {lam}, d={d}, rank {k - 1}")
        terms[shape] = terms.get(shape, 0) + sign
    logger.debug(f"hs_series {lam} d={d} ({m}|{n}) cap={cap}: rank {k}, {kept} shapes kept")

    expansion = SchurExpansion(terms, cap)
    return HookSchurSum(expansion, expansion.hook_series(layout, cap), k, expansion.items())


# ============================================================================
# Super characters
# ============================================================================

def spo_character(lam: Partition, d: int, m: int, n: int, cap: int) -> CharacterResult:
    """
    Character of the spo(2m|2n)-module dual to the O(d)-module lam.

    For even d with bar(lam) != lam only the sum of the two modules is
    determined, and the result is flagged combined_pair.
    """
    check_pair_constraints(lam, d, DualPair.O_SP)
    if not in_hook(lam, m, n):
        raise PartitionConstraintError(f"{lam} does not lie in the ({m}|{n})-hook")
    layout = SeriesLayout(y=m, z=n)
    hs = hs_series(lam, d, m, n, cap, DualPair.O_SP, layout=layout)
    total = hs.series
    combined = False
    if d % 2 == 0:
        partner = bar_partition(lam, d)
        if partner != lam:
            combined = True
            total = total + hs_series(partner, d, m, n, cap, DualPair.O_SP, layout=layout).series
    series = total * sp_side_factor(layout, cap)
    _assert_character(series, lam, 'spo')
    return CharacterResult(_prefactor(d), series, lam, d, m, n, cap, hs.rank_used, combined, 'spo')


def osp_character(lam: Partition, d: int, m: int, n: int, cap: int) -> CharacterResult:
    """Character of the osp(2m|2n)-module dual to the Sp(d)-module lam."""
    check_pair_constraints(lam, d, DualPair.SP_SO)
    if not in_hook(lam, m, n):
        raise PartitionConstraintError(f"{lam} does not lie in the ({m}|{n})-hook")
    layout = SeriesLayout(y=m, z=n)
    hs = hs_series(lam, d, m, n, cap, DualPair.SP_SO, layout=layout)
    series = hs.series * so_side_factor(layout, cap)
    _assert_character(series, lam, 'osp')
    return CharacterResult(_prefactor(d), series, lam, d, m, n, cap, hs.rank_used, False, 'osp')


def module_series(lam: Partition, d: int, m: int, n: int, cap: int, pair: DualPair,
                  layout: Optional[SeriesLayout] = None) -> PowerSeries:
    """hs_series(lam) times the pair's side factor, without the bar-partition pairing."""
    layout = layout or SeriesLayout(y=m, z=n)
    hs = hs_series(lam, d, m, n, cap, pair, layout=layout)
    side = sp_side_factor(layout, cap) if pair is DualPair.O_SP else so_side_factor(layout, cap)
    return hs.series * side


def _assert_character(series: PowerSeries, lam: Partition, kind: str):
    if not series.has_nonnegative_coefficients():
        logger.error(f"{kind} character of {lam} has negative coefficients: {series.pretty()}")
        raise LogicFault(f"{kind} character of {lam} has a negative coefficient")


# ============================================================================
# Trivial module and invariant algebras
# ============================================================================

def _tuples(first: int, last: int, even_length: bool) -> Iterator[Tuple[int, ...]]:
    for length in range(0, max(last - first + 1, 0) + 1):
        if even_length and length % 2:
            continue
        yield from itertools.combinations(range(first, last + 1), length)


def _tail_shape(indices: Tuple[int, ...], head: List[int]) -> Partition:
    l = len(indices)
    rows = list(head)
    previous = 0
    for t in range(l):
        rows.extend([l - t] * (indices[t] - previous - 1))
        previous = indices[t]
    return Partition(tuple(rows))


def trivial_shape(pair: DualPair, d: int, indices: Tuple[int, ...]) -> Partition:
    """
    Shape attached to an index tuple i_1 < ... < i_l.

    O_SP: rows i_l-d+1, i_{l-1}-d+2, ..., i_1-d+l, then l-t repeated i_{t+1}-i_t-1 times.
    SP_SO: rows i_l-d-1, i_{l-1}-d, ..., i_1-d+l-2, then the same tail.
    """
    l = len(indices)
    offset = 0 if pair is DualPair.O_SP else -2
    head = [indices[l - t] - d + t + offset for t in range(1, l + 1)]
    return _tail_shape(indices, head)


def trivial_hs(pair: DualPair, d: int, m: int, n: int, cap: int,
               layout: Optional[SeriesLayout] = None) -> HookSchurSum:
    """
    Closed form of the hook Schur sum of the trivial module.

    O_SP: tuples d <= i_1 < ... < i_l with l even; SP_SO: tuples d+2 <= i_1 < ...
    Each contributes (-1)^(l + sum i) HS_shape. The shape size is
    2*sum(i) - l*d (O_SP) or 2*sum(i) - l*(d+2) (SP_SO), at least
    2*i_l - d (resp. 2*i_l - d - 2), which bounds i_l.
    """
    if pair is DualPair.SP_SO and d % 2:
        raise PartitionConstraintError(f"Sp(d) pair needs even d, got {d}")
    layout = layout or SeriesLayout(y=m, z=n)
    if pair is DualPair.O_SP:
        first, last, shift = d, (cap + d) // 2, d
    else:
        first, last, shift = d + 2, (cap + d + 2) // 2, d + 2

    terms: Dict[Partition, int] = {}
    for indices in _tuples(first, last, even_length=pair is DualPair.O_SP):
        shape = trivial_shape(pair, d, indices)
        expected = 2 * sum(indices) - len(indices) * shift
        if shape.size != expected:
            raise LogicFault(f"Shape {shape} of {indices} has size {shape.size}, expected {expected}")
        if shape.size > cap or not in_hook(shape, m, n):
            continue
        sign = -1 if (len(indices) + sum(indices)) % 2 else 1
        terms[shape] = terms.get(shape, 0) + sign
    expansion = SchurExpansion(terms, cap)
    return HookSchurSum(expansion, expansion.hook_series(layout, cap), None, expansion.items())


def trivial_character(pair: DualPair, d: int, m: int, n: int, cap: int) -> CharacterResult:
    """Full character of the module dual to the trivial representation, via trivial_hs."""
    layout = SeriesLayout(y=m, z=n)
    hs = trivial_hs(pair, d, m, n, cap, layout)
    side = sp_side_factor(layout, cap) if pair is DualPair.O_SP else so_side_factor(layout, cap)
    return CharacterResult(_prefactor(d), hs.series * side, Partition(), d, m, n, cap,
                           kind='spo' if pair is DualPair.O_SP else 'osp')


def invariants_character(group: str, d: int, m: int, n: int, cap: int,
                         layout: Optional[SeriesLayout] = None) -> PowerSeries:
    """
    Character of the O(d) (group='O') or Sp(d) (group='Sp') invariants.

    Sum of HS_lam over lam with l(lam) <= d in the (m|n)-hook having even
    rows (O) or even columns (Sp).
    """
    if group not in ('O', 'Sp'):
        raise PartitionConstraintError(f"Unknown group {group!r}")
    layout = layout or SeriesLayout(y=m, z=n)
    family = enumerate_partitions(cap, max_length=d, even_rows=group == 'O',
                                  even_cols=group == 'Sp', hook=(m, n))
    return SchurExpansion({lam: 1 for lam in family}, cap).hook_series(layout, cap)
