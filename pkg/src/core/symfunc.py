#!/usr/bin/env python3
"""
SUPERCHAR - Symmetric Functions
Schur, skew Schur and hook Schur polynomials as truncated series, signed
Schur expansions, the omega involution and the product sides of the
duality character identities
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from .combinatorics import (
    Partition,
    enumerate_hook_tableaux,
    enumerate_skew_ssyt,
    enumerate_ssyt,
    in_hook,
    sub_partitions,
)
from .errors import IdentityParameterError
from .series import (
    PowerSeries,
    SeriesLayout,
    geometric_expand,
    series_mul,
    series_product,
)

logger = logging.getLogger(__name__)

__all__ = [
    'SchurExpansion',
    'schur_expand',
    'skew_schur_expand',
    'hook_schur_expand',
    'hook_tableau_series',
    'omega_schur',
    'series_mul',
    'geometric_expand',
    'duality_lhs',
    'sp_side_factor',
    'so_side_factor',
    'DUALITY_PRODUCT_IDS',
]

DUALITY_PRODUCT_IDS = ('glgl', 'o-sp', 'sp-so', 'o-spo', 'sp-osp')


# ============================================================================
# Signed Schur expansions
# ============================================================================

@dataclass
class SchurExpansion:
    """Finite signed combination of partitions, truncated at degree_cap."""
    terms: Dict[Partition, int] = field(default_factory=dict)
    degree_cap: int = 0

    def __post_init__(self):
        self.terms = {lam: c for lam, c in self.terms.items() if c and lam.size <= self.degree_cap}

    def items(self) -> List[Tuple[Partition, int]]:
        return sorted(self.terms.items(), key=lambda item: item[0].sort_key())

    def coefficient(self, lam: Partition) -> int:
        return self.terms.get(lam, 0)

    def __add__(self, other: 'SchurExpansion') -> 'SchurExpansion':
        terms = dict(self.terms)
        for lam, c in other.terms.items():
            terms[lam] = terms.get(lam, 0) + c
        return SchurExpansion(terms, min(self.degree_cap, other.degree_cap))

    def scale(self, factor: int) -> 'SchurExpansion':
        return SchurExpansion({lam: factor * c for lam, c in self.terms.items()}, self.degree_cap)

    def truncate(self, cap: int) -> 'SchurExpansion':
        return SchurExpansion(dict(self.terms), min(cap, self.degree_cap))

    def hook_series(self, layout: SeriesLayout, cap: Optional[int] = None) -> PowerSeries:
        """Sum of c * HS_lam(y; z) in the y and z slots of layout."""
        total = PowerSeries.zero(layout, cap)
        for lam, c in self.items():
            total = total + hook_schur_expand(lam, layout.y, layout.z, layout, cap).scale(c)
        return total

    def to_json(self) -> List[dict]:
        return [{'partition': lam.to_list(), 'coeff': str(c)} for lam, c in self.items()]

    def __eq__(self, other) -> bool:
        if not isinstance(other, SchurExpansion):
            return NotImplemented
        return self.terms == other.terms


def omega_schur(expansion: SchurExpansion) -> SchurExpansion:
    """s_lam -> s_lam' termwise."""
    return SchurExpansion({lam.conjugate(): c for lam, c in expansion.terms.items()},
                          expansion.degree_cap)


# ============================================================================
# Schur polynomials
# ============================================================================

@lru_cache(maxsize=4096)
def _schur_weights(lam: Partition, k: int) -> Tuple[Tuple[Tuple[int, ...], int], ...]:
    counts: Dict[Tuple[int, ...], int] = {}
    for tableau in enumerate_ssyt(lam, k):
        exps = [0] * k
        for row in tableau:
            for letter in row:
                exps[letter - 1] += 1
        key = tuple(exps)
        counts[key] = counts.get(key, 0) + 1
    return tuple(sorted(counts.items()))


@lru_cache(maxsize=4096)
def _skew_weights(lam: Partition, mu: Partition, k: int) -> Tuple[Tuple[Tuple[int, ...], int], ...]:
    counts: Dict[Tuple[int, ...], int] = {}
    for exps in enumerate_skew_ssyt(lam, mu, k):
        counts[exps] = counts.get(exps, 0) + 1
    return tuple(sorted(counts.items()))


def _embed(weights, layout: SeriesLayout, slot: str, cap: Optional[int]) -> PowerSeries:
    offset = layout.slot_offset(slot)
    terms = {}
    for exps, c in weights:
        exp = [0] * layout.width
        exp[offset:offset + len(exps)] = exps
        terms[tuple(exp)] = c
    return PowerSeries(layout, terms, cap)


def schur_expand(lam: Partition, k: int, layout: Optional[SeriesLayout] = None,
                 slot: str = 'y', cap: Optional[int] = None) -> PowerSeries:
    """s_lam in k variables placed in the given slot (default: a y-only layout)."""
    layout = layout or SeriesLayout(y=k)
    if layout.slot_size(slot) < k:
        raise IdentityParameterError(f"Slot {slot} of {layout} has fewer than {k} variables")
    return _embed(_schur_weights(lam, k), layout, slot, cap)


def skew_schur_expand(lam: Partition, mu: Partition, k: int, layout: Optional[SeriesLayout] = None,
                      slot: str = 'y', cap: Optional[int] = None) -> PowerSeries:
    """s_{lam/mu} in k variables; raises PartitionConstraintError unless mu is inside lam."""
    layout = layout or SeriesLayout(y=k)
    return _embed(_skew_weights(lam, mu, k), layout, slot, cap)


# ============================================================================
# Hook Schur polynomials
# ============================================================================

@lru_cache(maxsize=4096)
def _hook_weights(lam: Partition, m: int, n: int) -> Tuple[Tuple[Tuple[int, ...], int], ...]:
    """HS_lam(y; z) = sum over mu in lam of s_mu(y) s_{lam'/mu'}(z), as (y..., z...) weights."""
    counts: Dict[Tuple[int, ...], int] = {}
    if not in_hook(lam, m, n):
        return ()
    lam_conj = lam.conjugate()
    for mu in sub_partitions(lam):
        if mu.length > m:
            continue
        for y_exp, cy in _schur_weights(mu, m):
            for z_exp, cz in _skew_weights(lam_conj, mu.conjugate(), n):
                key = y_exp + z_exp
                counts[key] = counts.get(key, 0) + cy * cz
    return tuple(sorted((k, c) for k, c in counts.items() if c))


@lru_cache(maxsize=4096)
def _hook_tableau_weights(lam: Partition, m: int, n: int) -> Tuple[Tuple[Tuple[int, ...], int], ...]:
    counts: Dict[Tuple[int, ...], int] = {}
    for tableau in enumerate_hook_tableaux(lam, m, n):
        key = tableau.weight(m, n)
        counts[key] = counts.get(key, 0) + 1
    return tuple(sorted(counts.items()))


def _embed_hook(weights, m: int, layout: SeriesLayout, cap: Optional[int]) -> PowerSeries:
    y0, z0 = layout.slot_offset('y'), layout.slot_offset('z')
    terms = {}
    for exps, c in weights:
        exp = [0] * layout.width
        exp[y0:y0 + m] = exps[:m]
        exp[z0:z0 + len(exps) - m] = exps[m:]
        terms[tuple(exp)] = c
    return PowerSeries(layout, terms, cap)


def hook_schur_expand(lam: Partition, m: int, n: int, layout: Optional[SeriesLayout] = None,
                      cap: Optional[int] = None) -> PowerSeries:
    """
    Hook Schur polynomial HS_lam(y_1..y_m; z_1..z_n).

    Zero exactly when lam lies outside the (m|n)-hook.
    """
    layout = layout or SeriesLayout(y=m, z=n)
    if layout.y < m or layout.z < n:
        raise IdentityParameterError(f"Layout {layout} too small for ({m}|{n}) variables")
    return _embed_hook(_hook_weights(lam, m, n), m, layout, cap)


def hook_tableau_series(lam: Partition, m: int, n: int, layout: Optional[SeriesLayout] = None,
                        cap: Optional[int] = None) -> PowerSeries:
    """Weight generating function of the (m|n)-semistandard tableaux of shape lam."""
    layout = layout or SeriesLayout(y=m, z=n)
    return _embed_hook(_hook_tableau_weights(lam, m, n), m, layout, cap)


# ============================================================================
# Product sides of the duality identities
# ============================================================================

def _one_plus(layout: SeriesLayout, exp, cap) -> PowerSeries:
    return PowerSeries(layout, {(0,) * layout.width: 1, exp: 1}, cap)


def sp_side_factor(layout: SeriesLayout, cap: int) -> PowerSeries:
    """prod (1 + y_i z_l) / (prod_{i<=j} (1 - y_i y_j) prod_{l<k} (1 - z_l z_k))."""
    return _side_factor(layout, cap, y_diagonal=True)


def so_side_factor(layout: SeriesLayout, cap: int) -> PowerSeries:
    """prod (1 + y_i z_l) / (prod_{i<j} (1 - y_i y_j) prod_{l<=k} (1 - z_l z_k))."""
    return _side_factor(layout, cap, y_diagonal=False)


def _side_factor(layout: SeriesLayout, cap: int, y_diagonal: bool) -> PowerSeries:
    m, n = layout.y, layout.z
    factors = []
    for i in range(1, m + 1):
        for l in range(1, n + 1):
            factors.append(_one_plus(layout, layout.build(y=_unit(m, i), z=_unit(n, l)), cap))
    for i in range(1, m + 1):
        for j in range(i if y_diagonal else i + 1, m + 1):
            y = [a + b for a, b in zip(_unit(m, i), _unit(m, j))]
            factors.append(geometric_expand(layout.build(y=y), layout, cap))
    for l in range(1, n + 1):
        for k in range(l + 1 if y_diagonal else l, n + 1):
            z = [a + b for a, b in zip(_unit(n, l), _unit(n, k))]
            factors.append(geometric_expand(layout.build(z=z), layout, cap))
    return series_product(factors, layout, cap)


def _unit(size: int, index: int) -> List[int]:
    vec = [0] * size
    vec[index - 1] = 1
    return vec


def duality_layout(which: str, d: int, m: int, n: int) -> SeriesLayout:
    """Variable layout used by both sides of the identity `which`."""
    if which == 'glgl':
        return SeriesLayout(x=d, y=m, z=n)
    if which in ('o-sp', 'o-spo'):
        return SeriesLayout(x=d // 2, y=m, z=n if which == 'o-spo' else 0, eps=bool(d % 2))
    if which in ('sp-so', 'sp-osp'):
        return SeriesLayout(x=d // 2, y=m, z=n if which == 'sp-osp' else 0)
    raise IdentityParameterError(f"No product side for identity {which!r}")


def duality_lhs(which: str, d: int, m: int, n: int, cap: int) -> PowerSeries:
    """
    Product side of a duality character identity, truncated in (y, z)-degree.

    Identity ids:
        glgl:   prod_i prod_l (1 + x_i z_l) / prod_i prod_j (1 - x_i y_j)
        o-sp:   prod 1/((1 - eps x_i y_j)(1 - eps x_i^-1 y_j)), times prod_j 1/(1 - eps y_j) for odd d
        sp-so:  prod 1/((1 - x_i y_j)(1 - x_i^-1 y_j)), d even
        o-spo:  o-sp times prod (1 + eps x_i z_l)(1 + eps x_i^-1 z_l) (and (1 + eps z_l) for odd d)
        sp-osp: sp-so times prod (1 + x_i z_l)(1 + x_i^-1 z_l), d even

    eps appears only for odd d.
    """
    if which not in DUALITY_PRODUCT_IDS:
        raise IdentityParameterError(f"Unknown product identity {which!r}; expected one of {DUALITY_PRODUCT_IDS}")
    if min(d, m, n) < 0 or d < 1:
        raise IdentityParameterError(f"Invalid parameters d={d}, m={m}, n={n}")
    if which in ('sp-so', 'sp-osp') and d % 2:
        raise IdentityParameterError(f"{which} requires even d, got d={d}")

    layout = duality_layout(which, d, m, n)
    z_count = layout.z
    factors: List[PowerSeries] = []

    if which == 'glgl':
        for i in range(1, d + 1):
            for l in range(1, n + 1):
                factors.append(_one_plus(layout, layout.build(x=_unit(d, i), z=_unit(n, l)), cap))
            for j in range(1, m + 1):
                factors.append(geometric_expand(layout.build(x=_unit(d, i), y=_unit(m, j)), layout, cap))
        return series_product(factors, layout, cap)

    rank = d // 2
    eps = d % 2
    for i in range(1, rank + 1):
        for sign in (1, -1):
            x = [sign * e for e in _unit(rank, i)]
            for j in range(1, m + 1):
                factors.append(geometric_expand(layout.build(x=x, y=_unit(m, j), eps=eps), layout, cap))
            for l in range(1, z_count + 1):
                factors.append(_one_plus(layout, layout.build(x=x, z=_unit(z_count, l), eps=eps), cap))
    if eps:
        for j in range(1, m + 1):
            factors.append(geometric_expand(layout.build(y=_unit(m, j), eps=1), layout, cap))
        for l in range(1, z_count + 1):
            factors.append(_one_plus(layout, layout.build(z=_unit(z_count, l), eps=1), cap))
    return series_product(factors, layout, cap)
