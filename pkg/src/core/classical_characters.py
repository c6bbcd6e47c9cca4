#!/usr/bin/env python3
"""
SUPERCHAR - Classical Characters
Weyl characters of so(2k+1), sp(2k) and so(2k) by exact alternant division,
assembled into O(d) and Sp(d) group characters
"""

import itertools
import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from sympy import Rational

from .combinatorics import GeneralizedVector, Partition, bar_partition, column_sum_ok
from .errors import LogicFault, NonDominantWeightError, PartitionConstraintError
from .series import LaurentCharacter, PowerSeries, SeriesLayout

logger = logging.getLogger(__name__)

Doubled = Tuple[int, ...]

FAMILIES = ('B', 'C', 'D')


# ============================================================================
# Root system data
# ============================================================================

@dataclass(frozen=True)
class RootSystemCase:
    """
    Classical root system B_k, C_k or D_k in the standard epsilon basis.

    Vectors are doubled integers throughout. The Weyl group is the signed
    permutation group (even-signed for D), stored as numpy integer matrices.
    """
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise NonDominantWeightError(f"Unknown root system family: {self.family}")
        if self.rank < 0:
            raise NonDominantWeightError(f"Negative rank: {self.rank}")

    @property
    def rho(self) -> Doubled:
        """Half the sum of the standard positive roots, doubled."""
        k = self.rank
        if self.family == 'B':
            return tuple(2 * (k - i) + 1 for i in range(1, k + 1))
        if self.family == 'C':
            return tuple(2 * (k - i + 1) for i in range(1, k + 1))
        return tuple(2 * (k - i) for i in range(1, k + 1))

    @property
    def weyl_group_order(self) -> int:
        k = self.rank
        full = 2 ** k * math.factorial(k)
        return full // 2 if self.family == 'D' and k >= 1 else full

    def positive_roots(self) -> List[Tuple[int, ...]]:
        """Positive roots as integer vectors (not doubled)."""
        k = self.rank
        roots = []
        for i in range(k):
            for j in range(i + 1, k):
                for sign in (-1, 1):
                    v = [0] * k
                    v[i], v[j] = 1, sign
                    roots.append(tuple(v))
        for i in range(k):
            v = [0] * k
            if self.family == 'B':
                v[i] = 1
                roots.append(tuple(v))
            elif self.family == 'C':
                v[i] = 2
                roots.append(tuple(v))
        return roots

    def is_dominant(self, doubled: Sequence[int]) -> bool:
        v = list(doubled)
        if len(v) != self.rank:
            return False
        if self.family == 'C' and any(e % 2 for e in v):
            return False
        if len({e % 2 for e in v}) > 1:
            return False
        if any(v[i] < v[i + 1] for i in range(len(v) - 1)):
            return False
        if not v:
            return True
        if self.family == 'D':
            return len(v) < 2 or v[-2] >= abs(v[-1])
        return v[-1] >= 0

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


@lru_cache(maxsize=64)
def weyl_group(family: str, k: int) -> Tuple[np.ndarray, np.ndarray]:
    """
    All Weyl group elements as a stacked (N, k, k) int array, plus their determinants.

    Element (perm, signs) maps e_i to signs[i] * e_{perm[i]}.
    """
    matrices = []
    dets = []
    for perm in itertools.permutations(range(k)):
        perm_sign = _permutation_sign(perm)
        for signs in itertools.product((1, -1), repeat=k):
            flips = signs.count(-1)
            if family == 'D' and flips % 2:
                continue
            mat = np.zeros((k, k), dtype=np.int64)
            for i, p in enumerate(perm):
                mat[p, i] = signs[i]
            matrices.append(mat)
            dets.append(perm_sign * (-1) ** flips)
    return np.stack(matrices), np.array(dets, dtype=np.int64)


def _permutation_sign(perm: Sequence[int]) -> int:
    inversions = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


def enright_rho(family: str, k: int) -> Doubled:
    """Doubled rho for the Borel used by the Enright construction: (-1..-k) for C, (0,-1..-k+1) for D."""
    if family == 'C':
        return tuple(-2 * i for i in range(1, k + 1))
    if family == 'D':
        return tuple(-2 * (i - 1) for i in range(1, k + 1))
    raise NonDominantWeightError(f"No Enright rho for family {family}")


# ============================================================================
# Weyl characters
# ============================================================================

@dataclass(frozen=True)
class WeylCharacter:
    """
    Weight multiset of a classical module: doubled exponent vector -> multiplicity.

    Spin weights (half-integer coordinates) are allowed; to_series requires
    integral weights.
    """
    rank: int
    weights: Tuple[Tuple[Doubled, int], ...]

    @classmethod
    def from_dict(cls, rank: int, weights: Dict[Doubled, int]) -> 'WeylCharacter':
        return cls(rank, tuple(sorted((e, c) for e, c in weights.items() if c)))

    def as_dict(self) -> Dict[Doubled, int]:
        return dict(self.weights)

    def multiplicity(self, doubled: Sequence[int]) -> int:
        return self.as_dict().get(tuple(doubled), 0)

    def dimension(self) -> int:
        return sum(c for _, c in self.weights)

    def __mul__(self, other: 'WeylCharacter') -> 'WeylCharacter':
        product: Dict[Doubled, int] = {}
        for ea, ca in self.weights:
            for eb, cb in other.weights:
                key = tuple(a + b for a, b in zip(ea, eb))
                product[key] = product.get(key, 0) + ca * cb
        return WeylCharacter.from_dict(self.rank, product)

    def __add__(self, other: 'WeylCharacter') -> 'WeylCharacter':
        total = self.as_dict()
        for e, c in other.weights:
            total[e] = total.get(e, 0) + c
        return WeylCharacter.from_dict(self.rank, total)

    def __sub__(self, other: 'WeylCharacter') -> 'WeylCharacter':
        return self + other.scale(-1)

    def scale(self, factor: int) -> 'WeylCharacter':
        return WeylCharacter(self.rank, tuple((e, factor * c) for e, c in self.weights if factor))

    def is_w_invariant(self, family: str) -> bool:
        mats, _ = weyl_group(family, self.rank)
        table = self.as_dict()
        for mat in mats:
            for e, c in self.weights:
                image = tuple(int(v) for v in mat @ np.array(e, dtype=np.int64))
                if table.get(image, 0) != c:
                    return False
        return True

    def to_series(self, layout: Optional[SeriesLayout] = None, slot: str = 'x',
                  eps: int = 0) -> LaurentCharacter:
        """Laurent polynomial in the given slot, optionally times eps."""
        layout = layout or SeriesLayout(x=self.rank)
        offset = layout.slot_offset(slot)
        terms = {}
        for e, c in self.weights:
            if any(v % 2 for v in e):
                raise PartitionConstraintError("Spin weights have no Laurent polynomial character")
            exp = [0] * layout.width
            exp[offset:offset + self.rank] = [v // 2 for v in e]
            if layout.eps:
                exp[-1] = eps
            terms[tuple(exp)] = c
        return PowerSeries(layout, terms)


def exact_divide(numerator: Dict[Doubled, int], denominator: Dict[Doubled, int]) -> Dict[Doubled, int]:
    """
    Exact Laurent polynomial division by lex leading-term elimination.

    Raises:
        LogicFault: the division leaves a remainder or leaves the Newton box
    """
    if not denominator:
        raise LogicFault("Division by the zero polynomial")
    if not numerator:
        return {}
    dim = len(next(iter(denominator)))
    lead_d = max(denominator)
    lead_c = denominator[lead_d]
    low = [min(e[i] for e in numerator) - min(e[i] for e in denominator) for i in range(dim)]
    high = [max(e[i] for e in numerator) - max(e[i] for e in denominator) for i in range(dim)]

    remainder = dict(numerator)
    quotient: Dict[Doubled, int] = {}
    while remainder:
        lead_r = max(remainder)
        coeff, rest = divmod(remainder[lead_r], lead_c)
        if rest:
            raise LogicFault(f"Inexact leading coefficient division at {lead_r}")
        q_exp = tuple(a - b for a, b in zip(lead_r, lead_d))
        if any(q < lo or q > hi for q, lo, hi in zip(q_exp, low, high)):
            raise LogicFault(f"Alternant division escaped its Newton box at {q_exp}")
        quotient[q_exp] = quotient.get(q_exp, 0) + coeff
        for e, c in denominator.items():
            key = tuple(a + b for a, b in zip(q_exp, e))
            value = remainder.get(key, 0) - coeff * c
            if value:
                remainder[key] = value
            else:
                remainder.pop(key, None)
    return {e: c for e, c in quotient.items() if c}


def _alternant(family: str, k: int, doubled: Doubled) -> Dict[Doubled, int]:
    mats, dets = weyl_group(family, k)
    images = np.einsum('nij,j->ni', mats, np.array(doubled, dtype=np.int64))
    alternant: Dict[Doubled, int] = {}
    for image, det in zip(images, dets):
        key = tuple(int(v) for v in image)
        alternant[key] = alternant.get(key, 0) + int(det)
    return {e: c for e, c in alternant.items() if c}


def _as_doubled(case: RootSystemCase, weight) -> Doubled:
    if isinstance(weight, GeneralizedVector):
        doubled = weight.doubled
    elif isinstance(weight, Partition):
        doubled = tuple(2 * weight.row(i) for i in range(1, case.rank + 1))
        if weight.length > case.rank:
            raise NonDominantWeightError(f"{weight} has more than {case.rank} rows")
    else:
        doubled = GeneralizedVector.from_values(weight).doubled
    if not case.is_dominant(doubled):
        logger.error(f"Non-dominant weight {[Rational(v, 2) for v in doubled]} for {case}")
        raise NonDominantWeightError(
            f"Weight {[str(Rational(v, 2)) for v in doubled]} is not dominant integral for {case}")
    return tuple(doubled)


@lru_cache(maxsize=2048)
def _weyl_character_cached(family: str, k: int, doubled: Doubled) -> WeylCharacter:
    if k == 0:
        return WeylCharacter(0, (((), 1),))
    case = RootSystemCase(family, k)
    shifted = tuple(a + b for a, b in zip(doubled, case.rho))
    quotient = exact_divide(_alternant(family, k, shifted), _alternant(family, k, case.rho))
    return WeylCharacter.from_dict(k, quotient)


def weyl_character(case: RootSystemCase, weight) -> WeylCharacter:
    """
    Character of the irreducible module of highest weight `weight`.

    Args:
        case: root system
        weight: GeneralizedVector, Partition or sequence of (half-)integers

    Raises:
        NonDominantWeightError: weight is not dominant integral
    """
    doubled = _as_doubled(case, weight)
    character = _weyl_character_cached(case.family, case.rank, doubled)
    if any(c < 0 for _, c in character.weights):
        raise LogicFault(f"Negative weight multiplicity in character of {weight} for {case}")
    return character


def weyl_dimension(case: RootSystemCase, weight) -> int:
    """Weyl dimension formula, product over positive roots of (lam+rho, a)/(rho, a)."""
    doubled = _as_doubled(case, weight)
    shifted = [a + b for a, b in zip(doubled, case.rho)]
    value = Rational(1)
    for root in case.positive_roots():
        num = sum(r * s for r, s in zip(root, shifted))
        den = sum(r * s for r, s in zip(root, case.rho))
        value *= Rational(num, den)
    if not value.is_integer or value <= 0:
        raise LogicFault(f"Weyl dimension {value} of {weight} for {case} is not a positive integer")
    return int(value)


# ============================================================================
# O(d) and Sp(d) group characters
# ============================================================================

def _o_representative(d: int, lam: Partition) -> Partition:
    if not column_sum_ok(lam, d):
        raise PartitionConstraintError(f"O({d}) needs lam'_1 + lam'_2 <= d, got {lam}")
    return lam if 2 * lam.length <= d else bar_partition(lam, d)


def o_character(d: int, lam: Partition, with_eps: bool = True,
                layout: Optional[SeriesLayout] = None) -> LaurentCharacter:
    """
    Character of the O(d)-module labelled by lam on the maximal torus.

    For odd d the element -1 is tracked by eps (eps^|lam|) when with_eps is
    set and the layout carries an eps slot.
    """
    if d < 1:
        raise PartitionConstraintError(f"O(d) needs d >= 1, got {d}")
    rep = _o_representative(d, lam)
    k = d // 2
    layout = layout or SeriesLayout(x=k, eps=bool(with_eps and d % 2))
    if d % 2:
        eps = lam.size % 2 if (with_eps and layout.eps) else 0
        return weyl_character(RootSystemCase('B', k), rep).to_series(layout, 'x', eps)

    case = RootSystemCase('D', k)
    character = weyl_character(case, rep)
    if k and rep.length == k:
        flipped = tuple(2 * rep.row(i) for i in range(1, k)) + (-2 * rep.row(k),)
        character = character + weyl_character(case, GeneralizedVector(flipped))
    return character.to_series(layout, 'x')


def o_group_dimension(d: int, lam: Partition) -> int:
    rep = _o_representative(d, lam)
    k = d // 2
    if d % 2:
        return weyl_dimension(RootSystemCase('B', k), rep)
    dim = weyl_dimension(RootSystemCase('D', k), rep)
    return 2 * dim if k and rep.length == k else dim


def sp_group_character(d: int, lam: Partition, layout: Optional[SeriesLayout] = None) -> LaurentCharacter:
    """Character of the Sp(d)-module labelled by lam (d even, l(lam) <= d/2)."""
    if d % 2 or d < 2:
        raise PartitionConstraintError(f"Sp(d) needs even d >= 2, got {d}")
    if 2 * lam.length > d:
        raise PartitionConstraintError(f"Sp({d}) needs l(lam) <= {d // 2}, got {lam}")
    return weyl_character(RootSystemCase('C', d // 2), lam).to_series(layout or SeriesLayout(x=d // 2), 'x')


def sp_group_dimension(d: int, lam: Partition) -> int:
    if d % 2 or 2 * lam.length > d:
        raise PartitionConstraintError(f"Sp({d}) needs even d and l(lam) <= d/2, got {lam}")
    return weyl_dimension(RootSystemCase('C', d // 2), lam)
