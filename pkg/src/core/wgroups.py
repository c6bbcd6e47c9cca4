#!/usr/bin/env python3
"""
SUPERCHAR - Enright Sign Groups
Index sets of the (even) sign permutation groups attached to lam + d/2,
a brute-force oracle built from the root conditions, coset
representatives with their signs, and the sorted weights Lambda_w
"""

import itertools
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, List, Optional, Set, Tuple

import numpy as np

from .classical_characters import enright_rho
from .combinatorics import Partition, column_sum_ok
from .errors import LogicFault, PartitionConstraintError

logger = logging.getLogger(__name__)


class DualPair(Enum):
    """
    O_SP: O(d) paired with sp(2m) / spo(2m|2n), type C roots.
    SP_SO: Sp(d) paired with so(2m) / osp(2m|2n), type D roots.
    """
    O_SP = 'O'
    SP_SO = 'Sp'

    @property
    def family(self) -> str:
        return 'C' if self is DualPair.O_SP else 'D'

    @classmethod
    def from_name(cls, name: str) -> 'DualPair':
        aliases = {'O': cls.O_SP, 'spo': cls.O_SP, 'Osp': cls.O_SP,
                   'Sp': cls.SP_SO, 'osp': cls.SP_SO, 'SpO': cls.SP_SO}
        if name not in aliases:
            raise PartitionConstraintError(f"Unknown dual pair {name!r}")
        return aliases[name]


class Parity(Enum):
    FULL = 'full'
    EVEN = 'even'


@dataclass(frozen=True)
class SignGroupSpec:
    """Sign (FULL) or even sign (EVEN) permutation group on index_set, with its context."""
    index_set: Tuple[int, ...]
    parity: Parity
    pair: DualPair
    d: int
    m: int
    lam: Partition

    def canonical(self) -> Tuple[Tuple[int, ...], Parity]:
        """Equal for presentations of the same group (empty set, single index with even parity)."""
        if not self.index_set or (self.parity is Parity.EVEN and len(self.index_set) == 1):
            return (), Parity.EVEN
        return self.index_set, self.parity

    def to_json(self) -> dict:
        return {'index_set': list(self.index_set), 'parity': self.parity.value,
                'pair': self.pair.value, 'd': self.d, 'm': self.m, 'partition': self.lam.to_list()}


@dataclass(frozen=True)
class CosetElement:
    """Coset representative: sign change at `flip`, then the sorting permutation."""
    flip: Tuple[int, ...]
    permutation: Tuple[int, ...]
    sign: int

    def to_json(self) -> dict:
        return {'flip': list(self.flip), 'sign': self.sign}


# ============================================================================
# Preconditions and shifted weights
# ============================================================================

def check_pair_constraints(lam: Partition, d: int, pair: DualPair):
    if d < 1:
        raise PartitionConstraintError(f"d must be positive, got {d}")
    if pair is DualPair.O_SP:
        if not column_sum_ok(lam, d):
            raise PartitionConstraintError(f"O({d}) pair needs lam'_1 + lam'_2 <= {d}, got {lam}")
    else:
        if d % 2:
            raise PartitionConstraintError(f"Sp(d) pair needs even d, got {d}")
        if 2 * lam.length > d:
            raise PartitionConstraintError(f"Sp({d}) pair needs l(lam) <= {d // 2}, got {lam}")


def shifted_weight(lam: Partition, d: int, k: int, pair: DualPair) -> Tuple[int, ...]:
    """Doubled lam + d/2 + rho at rank k."""
    if lam.length > k:
        raise PartitionConstraintError(f"{lam} has more than {k} rows")
    rho = enright_rho(pair.family, k)
    return tuple(2 * lam.row(i) + d + rho[i - 1] for i in range(1, k + 1))


# ============================================================================
# Closed-form index sets
# ============================================================================

def closed_index_set(lam: Partition, d: int, m: int, pair: DualPair) -> SignGroupSpec:
    """
    Index set I in {1..m} and parity of the Enright sign group of lam + d/2.

    O_SP with s = l(lam):
        2s < d:  I = {1..m} minus ({1..d-s-1} and {lam_i + d - i : i <= s}), even
        2s >= d: I = ({d-s+1} and {s+1..m}) minus {lam_i + d - i : i <= d-s},
                 full when 2s = d, even otherwise
    SP_SO:       I = {1..m} minus ({1..d/2} and {lam_i + d - i + 2 : i <= d/2}), even
    """
    check_pair_constraints(lam, d, pair)
    universe = set(range(1, m + 1))

    if pair is DualPair.O_SP:
        s = lam.length
        if 2 * s < d:
            excluded = set(range(1, d - s)) | {lam.row(i) + d - i for i in range(1, s + 1)}
            index_set = universe - excluded
            parity = Parity.EVEN
        else:
            candidates = {d - s + 1} | set(range(s + 1, m + 1))
            excluded = {lam.row(i) + d - i for i in range(1, d - s + 1)}
            index_set = (candidates & universe) - excluded
            parity = Parity.FULL if 2 * s == d else Parity.EVEN
    else:
        half = d // 2
        excluded = set(range(1, half + 1)) | {lam.row(i) + d - i + 2 for i in range(1, half + 1)}
        index_set = universe - excluded
        parity = Parity.EVEN

    spec = SignGroupSpec(tuple(sorted(index_set)), parity, pair, d, m, lam)
    logger.debug(f"Closed index set for {lam}, d={d}, m={m}, {pair.value}: {spec.index_set} ({parity.value})")
    return spec


# ============================================================================
# Brute-force oracle
# ============================================================================

def _zero_roots(weight: Tuple[int, ...], long_roots: bool) -> List[Tuple[int, ...]]:
    k = len(weight)
    roots = []
    for i, j in itertools.combinations(range(k), 2):
        for si, sj in ((1, 1), (1, -1)):
            if si * weight[i] + sj * weight[j] == 0:
                v = [0] * k
                v[i], v[j] = si, sj
                roots.append(tuple(v))
    if long_roots:
        for i in range(k):
            if weight[i] == 0:
                v = [0] * k
                v[i] = 2
                roots.append(tuple(v))
    return roots


def bruteforce_wlambda(lam: Partition, d: int, m: int, pair: DualPair) -> SignGroupSpec:
    """
    Enright sign group found by scanning the roots -e_i-e_j (and -2e_i for type C).

    A root alpha is kept when <mu, alpha^> is a positive integer, alpha is
    orthogonal to every root orthogonal to mu, and (type C) alpha is short
    whenever mu has a zero coordinate.

    Raises:
        LogicFault: the kept roots do not generate a (even) sign permutation group
    """
    check_pair_constraints(lam, d, pair)
    weight = shifted_weight(lam, d, m, pair)
    type_c = pair is DualPair.O_SP
    walls = np.array(_zero_roots(weight, type_c), dtype=np.int64).reshape(-1, m)

    def orthogonal_to_walls(alpha: np.ndarray) -> bool:
        return not walls.size or not np.any(walls @ alpha)

    pairs: Set[Tuple[int, int]] = set()
    for i, j in itertools.combinations(range(m), 2):
        pairing = -(weight[i] + weight[j])
        if pairing <= 0 or pairing % 2:
            continue
        alpha = np.zeros(m, dtype=np.int64)
        alpha[i] = alpha[j] = -1
        if orthogonal_to_walls(alpha):
            pairs.add((i + 1, j + 1))

    singles: Set[int] = set()
    if type_c and 0 not in weight:
        for i in range(m):
            pairing = -weight[i]
            if pairing <= 0 or pairing % 2:
                continue
            alpha = np.zeros(m, dtype=np.int64)
            alpha[i] = -2
            if orthogonal_to_walls(alpha):
                singles.add(i + 1)

    index_set = sorted(singles | {i for p in pairs for i in p})
    missing = [p for p in itertools.combinations(index_set, 2) if p not in pairs]
    if missing or (singles and set(index_set) - singles):
        logger.error(f"Oracle roots for {lam}, d={d}, m={m} do not form a sign group: missing {missing}")
        raise LogicFault(f"Kept roots for {lam}, d={d}, m={m}, {pair.value} do not generate a sign group")

    parity = Parity.FULL if singles else Parity.EVEN
    return SignGroupSpec(tuple(index_set), parity, pair, d, m, lam)


# ============================================================================
# Coset representatives and Lambda_w
# ============================================================================

def _sorted_image(weight: Tuple[int, ...], flip: Tuple[int, ...]) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    flipped = np.array(weight, dtype=np.int64)
    for i in flip:
        flipped[i - 1] = -flipped[i - 1]
    order = np.argsort(-flipped, kind='stable')
    return tuple(int(v) for v in flipped[order]), tuple(int(p) for p in order)


def _permutation_sign(order: Tuple[int, ...]) -> int:
    inversions = sum(1 for a, b in itertools.combinations(order, 2) if a > b)
    return -1 if inversions % 2 else 1


def coset_elements(spec: SignGroupSpec, k: Optional[int] = None) -> Iterator[CosetElement]:
    """
    One coset representative per sign-change subset of I (even subsets for EVEN parity).

    When k exceeds the rank of spec the index set is recomputed at rank k.
    The sign is the determinant of the signed permutation on the coordinates.
    """
    k = spec.m if k is None else k
    if k < spec.m:
        raise PartitionConstraintError(f"Rank {k} below the rank {spec.m} of the index set")
    if k > spec.m:
        spec = closed_index_set(spec.lam, spec.d, k, spec.pair)
    weight = shifted_weight(spec.lam, spec.d, k, spec.pair)
    sizes = range(0, len(spec.index_set) + 1, 2 if spec.parity is Parity.EVEN else 1)
    for size in sizes:
        for flip in itertools.combinations(spec.index_set, size):
            _, order = _sorted_image(weight, flip)
            sign = _permutation_sign(order) * (-1) ** len(flip)
            yield CosetElement(flip, order, sign)


def lambda_w(lam: Partition, d: int, k: int, w: CosetElement, pair: DualPair) -> Tuple[Partition, int]:
    """
    Partition obtained by flipping lam + d/2 + rho at w.flip, sorting, and subtracting rho + d/2.

    Raises:
        LogicFault: the result is not a partition, or not larger than lam
    """
    weight = shifted_weight(lam, d, k, pair)
    image, _ = _sorted_image(weight, w.flip)
    rho = enright_rho(pair.family, k)
    doubled = [v - r - d for v, r in zip(image, rho)]
    if any(v % 2 or v < 0 for v in doubled):
        raise LogicFault(f"Lambda_w for flip {w.flip} of {lam} (d={d}, k={k}) is not a partition: {doubled}")
    try:
        shape = Partition(tuple(v // 2 for v in doubled))
    except PartitionConstraintError as e:
        raise LogicFault(f"Lambda_w for flip {w.flip} of {lam} is not weakly decreasing: {e}")
    if w.flip and shape.size <= lam.size:
        raise LogicFault(f"Lambda_w {shape} for flip {w.flip} is not larger than {lam}")
    return shape, w.sign
