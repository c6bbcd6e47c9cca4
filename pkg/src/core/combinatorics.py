#!/usr/bin/env python3
"""
SUPERCHAR - Partition Combinatorics
Partitions, doubled-integer weight vectors, hooks, the bar operation,
highest weight labels and (m|n)-semistandard tableau enumeration
"""

import logging
import re
from dataclasses import dataclass
from typing import Iterator, List, NamedTuple, Optional, Sequence, Tuple

from sympy import Rational

from .errors import PartitionConstraintError

logger = logging.getLogger(__name__)

EVEN = 0
ODD = 1

_PARTITION_PATTERN = re.compile(r'^\s*\[\s*(\d+\s*(,\s*\d+\s*)*)?\]\s*$')


# ============================================================================
# Partitions
# ============================================================================

@dataclass(frozen=True)
class Partition:
    """
    Weakly decreasing finite sequence of non-negative integers.

    Trailing zeros are stripped on construction, so Partition((2, 1, 0))
    and Partition((2, 1)) compare equal and hash identically.
    """
    rows: Tuple[int, ...] = ()

    def __post_init__(self):
        rows = tuple(int(r) for r in self.rows)
        if any(r < 0 for r in rows):
            raise PartitionConstraintError(f"Negative row in partition: {rows}")
        if any(rows[i] < rows[i + 1] for i in range(len(rows) - 1)):
            raise PartitionConstraintError(f"Rows not weakly decreasing: {rows}")
        while rows and rows[-1] == 0:
            rows = rows[:-1]
        object.__setattr__(self, 'rows', rows)

    @property
    def size(self) -> int:
        return sum(self.rows)

    @property
    def length(self) -> int:
        return len(self.rows)

    def row(self, i: int) -> int:
        """1-based row length, 0 past the last row."""
        return self.rows[i - 1] if 1 <= i <= len(self.rows) else 0

    def conjugate(self) -> 'Partition':
        if not self.rows:
            return Partition()
        return Partition(tuple(sum(1 for r in self.rows if r > j) for j in range(self.rows[0])))

    def col(self, j: int) -> int:
        """1-based column length."""
        return sum(1 for r in self.rows if r >= j) if j >= 1 else 0

    def contains(self, other: 'Partition') -> bool:
        return other.length <= self.length and all(
            other.row(i) <= self.row(i) for i in range(1, other.length + 1))

    def cells(self) -> List[Tuple[int, int]]:
        """Row-major list of (row, column) cells, 0-based."""
        return [(i, j) for i, r in enumerate(self.rows) for j in range(r)]

    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        return (self.size, tuple(-r for r in self.rows))

    def to_list(self) -> List[int]:
        return list(self.rows)

    def __str__(self) -> str:
        return '(' + ','.join(str(r) for r in self.rows) + ')'


def parse_partition(text: str) -> Partition:
    """Parse the command-line syntax "[3,1]" (and "[]" for the empty partition)."""
    if not _PARTITION_PATTERN.match(text):
        raise PartitionConstraintError(f"Cannot parse partition {text!r}; expected e.g. [3,1] or []")
    body = text.strip()[1:-1].strip()
    if not body:
        return Partition()
    return Partition(tuple(int(part) for part in body.split(',')))


def conjugate(lam: Partition) -> Partition:
    return lam.conjugate()


def in_hook(lam: Partition, m: int, n: int) -> bool:
    """True iff lam fits in the (m|n)-hook, i.e. lam_{m+1} <= n."""
    return lam.row(m + 1) <= n


def column_sum_ok(lam: Partition, d: int) -> bool:
    return lam.col(1) + lam.col(2) <= d


def bar_partition(lam: Partition, d: int) -> Partition:
    """Replace the first column of lam by a column of length d - lam'_1."""
    if not column_sum_ok(lam, d):
        raise PartitionConstraintError(
            f"bar_partition needs lam'_1 + lam'_2 <= d; got {lam} with d={d}")
    cols = list(lam.conjugate().rows) or [0]
    cols[0] = d - cols[0]
    return Partition(tuple(cols)).conjugate()


# ============================================================================
# Generalized (doubled-integer) vectors
# ============================================================================

@dataclass(frozen=True)
class GeneralizedVector:
    """
    Weight vector stored as doubled integers: entry value = doubled / 2.

    All entries must be integers or all must be half-integers.
    """
    doubled: Tuple[int, ...] = ()

    def __post_init__(self):
        doubled = tuple(int(v) for v in self.doubled)
        if len({v % 2 for v in doubled}) > 1:
            raise PartitionConstraintError(
                f"Mixed integer and half-integer entries: {[Rational(v, 2) for v in doubled]}")
        object.__setattr__(self, 'doubled', doubled)

    @classmethod
    def from_values(cls, values: Sequence) -> 'GeneralizedVector':
        doubled = []
        for v in values:
            twice = Rational(v) * 2
            if not twice.is_integer:
                raise PartitionConstraintError(f"Entry {v} is not a multiple of 1/2")
            doubled.append(int(twice))
        return cls(tuple(doubled))

    @classmethod
    def from_partition(cls, lam: Partition, length: int) -> 'GeneralizedVector':
        return cls(tuple(2 * lam.row(i) for i in range(1, length + 1)))

    def values(self) -> Tuple[Rational, ...]:
        return tuple(Rational(v, 2) for v in self.doubled)

    @property
    def is_integral(self) -> bool:
        return all(v % 2 == 0 for v in self.doubled)

    def __len__(self) -> int:
        return len(self.doubled)

    def __add__(self, other: 'GeneralizedVector') -> 'GeneralizedVector':
        return GeneralizedVector(tuple(a + b for a, b in zip(self.doubled, other.doubled)))

    def __sub__(self, other: 'GeneralizedVector') -> 'GeneralizedVector':
        return GeneralizedVector(tuple(a - b for a, b in zip(self.doubled, other.doubled)))

    def __neg__(self) -> 'GeneralizedVector':
        return GeneralizedVector(tuple(-a for a in self.doubled))

    def __str__(self) -> str:
        return '(' + ','.join(str(v) for v in self.values()) + ')'


def half_vector(m: int, n: int) -> GeneralizedVector:
    """The (m+n)-tuple (1/2,...,1/2; -1/2,...,-1/2)."""
    return GeneralizedVector((1,) * m + (-1,) * n)


# ============================================================================
# Highest weight labels
# ============================================================================

def glmn_labels(lam: Partition, m: int, n: int) -> Tuple[int, ...]:
    """gl(m|n) highest weight (lam_1..lam_m; <lam'_1 - m>, ..., <lam'_n - m>)."""
    if not in_hook(lam, m, n):
        raise PartitionConstraintError(f"{lam} does not lie in the ({m}|{n})-hook")
    even = tuple(lam.row(i) for i in range(1, m + 1))
    odd = tuple(max(lam.col(j) - m, 0) for j in range(1, n + 1))
    return even + odd


def dynkin_labels(mu: Sequence, m: int, kind: str) -> Tuple:
    """
    Labels of the spo(2m|2n) or osp(2m|2n) module of gl(m|n)-highest weight mu.

    Works for any entries supporting + and - (ints, sympy Rationals, symbols).

    Args:
        mu: weight with m even and n odd coordinates
        m: number of even coordinates
        kind: 'spo' or 'osp'

    Returns:
        Tuple of m + n labels
    """
    mu = list(mu)
    if kind == 'spo':
        if m < 1:
            raise PartitionConstraintError("spo labels need m >= 1")
        first = -mu[0]
    elif kind == 'osp':
        if m < 2:
            raise PartitionConstraintError("osp labels need m >= 2")
        first = -mu[0] - mu[1]
    else:
        raise PartitionConstraintError(f"Unknown superalgebra kind: {kind}")

    labels = [first]
    for i in range(1, len(mu)):
        if i == m:
            labels.append(mu[i - 1] + mu[i])
        else:
            labels.append(mu[i - 1] - mu[i])
    return tuple(labels)


def highest_weight_labels(lam: Partition, d: int, m: int, n: int, kind: str) -> Tuple:
    """Labels of the Howe-dual module with gl(m|n)-highest weight lam + d/2 * (1..1; -1..-1)."""
    shift = half_vector(m, n).values()
    mu = [Rational(a) + d * s for a, s in zip(glmn_labels(lam, m, n), shift)]
    return dynkin_labels(mu, m, kind)


# ============================================================================
# Partition enumeration
# ============================================================================

def _partitions_of(total: int, max_part: int) -> Iterator[Tuple[int, ...]]:
    """Partitions of total with parts <= max_part, lexicographically descending."""
    if total == 0:
        yield ()
        return
    for first in range(min(total, max_part), 0, -1):
        for rest in _partitions_of(total - first, first):
            yield (first,) + rest


def enumerate_partitions(max_size: int,
                         max_length: Optional[int] = None,
                         col_sum_bound_d: Optional[int] = None,
                         even_rows: bool = False,
                         even_cols: bool = False,
                         hook: Optional[Tuple[int, int]] = None,
                         min_size: int = 0) -> List[Partition]:
    """
    All partitions with min_size <= |lam| <= max_size meeting every given constraint.

    Ordered by size, then lexicographically descending.
    """
    found = []
    for total in range(max(min_size, 0), max_size + 1):
        for rows in _partitions_of(total, total):
            lam = Partition(rows)
            if max_length is not None and lam.length > max_length:
                continue
            if col_sum_bound_d is not None and not column_sum_ok(lam, col_sum_bound_d):
                continue
            if even_rows and any(r % 2 for r in lam.rows):
                continue
            if even_cols and any(c % 2 for c in lam.conjugate().rows):
                continue
            if hook is not None and not in_hook(lam, *hook):
                continue
            found.append(lam)
    return found


def sub_partitions(lam: Partition) -> List[Partition]:
    """All mu contained in lam."""
    def rec(i: int, bound: int) -> Iterator[Tuple[int, ...]]:
        if i > lam.length:
            yield ()
            return
        for r in range(min(bound, lam.row(i)), -1, -1):
            for rest in rec(i + 1, r):
                yield (r,) + rest
    return [Partition(rows) for rows in rec(1, lam.row(1))]


# ============================================================================
# (m|n)-semistandard tableaux
# ============================================================================

class Letter(NamedTuple):
    """Tableau letter; even letters (y_i) precede odd letters (z_k)."""
    parity: int
    index: int

    def to_json(self) -> dict:
        return {'even' if self.parity == EVEN else 'odd': self.index}

    def __str__(self) -> str:
        return f"{'y' if self.parity == EVEN else 'z'}{self.index}"


@dataclass(frozen=True)
class HookTableau:
    """Filling of a Young diagram by even letters 1..m and odd letters 1..n."""
    shape: Partition
    entries: Tuple[Tuple[Letter, ...], ...]

    def column(self, j: int) -> Tuple[Letter, ...]:
        """Letters of the 1-based column j, top to bottom."""
        return tuple(row[j - 1] for row in self.entries if len(row) >= j)

    def weight(self, m: int, n: int) -> Tuple[int, ...]:
        """Exponent vector (y_1..y_m, z_1..z_n) of the tableau monomial."""
        exps = [0] * (m + n)
        for row in self.entries:
            for letter in row:
                offset = 0 if letter.parity == EVEN else m
                exps[offset + letter.index - 1] += 1
        return tuple(exps)

    def to_json(self) -> List[List[dict]]:
        return [[letter.to_json() for letter in row] for row in self.entries]

    def __str__(self) -> str:
        return '/'.join(''.join(str(letter) for letter in row) for row in self.entries)


def _hook_filling_ok(letter: Letter, left: Optional[Letter], above: Optional[Letter]) -> bool:
    if left is not None:
        if letter < left or (letter == left and letter.parity == ODD):
            return False
    if above is not None:
        if letter < above or (letter == above and letter.parity == EVEN):
            return False
    return True


def enumerate_hook_tableaux(lam: Partition, m: int, n: int) -> List[HookTableau]:
    """
    All (m|n)-semistandard tableaux of shape lam.

    Even letters weakly increase along rows and strictly down columns; odd
    letters strictly increase along rows and weakly down columns.
    """
    if not in_hook(lam, m, n):
        return []
    letters = [Letter(EVEN, i) for i in range(1, m + 1)] + [Letter(ODD, k) for k in range(1, n + 1)]
    cells = lam.cells()
    grid = [[None] * r for r in lam.rows]
    found: List[HookTableau] = []

    def place(position: int):
        if position == len(cells):
            found.append(HookTableau(lam, tuple(tuple(row) for row in grid)))
            return
        i, j = cells[position]
        left = grid[i][j - 1] if j > 0 else None
        above = grid[i - 1][j] if i > 0 else None
        for letter in letters:
            if _hook_filling_ok(letter, left, above):
                grid[i][j] = letter
                place(position + 1)
        grid[i][j] = None

    place(0)
    logger.debug(f"{len(found)} ({m}|{n})-semistandard tableaux of shape {lam}")
    return found


def enumerate_ssyt(lam: Partition, k: int) -> List[Tuple[Tuple[int, ...], ...]]:
    """Semistandard tableaux of shape lam in letters 1..k, as rows of integers."""
    return [tuple(tuple(letter.index for letter in row) for row in t.entries)
            for t in enumerate_hook_tableaux(lam, k, 0)]


def enumerate_skew_ssyt(lam: Partition, mu: Partition, k: int) -> List[Tuple[int, ...]]:
    """
    Weights of semistandard fillings of the skew shape lam/mu in letters 1..k.

    Returns one exponent vector per tableau.
    """
    if not lam.contains(mu):
        raise PartitionConstraintError(f"{mu} is not contained in {lam}")
    cells = [(i, j) for i, j in lam.cells() if j >= mu.row(i + 1)]
    grid = {}
    weights: List[Tuple[int, ...]] = []

    def place(position: int):
        if position == len(cells):
            exps = [0] * k
            for value in grid.values():
                exps[value - 1] += 1
            weights.append(tuple(exps))
            return
        i, j = cells[position]
        low = max(grid.get((i, j - 1), 1), grid.get((i - 1, j), 0) + 1)
        for value in range(low, k + 1):
            grid[(i, j)] = value
            place(position + 1)
        grid.pop((i, j), None)

    place(0)
    return weights
