#!/usr/bin/env python3
"""
SUPERCHAR - Grassmann Polynomial Engine
Supercommutative polynomials in even x_l^i and odd eta_k^i, super
determinants, joint highest weight vectors, the Lie algebra operators
realized as differential operators, and harmonicity / rank checks
"""

import itertools
import logging
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import Matrix, Rational

from .combinatorics import (
    EVEN,
    HookTableau,
    Letter,
    Partition,
    column_sum_ok,
    enumerate_hook_tableaux,
    enumerate_partitions,
    enumerate_ssyt,
    in_hook,
)
from .errors import OperatorIndexError, PartitionConstraintError
from .wgroups import DualPair

logger = logging.getLogger(__name__)

# Variables: ('x', l, i) is x_l^i, ('eta', k, i) is eta_k^i (lower index first).
Variable = Tuple[str, int, int]
EvenPart = Tuple[Tuple[Tuple[int, int], int], ...]
OddPart = Tuple[Tuple[int, int], ...]
Monomial = Tuple[EvenPart, OddPart]


def x(l: int, i: int) -> Variable:
    return ('x', l, i)


def eta(k: int, i: int) -> Variable:
    return ('eta', k, i)


def _odd_merge_sign(left: OddPart, right: OddPart) -> int:
    inversions = sum(1 for a in left for b in right if a > b)
    return -1 if inversions % 2 else 1


def _multiply_monomials(a: Monomial, b: Monomial) -> Optional[Tuple[Monomial, int]]:
    if set(a[1]) & set(b[1]):
        return None
    even = dict(a[0])
    for var, e in b[0]:
        even[var] = even.get(var, 0) + e
    sign = _odd_merge_sign(a[1], b[1])
    return (tuple(sorted(even.items())), tuple(sorted(a[1] + b[1]))), sign


class SuperPoly:
    """
    Sparse polynomial in commuting x_l^i and anticommuting eta_k^i.

    Odd generators in a monomial are kept sorted by (k, i); the coefficient
    absorbs the sign of that normalization.
    """

    __slots__ = ('_terms',)

    def __init__(self, terms: Optional[Dict[Monomial, int]] = None):
        self._terms = {mono: c for mono, c in (terms or {}).items() if c}

    @classmethod
    def constant(cls, value: int = 1) -> 'SuperPoly':
        return cls({((), ()): value})

    @classmethod
    def var(cls, variable: Variable) -> 'SuperPoly':
        kind, low, up = variable
        if kind == 'x':
            return cls({((((low, up), 1),), ()): 1})
        return cls({((), ((low, up),)): 1})

    @property
    def terms(self) -> Dict[Monomial, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other: 'SuperPoly') -> 'SuperPoly':
        total = dict(self._terms)
        for mono, c in other._terms.items():
            total[mono] = total.get(mono, 0) + c
        return SuperPoly(total)

    def __neg__(self) -> 'SuperPoly':
        return self.scale(-1)

    def __sub__(self, other: 'SuperPoly') -> 'SuperPoly':
        return self + (-other)

    def scale(self, factor: int) -> 'SuperPoly':
        return SuperPoly({mono: factor * c for mono, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        product: Dict[Monomial, int] = {}
        for ma, ca in self._terms.items():
            for mb, cb in other._terms.items():
                merged = _multiply_monomials(ma, mb)
                if merged is None:
                    continue
                mono, sign = merged
                product[mono] = product.get(mono, 0) + sign * ca * cb
        return SuperPoly(product)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, SuperPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def degree(self) -> int:
        return max((sum(e for _, e in even) + len(odd) for even, odd in self._terms), default=0)

    def variables(self) -> List[Variable]:
        found = set()
        for even, odd in self._terms:
            found.update(x(l, i) for (l, i), _ in even)
            found.update(eta(k, i) for k, i in odd)
        return sorted(found)

    def derive(self, variable: Variable) -> 'SuperPoly':
        """Left derivative; for odd variables the sign is (-1)^(position in the sorted odd part)."""
        kind, low, up = variable
        result: Dict[Monomial, int] = {}
        for (even, odd), c in self._terms.items():
            if kind == 'x':
                table = dict(even)
                e = table.get((low, up), 0)
                if not e:
                    continue
                if e == 1:
                    del table[(low, up)]
                else:
                    table[(low, up)] = e - 1
                mono = (tuple(sorted(table.items())), odd)
                result[mono] = result.get(mono, 0) + e * c
            else:
                if (low, up) not in odd:
                    continue
                position = odd.index((low, up))
                mono = (even, odd[:position] + odd[position + 1:])
                result[mono] = result.get(mono, 0) + (-1) ** position * c
        return SuperPoly(result)

    def _monomial_text(self, mono: Monomial) -> str:
        even, odd = mono
        parts = [f"x{l}^{i}" + (f"**{e}" if e > 1 else '') for (l, i), e in even]
        parts += [f"eta{k}^{i}" for k, i in odd]
        return '*'.join(parts) or '1'

    def pretty(self) -> str:
        if not self._terms:
            return '0'
        chunks = []
        for mono, c in sorted(self._terms.items()):
            text = self._monomial_text(mono)
            chunks.append(f"{'-' if c < 0 else '+'} {abs(c)}*{text}" if abs(c) != 1
                          else f"{'-' if c < 0 else '+'} {text}")
        return ' '.join(chunks).lstrip('+ ')

    def __repr__(self) -> str:
        return f"SuperPoly({self.pretty()})"

    def to_json(self) -> List[dict]:
        return [{'even': {f"x_{l}^{i}": e for (l, i), e in even},
                 'odd': [f"eta_{k}^{i}" for k, i in odd],
                 'coeff': str(c)}
                for (even, odd), c in sorted(self._terms.items())]


def super_mul(a: SuperPoly, b: SuperPoly) -> SuperPoly:
    return a * b


def super_derive(p: SuperPoly, variable: Variable) -> SuperPoly:
    return p.derive(variable)


# ============================================================================
# Determinants
# ============================================================================

def _letter_variable(letter, column: int) -> Variable:
    if isinstance(letter, Letter):
        return x(letter.index, column) if letter.parity == EVEN else eta(letter.index, column)
    return letter[0], letter[1], column


def super_determinant(rows: Sequence, columns: Sequence[int]) -> SuperPoly:
    """sum over sigma of sgn(sigma) a_1^{sigma(1)} ... a_r^{sigma(r)}, multiplied in row order."""
    if len(rows) != len(columns):
        raise PartitionConstraintError(f"{len(rows)} rows against {len(columns)} columns")
    total = SuperPoly()
    for perm in itertools.permutations(range(len(columns))):
        inversions = sum(1 for a, b in itertools.combinations(perm, 2) if a > b)
        term = SuperPoly.constant(-1 if inversions % 2 else 1)
        for row, p in zip(rows, perm):
            term = term * SuperPoly.var(_letter_variable(row, columns[p]))
        total = total + term
    return total


def build_determinant(kind: str, d: int, m: int, n: int, r: Optional[int] = None,
                      k: Optional[int] = None, tableau: Optional[HookTableau] = None,
                      upper: Optional[Tuple[Tuple[int, ...], ...]] = None,
                      column: Optional[int] = None) -> SuperPoly:
    """
    Determinant families:

        'delta':        Delta_r, rows x_1..x_r, columns 1..r, 1 <= r <= min(d, m)
        'delta_k':      Delta_{k,r}, rows x_1..x_m then eta_k repeated r-m times, m < r <= d
        'tableau':      column `column` of a hook tableau T, columns 1..len
        'tableau_pair': column `column` of T against the same column of an SSYT T' in d letters
    """
    if kind == 'delta':
        if r is None or not 1 <= r <= min(d, m):
            raise PartitionConstraintError(f"Delta_r needs 1 <= r <= min(d, m), got r={r}")
        return super_determinant([('x', l) for l in range(1, r + 1)], list(range(1, r + 1)))
    if kind == 'delta_k':
        if r is None or k is None or not (m < r <= d and 1 <= k <= n):
            raise PartitionConstraintError(f"Delta_(k,r) needs m < r <= d and 1 <= k <= n, got k={k}, r={r}")
        rows = [('x', l) for l in range(1, m + 1)] + [('eta', k)] * (r - m)
        return super_determinant(rows, list(range(1, r + 1)))
    if kind in ('tableau', 'tableau_pair'):
        if tableau is None or column is None or not 1 <= column <= tableau.shape.row(1):
            raise PartitionConstraintError("Tableau determinant needs a tableau and a valid column")
        letters = tableau.column(column)
        if kind == 'tableau':
            cols = list(range(1, len(letters) + 1))
        else:
            if upper is None:
                raise PartitionConstraintError("tableau_pair needs the SSYT T'")
            cols = [row[column - 1] for row in upper if len(row) >= column]
        if max(cols, default=0) > d:
            raise PartitionConstraintError(f"Column {column} needs more than d={d} upper indices")
        return super_determinant(list(letters), cols)
    raise PartitionConstraintError(f"Unknown determinant kind {kind!r}")


def hwv_vector(lam: Partition, d: int, m: int, n: int) -> SuperPoly:
    """
    Joint gl(d) x gl(m|n) highest weight vector of lam.

    Product over columns j of Delta_{lam'_j}, with Delta_{j, lam'_j} for the
    columns longer than m.
    """
    if lam.length > d or not in_hook(lam, m, n):
        raise PartitionConstraintError(f"{lam} needs l(lam) <= d={d} and the ({m}|{n})-hook")
    vector = SuperPoly.constant()
    for j, length in enumerate(lam.conjugate().rows, start=1):
        if length > m:
            vector = vector * build_determinant('delta_k', d, m, n, r=length, k=j)
        else:
            vector = vector * build_determinant('delta', d, m, n, r=length)
    return vector


def tableau_vector(tableau: HookTableau, d: int, upper=None) -> SuperPoly:
    kind = 'tableau' if upper is None else 'tableau_pair'
    vector = SuperPoly.constant()
    for j in range(1, tableau.shape.row(1) + 1):
        vector = vector * build_determinant(kind, d, 0, 0, tableau=tableau, upper=upper, column=j)
    return vector


def basis_vectors(lam: Partition, d: int, m: int, n: int, paired: bool = False) -> List[SuperPoly]:
    """Delta^T over hook tableaux T, or Delta^(T,T') over pairs with T' an SSYT in d letters."""
    tableaux = enumerate_hook_tableaux(lam, m, n)
    if not paired:
        return [tableau_vector(t, d) for t in tableaux]
    return [tableau_vector(t, d, upper) for t in tableaux for upper in enumerate_ssyt(lam, d)]


# ============================================================================
# Differential operators
# ============================================================================

@dataclass
class LieOperator:
    """
    Sum of coeff * multiplier * d_{v_1} ... d_{v_r}, derivatives applied right to left.

    A multiplier of None is the identity.
    """
    name: str
    terms: List[Tuple[int, Optional[SuperPoly], Tuple[Variable, ...]]] = field(default_factory=list)

    def add(self, coeff: int, multiplier: Optional[SuperPoly], *derivatives: Variable) -> 'LieOperator':
        self.terms.append((coeff, multiplier, tuple(derivatives)))
        return self

    def apply(self, p: SuperPoly) -> SuperPoly:
        total = SuperPoly()
        for coeff, multiplier, derivatives in self.terms:
            q = p
            for variable in reversed(derivatives):
                q = q.derive(variable)
                if q.is_zero():
                    break
            if q.is_zero():
                continue
            if multiplier is not None:
                q = multiplier * q
            total = total + q.scale(coeff)
        return total


LIE_FAMILIES = ('gl_d_raise', 'glmn_raise', 'O_laplacian', 'Sp_laplacian',
                'O_invariant', 'Sp_invariant', 'Gamma')


def _require(condition: bool, message: str):
    if not condition:
        raise OperatorIndexError(message)


def _pair_var(kind: str, low: int, up: int) -> Variable:
    return x(low, up) if kind == 'x' else eta(low, up)


def _check_pair_indices(family: str, kinds: str, a: int, b: int, m: int, n: int):
    sizes = {'x': m, 'eta': n}
    first, second = kinds.split('-')
    _require(1 <= a <= sizes[first] and 1 <= b <= sizes[second],
             f"{family} {kinds} indices ({a}, {b}) out of range for m={m}, n={n}")
    if first == second:
        strict = (family.startswith('O') and first == 'eta') or (family.startswith('Sp') and first == 'x')
        _require(a < b if strict else a <= b, f"{family} {kinds} needs ordered indices, got ({a}, {b})")


def lie_operator(family: str, indices: Tuple, d: int, m: int, n: int) -> LieOperator:
    """
    Displayed operators as differential operators on C[x, eta].

    gl_d_raise (i,):       sum_l x_l^{i-1} d/dx_l^i + sum_k eta_k^{i-1} d/deta_k^i
    glmn_raise (s,):       s <= m: sum_j x_{s-1}^j d/dx_s^j; s = m+1: sum_j x_m^j d/deta_1^j;
                           s > m+1: sum_j eta_{s-m-1}^j d/deta_{s-m}^j
    O_laplacian (kinds, a, b):  sum_j d/dA_a^j d/dB_b^{d+1-j}, kinds in x-x, x-eta, eta-eta
    Sp_laplacian (kinds, a, b): sum_{j <= d/2} (d/dA_a^j d/dB_b^{d+1-j} - d/dA_a^{d+1-j} d/dB_b^j)
    O_invariant / Sp_invariant: multiplication by the matching quadratic invariant
    Gamma (i,):            sum_j eta_1^j d/dx_{m+i}^j
    """
    if family not in LIE_FAMILIES:
        raise OperatorIndexError(f"Unknown operator family {family!r}")
    op = LieOperator(f"{family}{tuple(indices)}")

    if family == 'gl_d_raise':
        (i,) = indices
        _require(2 <= i <= d, f"gl(d) raise index {i} outside 2..{d}")
        for l in range(1, m + 1):
            op.add(1, SuperPoly.var(x(l, i - 1)), x(l, i))
        for k in range(1, n + 1):
            op.add(1, SuperPoly.var(eta(k, i - 1)), eta(k, i))
        return op

    if family == 'glmn_raise':
        (s,) = indices
        _require(2 <= s <= m + n, f"gl(m|n) raise index {s} outside 2..{m + n}")
        for j in range(1, d + 1):
            if s <= m:
                op.add(1, SuperPoly.var(x(s - 1, j)), x(s, j))
            elif s == m + 1:
                op.add(1, SuperPoly.var(x(m, j)), eta(1, j))
            else:
                op.add(1, SuperPoly.var(eta(s - m - 1, j)), eta(s - m, j))
        return op

    if family == 'Gamma':
        (i,) = indices
        _require(1 <= i <= n, f"Gamma index {i} outside 1..{n}")
        for j in range(1, d + 1):
            op.add(1, SuperPoly.var(eta(1, j)), x(m + i, j))
        return op

    kinds, a, b = indices
    _require(kinds in ('x-x', 'x-eta', 'eta-eta'), f"Unknown variable kinds {kinds!r}")
    _check_pair_indices(family, kinds, a, b, m, n)
    first, second = kinds.split('-')
    symplectic = family.startswith('Sp')
    if symplectic:
        _require(d % 2 == 0, f"Sp operators need even d, got {d}")
    pairs = []
    for j in range(1, (d // 2 if symplectic else d) + 1):
        pairs.append((1, j, d + 1 - j))
        if symplectic:
            pairs.append((-1, d + 1 - j, j))

    for sign, ja, jb in pairs:
        va, vb = _pair_var(first, a, ja), _pair_var(second, b, jb)
        if family.endswith('laplacian'):
            op.add(sign, None, va, vb)
        else:
            op.add(sign, SuperPoly.var(va) * SuperPoly.var(vb))
    return op


def glmn_operator(i: int, s: int, kind: str, d: int, m: int, n: int) -> LieOperator:
    """
    E^{xx}_{is}, E^{x eta}_{is}, E^{eta x}_{is} or E^{eta eta}_{is} as sum_j A_i^j d/dB_s^j.

    The diagonal operators carry the shift +d/2 (xx) and -d/2 (eta eta), so
    a joint highest weight vector of lam has weight lam + d/2.
    """
    sizes = {'x': m, 'eta': n}
    if kind not in ('x-x', 'x-eta', 'eta-x', 'eta-eta'):
        raise OperatorIndexError(f"Unknown gl(m|n) operator kind {kind!r}")
    first, second = kind.split('-')
    _require(1 <= i <= sizes[first] and 1 <= s <= sizes[second],
             f"E^{kind} indices ({i}, {s}) out of range for m={m}, n={n}")
    op = LieOperator(f"E[{kind}]({i},{s})")
    for j in range(1, d + 1):
        op.add(1, SuperPoly.var(_pair_var(first, i, j)), _pair_var(second, s, j))
    if first == second and i == s:
        op.add(Rational(d, 2) if first == 'x' else Rational(-d, 2), None)
    return op


def laplacians(pair: DualPair, d: int, m: int, n: int) -> List[LieOperator]:
    """Every Laplacian of the pair with in-range indices."""
    family = 'O_laplacian' if pair is DualPair.O_SP else 'Sp_laplacian'
    ops = []
    for kinds, sa, sb in (('x-x', m, m), ('x-eta', m, n), ('eta-eta', n, n)):
        for a in range(1, sa + 1):
            for b in range(1, sb + 1):
                try:
                    ops.append(lie_operator(family, (kinds, a, b), d, m, n))
                except OperatorIndexError:
                    continue
    return ops


def glmn_weight(p: SuperPoly, d: int, m: int, n: int) -> Optional[Tuple[Rational, ...]]:
    """
    gl(m|n) weight of a weight vector under E_ii = sum_j x_i^j d/dx_i^j + d/2
    (and eta analogues with -d/2); None when p is not a weight vector.
    """
    weights = set()
    for even, odd in p.terms:
        counts = [0] * (m + n)
        for (l, _), e in even:
            counts[l - 1] += e
        for k, _ in odd:
            counts[m + k - 1] += 1
        weights.add(tuple(counts))
    if len(weights) != 1:
        return None
    (counts,) = weights
    half = Rational(d, 2)
    return tuple(Rational(c) + (half if idx < m else -half) for idx, c in enumerate(counts))


# ============================================================================
# Checks
# ============================================================================

@dataclass
class HarmonicReport:
    """Outcome of applying raising operators and Laplacians to a highest weight vector."""
    lam: Partition
    d: int
    m: int
    n: int
    pair: DualPair
    operators_checked: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def all_zero(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {'partition': self.lam.to_list(), 'd': self.d, 'm': self.m, 'n': self.n,
                'pair': self.pair.value, 'operators_checked': self.operators_checked,
                'all_zero': self.all_zero, 'failures': list(self.failures)}


def check_highest_harmonic(lam: Partition, d: int, m: int, n: int, pair: DualPair) -> HarmonicReport:
    """Apply every gl(d) raise, every gl(m|n) raise and every Laplacian of the pair to hwv_vector."""
    if pair is DualPair.O_SP:
        if not column_sum_ok(lam, d):
            raise PartitionConstraintError(f"O({d}) harmonics need lam'_1 + lam'_2 <= {d}, got {lam}")
    elif d % 2 or 2 * lam.length > d:
        raise PartitionConstraintError(f"Sp({d}) harmonics need even d and l(lam) <= d/2, got {lam}")

    vector = hwv_vector(lam, d, m, n)
    operators = [lie_operator('gl_d_raise', (i,), d, m, n) for i in range(2, d + 1)]
    operators += [lie_operator('glmn_raise', (s,), d, m, n) for s in range(2, m + n + 1)]
    operators += laplacians(pair, d, m, n)

    report = HarmonicReport(lam, d, m, n, pair)
    for op in operators:
        report.operators_checked += 1
        image = op.apply(vector)
        if not image.is_zero():
            logger.warning(f"{op.name} does not annihilate the vector of {lam}: {image.pretty()}")
            report.failures.append(op.name)
    return report


def span_rank(polys: Sequence[SuperPoly]) -> int:
    """Rank of the coefficient matrix over the rationals."""
    if not polys:
        return 0
    monomials = sorted({mono for p in polys for mono in p.terms})
    if not monomials:
        return 0
    index = {mono: col for col, mono in enumerate(monomials)}
    rows = []
    for p in polys:
        row = [0] * len(monomials)
        for mono, c in p.terms.items():
            row[index[mono]] = c
        rows.append(row)
    return Matrix(rows).rank()


def operator_commutator_vanishes(a: LieOperator, b: LieOperator, polys: Sequence[SuperPoly]) -> bool:
    """True when a(b(p)) == b(a(p)) for every p."""
    return all(a.apply(b.apply(p)) == b.apply(a.apply(p)) for p in polys)


def spanning_monomials(variables: Sequence[Variable], max_degree: int) -> List[SuperPoly]:
    """Monomials of degree <= max_degree in the given variables (odd ones at most once)."""
    evens = [v for v in variables if v[0] == 'x']
    odds = [v for v in variables if v[0] == 'eta']
    found = []
    for odd_count in range(0, min(len(odds), max_degree) + 1):
        for odd_vars in itertools.combinations(odds, odd_count):
            for even_count in range(0, max_degree - odd_count + 1):
                for even_vars in itertools.combinations_with_replacement(evens, even_count):
                    mono = SuperPoly.constant()
                    for v in even_vars + odd_vars:
                        mono = mono * SuperPoly.var(v)
                    found.append(mono)
    return found


def graded_dimension(d: int, m: int, n: int, degree: int) -> int:
    """Dimension of the degree part of S(C^d (x) C^(m|n))."""
    even, odd = d * m, d * n
    total = 0
    for a in range(degree + 1):
        sym = (1 if a == 0 else 0) if even == 0 else math.comb(even + a - 1, a)
        total += sym * math.comb(odd, degree - a)
    return total


def tableau_dimension_sum(d: int, m: int, n: int, degree: int) -> int:
    """Sum over lam of #SSYT_d(lam) * #hook tableaux(lam), |lam| = degree, l(lam) <= d."""
    return sum(len(enumerate_ssyt(lam, d)) * len(enumerate_hook_tableaux(lam, m, n))
               for lam in enumerate_partitions(degree, max_length=d, hook=(m, n), min_size=degree))
