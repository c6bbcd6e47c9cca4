#!/usr/bin/env python3
"""
SUPERCHAR - Truncated Series Engine
Sparse exact-integer series in three alphabets (x Laurent, y and z power
series) with an optional order-2 sign variable eps, truncated by total
degree in the (y, z) alphabets
"""

import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import AlphabetMismatchError, SeriesInversionError

logger = logging.getLogger(__name__)

Exponent = Tuple[int, ...]


@dataclass(frozen=True)
class SeriesLayout:
    """
    Variable layout of a series.

    Exponent vectors are laid out as x_1..x_p, y_1..y_m, z_1..z_n and, when
    eps is set, one trailing slot holding the eps exponent mod 2.
    """
    x: int = 0
    y: int = 0
    z: int = 0
    eps: bool = False

    @property
    def width(self) -> int:
        return self.x + self.y + self.z + (1 if self.eps else 0)

    def slot_offset(self, slot: str) -> int:
        return {'x': 0, 'y': self.x, 'z': self.x + self.y}[slot]

    def slot_size(self, slot: str) -> int:
        return {'x': self.x, 'y': self.y, 'z': self.z}[slot]

    def capped_degree(self, exp: Exponent) -> int:
        return sum(exp[self.x:self.x + self.y + self.z])

    def split(self, exp: Exponent) -> Dict[str, List[int]]:
        y0, z0 = self.x, self.x + self.y
        end = z0 + self.z
        return {
            'x': list(exp[:y0]),
            'y': list(exp[y0:z0]),
            'z': list(exp[z0:end]),
            'eps': exp[end] if self.eps else 0,
        }

    def build(self, x: Sequence[int] = (), y: Sequence[int] = (), z: Sequence[int] = (),
              eps: int = 0) -> Exponent:
        """Exponent vector from named parts; omitted parts are zero."""
        parts = []
        for values, size, name in ((x, self.x, 'x'), (y, self.y, 'y'), (z, self.z, 'z')):
            values = list(values)
            if len(values) > size:
                raise AlphabetMismatchError(f"{len(values)} exponents for {size} {name}-variables")
            parts.extend(values + [0] * (size - len(values)))
        if self.eps:
            parts.append(eps % 2)
        elif eps % 2:
            raise AlphabetMismatchError("eps exponent given for a layout without eps")
        return tuple(parts)

    def normalize(self, exp: Sequence[int]) -> Exponent:
        exp = tuple(int(e) for e in exp)
        if len(exp) != self.width:
            raise AlphabetMismatchError(f"Exponent {exp} does not match layout {self}")
        if any(e < 0 for e in exp[self.x:self.x + self.y + self.z]):
            raise AlphabetMismatchError(f"Negative exponent in a power-series alphabet: {exp}")
        if self.eps:
            exp = exp[:-1] + (exp[-1] % 2,)
        return exp


def graded_lex_key(layout: SeriesLayout, exp: Exponent) -> Tuple:
    """Order by capped degree, then lexicographically descending."""
    return (layout.capped_degree(exp), tuple(-e for e in exp))


class PowerSeries:
    """
    Exact-integer series truncated at total (y, z)-degree cap.

    A cap of None means the series is a finite Laurent polynomial and no
    truncation happens. Products truncate at the smaller of the two caps.
    Equality compares layout and terms only.
    """

    __slots__ = ('layout', 'cap', '_terms')

    def __init__(self, layout: SeriesLayout, terms: Optional[Dict[Sequence[int], int]] = None,
                 cap: Optional[int] = None):
        self.layout = layout
        self.cap = cap
        clean: Dict[Exponent, int] = {}
        for exp, coeff in (terms or {}).items():
            exp = layout.normalize(exp)
            if cap is not None and layout.capped_degree(exp) > cap:
                continue
            clean[exp] = clean.get(exp, 0) + int(coeff)
        self._terms = {e: c for e, c in clean.items() if c}

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @classmethod
    def zero(cls, layout: SeriesLayout, cap: Optional[int] = None) -> 'PowerSeries':
        return cls(layout, {}, cap)

    @classmethod
    def one(cls, layout: SeriesLayout, cap: Optional[int] = None) -> 'PowerSeries':
        return cls(layout, {(0,) * layout.width: 1}, cap)

    @classmethod
    def monomial(cls, layout: SeriesLayout, x: Sequence[int] = (), y: Sequence[int] = (),
                 z: Sequence[int] = (), eps: int = 0, coeff: int = 1,
                 cap: Optional[int] = None) -> 'PowerSeries':
        return cls(layout, {layout.build(x, y, z, eps): coeff}, cap)

    @classmethod
    def variable(cls, layout: SeriesLayout, slot: str, index: int, power: int = 1,
                 eps: int = 0, coeff: int = 1, cap: Optional[int] = None) -> 'PowerSeries':
        """coeff * eps^eps * slot_index^power, index 1-based."""
        exp = [0] * layout.width
        exp[layout.slot_offset(slot) + index - 1] = power
        if layout.eps:
            exp[-1] = eps
        return cls(layout, {tuple(exp): coeff}, cap)

    # ------------------------------------------------------------------
    # Access
    # ------------------------------------------------------------------

    @property
    def terms(self) -> Dict[Exponent, int]:
        return dict(self._terms)

    def coeff(self, exp: Sequence[int]) -> int:
        return self._terms.get(tuple(exp), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def sorted_terms(self) -> List[Tuple[Exponent, int]]:
        return sorted(self._terms.items(), key=lambda item: graded_lex_key(self.layout, item[0]))

    def min_degree(self) -> Optional[int]:
        if not self._terms:
            return None
        return min(self.layout.capped_degree(e) for e in self._terms)

    def evaluate_at_one(self) -> int:
        return sum(self._terms.values())

    def has_nonnegative_coefficients(self) -> bool:
        return all(c > 0 for c in self._terms.values())

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    def _check(self, other: 'PowerSeries'):
        if self.layout != other.layout:
            raise AlphabetMismatchError(f"Layouts differ: {self.layout} vs {other.layout}")

    @staticmethod
    def _joint_cap(a: Optional[int], b: Optional[int]) -> Optional[int]:
        caps = [c for c in (a, b) if c is not None]
        return min(caps) if caps else None

    def __add__(self, other: 'PowerSeries') -> 'PowerSeries':
        self._check(other)
        terms = dict(self._terms)
        for exp, c in other._terms.items():
            terms[exp] = terms.get(exp, 0) + c
        return PowerSeries(self.layout, terms, self._joint_cap(self.cap, other.cap))

    def __neg__(self) -> 'PowerSeries':
        return PowerSeries(self.layout, {e: -c for e, c in self._terms.items()}, self.cap)

    def __sub__(self, other: 'PowerSeries') -> 'PowerSeries':
        return self + (-other)

    def scale(self, factor: int) -> 'PowerSeries':
        return PowerSeries(self.layout, {e: factor * c for e, c in self._terms.items()}, self.cap)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        cap = self._joint_cap(self.cap, other.cap)
        layout = self.layout
        eps_slot = layout.width - 1 if layout.eps else None
        left = [(e, c, layout.capped_degree(e)) for e, c in self._terms.items()]
        right = [(e, c, layout.capped_degree(e)) for e, c in other._terms.items()]
        product: Dict[Exponent, int] = {}
        for ea, ca, da in left:
            for eb, cb, db in right:
                if cap is not None and da + db > cap:
                    continue
                exp = [a + b for a, b in zip(ea, eb)]
                if eps_slot is not None:
                    exp[eps_slot] %= 2
                key = tuple(exp)
                product[key] = product.get(key, 0) + ca * cb
        return PowerSeries(layout, product, cap)

    __rmul__ = __mul__

    def truncate(self, cap: Optional[int]) -> 'PowerSeries':
        return PowerSeries(self.layout, self._terms, self._joint_cap(self.cap, cap))

    def with_cap(self, cap: Optional[int]) -> 'PowerSeries':
        """Same terms (dropping any above cap) labelled with exactly this cap."""
        return PowerSeries(self.layout, self._terms, cap)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self.layout == other.layout and self._terms == other._terms

    def __repr__(self) -> str:
        return f"PowerSeries({self.pretty()}, cap={self.cap})"

    # ------------------------------------------------------------------
    # Rendering
    # ------------------------------------------------------------------

    def _monomial_text(self, exp: Exponent) -> str:
        parts = []
        named = self.layout.split(exp)
        if named['eps']:
            parts.append('eps')
        for name in ('x', 'y', 'z'):
            for i, e in enumerate(named[name], start=1):
                if e == 1:
                    parts.append(f"{name}{i}")
                elif e != 0:
                    parts.append(f"{name}{i}^{e}")
        return '*'.join(parts)

    def pretty(self) -> str:
        if not self._terms:
            return '0'
        chunks = []
        for exp, c in self.sorted_terms():
            mono = self._monomial_text(exp)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            sign = '-' if c < 0 else '+'
            chunks.append((sign, body))
        text = ('-' if chunks[0][0] == '-' else '') + chunks[0][1]
        for sign, body in chunks[1:]:
            text += f" {sign} {body}"
        return text

    def to_json(self) -> List[dict]:
        return [{'exp': self.layout.split(exp), 'coeff': str(c)} for exp, c in self.sorted_terms()]


# Laurent polynomials in the x alphabet (with optional eps) share the engine.
LaurentCharacter = PowerSeries


def series_mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    return a * b


def series_product(factors: Iterable[PowerSeries], layout: SeriesLayout,
                   cap: Optional[int]) -> PowerSeries:
    result = PowerSeries.one(layout, cap)
    for factor in factors:
        result = result * factor
    return result


def geometric_expand(monomial: Sequence[int], layout: SeriesLayout, cap: Optional[int]) -> PowerSeries:
    """
    Expand 1/(1 - monomial) as sum of monomial^t up to the cap.

    Raises:
        SeriesInversionError: monomial has zero (y, z)-degree or no cap is given
    """
    base = layout.normalize(monomial)
    step = layout.capped_degree(base)
    if step == 0:
        raise SeriesInversionError(f"1/(1 - m) with m={base} has no convergent expansion")
    if cap is None:
        raise SeriesInversionError("Geometric expansion requires a degree cap")
    terms = {}
    power = 0
    while power * step <= cap:
        terms[tuple(power * e for e in base)] = 1
        power += 1
    return PowerSeries(layout, terms, cap)
