"""Value types shared by the solver and recognizers.

All ratios are `fractions.Fraction`; floating point is banned throughout the
package because equality tests against exact toughness values must be exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Optional

from .graph import Graph, components_after_removal

_ZERO, _FINITE, _INFINITE = 0, 1, 2


@total_ordering
class Toughness:
    """Tagged toughness value: Zero < Finite(a/b) < Infinite."""

    __slots__ = ("_kind", "value")

    def __init__(self, kind: int, value: Optional[Fraction] = None):
        self._kind = kind
        self.value = value

    @classmethod
    def zero(cls) -> "Toughness":
        return cls(_ZERO)

    @classmethod
    def finite(cls, q) -> "Toughness":
        q = Fraction(q)
        if q <= 0:
            raise ValueError("finite toughness must be positive")
        return cls(_FINITE, q)

    @classmethod
    def infinite(cls) -> "Toughness":
        return cls(_INFINITE)

    @property
    def is_zero(self) -> bool:
        return self._kind == _ZERO

    @property
    def is_finite(self) -> bool:
        return self._kind == _FINITE

    @property
    def is_infinite(self) -> bool:
        return self._kind == _INFINITE

    def __eq__(self, other) -> bool:
        if not isinstance(other, Toughness):
            return NotImplemented
        return self._kind == other._kind and self.value == other.value

    def __lt__(self, other) -> bool:
        if not isinstance(other, Toughness):
            return NotImplemented
        if self._kind != other._kind:
            return self._kind < other._kind
        if self._kind == _FINITE:
            return self.value < other.value
        return False

    def __hash__(self) -> int:
        return hash((self._kind, self.value))

    def __str__(self) -> str:
        if self._kind == _ZERO:
            return "0"
        if self._kind == _INFINITE:
            return "inf"
        q = self.value
        return f"{q.numerator}/{q.denominator}" if q.denominator != 1 else f"{q.numerator}/1"

    def __repr__(self) -> str:
        return f"Toughness({self})"


@dataclass(frozen=True)
class CutsetWitness:
    """A removed vertex set with its component count; ratio omitted when S is empty."""

    removed: tuple[int, ...]
    component_count: int
    ratio: Optional[Fraction]

    @classmethod
    def from_mask(cls, mask: int, component_count: int) -> "CutsetWitness":
        verts = []
        while mask:
            b = mask & -mask
            verts.append(b.bit_length() - 1)
            mask ^= b
        ratio = Fraction(len(verts), component_count) if verts else None
        return cls(tuple(verts), component_count, ratio)

    @property
    def size(self) -> int:
        return len(self.removed)

    def recheck(self, g: Graph) -> bool:
        """Recompute the component count from scratch via the core module."""
        return components_after_removal(g, self.removed) == self.component_count
