"""Exact arithmetic on the denominator-12 lattice and the Kodaira slicing table.

Every fractional invariant in this package (jdeg, slicings, markings,
weights, lct values) is an integer multiple of 1/12, so values are stored
as integer counts of twelfths.  Arithmetic is integer arithmetic; nothing
here ever touches floating point.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from functools import total_ordering
from math import gcd

from .errors import FracLatticeError, MarkingNotInTable


@total_ordering
class Frac12:
    """Rational number whose denominator divides 12, kept in lowest terms."""

    __slots__ = ("twelfths",)

    def __init__(self, numerator: int, denominator: int = 1):
        if denominator == 0:
            raise ZeroDivisionError("Frac12 with zero denominator")
        if denominator < 0:
            numerator, denominator = -numerator, -denominator
        if 12 % denominator != 0:
            g = gcd(abs(numerator), denominator)
            numerator //= g
            denominator //= g
            if 12 % denominator != 0:
                raise FracLatticeError(
                    f"{numerator}/{denominator} is not on the 1/12 lattice"
                )
        self.twelfths = numerator * (12 // denominator)

    @classmethod
    def from_twelfths(cls, t: int) -> Frac12:
        f = cls.__new__(cls)
        f.twelfths = t
        return f

    @classmethod
    def parse(cls, text: str) -> Frac12:
        """Parse the wire form "p/q" (or a bare integer "p")."""
        text = text.strip()
        if "/" in text:
            p, q = text.split("/")
            return cls(int(p), int(q))
        return cls(int(text))

    @property
    def numerator(self) -> int:
        g = gcd(abs(self.twelfths), 12)
        return self.twelfths // g

    @property
    def denominator(self) -> int:
        return 12 // gcd(abs(self.twelfths), 12)

    def as_fraction(self) -> Fraction:
        return Fraction(self.twelfths, 12)

    def is_integer(self) -> bool:
        return self.twelfths % 12 == 0

    def _coerce(self, other) -> int:
        if isinstance(other, Frac12):
            return other.twelfths
        if isinstance(other, int):
            return 12 * other
        return NotImplemented

    def __add__(self, other):
        t = self._coerce(other)
        if t is NotImplemented:
            return NotImplemented
        return Frac12.from_twelfths(self.twelfths + t)

    __radd__ = __add__

    def __sub__(self, other):
        t = self._coerce(other)
        if t is NotImplemented:
            return NotImplemented
        return Frac12.from_twelfths(self.twelfths - t)

    def __rsub__(self, other):
        t = self._coerce(other)
        if t is NotImplemented:
            return NotImplemented
        return Frac12.from_twelfths(t - self.twelfths)

    def __neg__(self) -> Frac12:
        return Frac12.from_twelfths(-self.twelfths)

    def __eq__(self, other) -> bool:
        t = self._coerce(other)
        if t is NotImplemented:
            return NotImplemented
        return self.twelfths == t

    def __lt__(self, other) -> bool:
        t = self._coerce(other)
        if t is NotImplemented:
            return NotImplemented
        return self.twelfths < t

    def __hash__(self) -> int:
        return hash(self.as_fraction())

    def __bool__(self) -> bool:
        return self.twelfths != 0

    def __str__(self) -> str:
        if self.denominator == 1:
            return str(self.numerator)
        return f"{self.numerator}/{self.denominator}"

    def __repr__(self) -> str:
        return f"Frac12({self})"


def frac(text: str | int) -> Frac12:
    """Shorthand constructor: frac("5/6"), frac(2)."""
    if isinstance(text, int):
        return Frac12(text)
    return Frac12.parse(text)


class KodairaType(enum.Enum):
    """The eight Kodaira fiber types appearing in the slicing table."""

    I = "I"
    II = "II"
    III = "III"
    IV = "IV"
    I_STAR = "I*"
    II_STAR = "II*"
    III_STAR = "III*"
    IV_STAR = "IV*"

    def __str__(self) -> str:
        return self.value


# Kodaira type -> slicing (= 1 - lct of the corresponding cusp), in twelfths.
_SLICING_TWELFTHS = {
    KodairaType.I: 0,
    KodairaType.II: 2,
    KodairaType.III: 3,
    KodairaType.IV: 4,
    KodairaType.I_STAR: 6,
    KodairaType.IV_STAR: 8,
    KodairaType.III_STAR: 9,
    KodairaType.II_STAR: 10,
}

_TYPE_OF_TWELFTHS = {t: k for k, t in _SLICING_TWELFTHS.items()}

# Legal klt-marking values t_v, in twelfths: {1/6, 1/4, 1/3, 1/2, 2/3, 3/4, 5/6}.
_KLT_TWELFTHS = frozenset({2, 3, 4, 6, 8, 9, 10})

# Legal slicing values on either end of a sliced edge (same set; an edge
# carries a pair (x, 1 - x) with x drawn from here).
SLICING_VALUES_TWELFTHS = _KLT_TWELFTHS


def slicing_of_kodaira(t: KodairaType) -> Frac12:
    """Slicing (1 - lct) of a cusp of the given Kodaira type."""
    return Frac12.from_twelfths(_SLICING_TWELFTHS[t])


def kodaira_of_marking(m: Frac12) -> KodairaType:
    """Inverse table lookup; only the eight table values are accepted."""
    k = _TYPE_OF_TWELFTHS.get(m.twelfths)
    if k is None:
        raise MarkingNotInTable(f"{m} is not a slicing of any Kodaira type")
    return k


def allowed_klt_markings() -> frozenset[Frac12]:
    """The seven legal klt-marking values."""
    return frozenset(Frac12.from_twelfths(t) for t in _KLT_TWELFTHS)


def is_klt_marking(m: Frac12) -> bool:
    return m.twelfths in _KLT_TWELFTHS


class SlicingPair:
    """Oriented slicing pair (left, right) on a sliced edge; left + right = 1."""

    __slots__ = ("left", "right")

    def __init__(self, left: Frac12, right: Frac12):
        if left.twelfths + right.twelfths != 12 or left.twelfths not in _KLT_TWELFTHS:
            raise FracLatticeError(f"({left}, {right}) is not a legal slicing pair")
        self.left = left
        self.right = right

    def swapped(self) -> SlicingPair:
        return SlicingPair(self.right, self.left)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SlicingPair)
            and self.left == other.left
            and self.right == other.right
        )

    def __hash__(self) -> int:
        return hash((self.left, self.right))

    def __repr__(self) -> str:
        return f"SlicingPair({self.left}, {self.right})"
