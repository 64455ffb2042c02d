"""Vectors over Q/Z: exponent coordinates of finite-order torus elements.

A point of finite order in an n-dimensional torus is a tuple of roots of
unity; here it is stored as the tuple of their exponents, i.e. reduced
rationals in [0, 1) added coordinatewise mod 1.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm


def mod1(x: Fraction) -> Fraction:
    return Fraction(x.numerator % x.denominator, x.denominator)


def parse_rational(s) -> Fraction:
    """Accept "p/q" strings, bare integer strings, ints and Fractions."""
    if isinstance(s, Fraction):
        return s
    if isinstance(s, int):
        return Fraction(s)
    return Fraction(str(s).strip())


def format_rational(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


class TorsionPoint:
    """Immutable vector over Q/Z with reduced coordinates in [0, 1)."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        self.coords = tuple(mod1(Fraction(c)) for c in coords)
        if not self.coords:
            raise ValueError("torsion point needs at least one coordinate")

    @classmethod
    def zeros(cls, n: int) -> "TorsionPoint":
        return cls([Fraction(0)] * n)

    @classmethod
    def from_strings(cls, items) -> "TorsionPoint":
        return cls([parse_rational(s) for s in items])

    def to_strings(self):
        return [format_rational(c) for c in self.coords]

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __add__(self, other: "TorsionPoint") -> "TorsionPoint":
        self._check(other)
        return TorsionPoint([a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other: "TorsionPoint") -> "TorsionPoint":
        self._check(other)
        return TorsionPoint([a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self) -> "TorsionPoint":
        return TorsionPoint([-a for a in self.coords])

    def __mul__(self, k: int) -> "TorsionPoint":
        if not isinstance(k, int):
            return NotImplemented
        return TorsionPoint([k * a for a in self.coords])

    __rmul__ = __mul__

    def _check(self, other: "TorsionPoint") -> None:
        if len(self.coords) != len(other.coords):
            raise ValueError("torsion points live in tori of different ranks")

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def order(self) -> int:
        """Additive order in (Q/Z)^n: the lcm of the denominators."""
        return lcm(*(c.denominator for c in self.coords))

    def __eq__(self, other):
        return isinstance(other, TorsionPoint) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return f"TorsionPoint([{', '.join(self.to_strings())}])"
