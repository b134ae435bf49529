"""Canonical closed-form values ``a0 / (a1 + a2 K)``."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from ..exactnum import HPReal, constant_value

KINDS = ("G", "Log2", "Rational")
_CONSTANT_NAME = {"G": "catalan_G", "Log2": "log2"}


@dataclass(frozen=True)
class QExact:
    """The value ``a0 / (a1 + a2 K)`` with K = G, log 2, or absent.

    Build through :meth:`make`, which clears denominators, divides out the
    content and fixes the sign (a2 > 0, else a1 > 0, else a0 >= 0).
    """

    a0: int
    a1: int
    a2: int
    kind: str

    @classmethod
    def make(cls, a0, a1, a2, kind: str = "G") -> "QExact":
        if kind not in KINDS:
            raise ValueError(f"unknown kind {kind!r}")
        a0, a1, a2 = Fraction(a0), Fraction(a1), Fraction(a2)
        if a1 == 0 and a2 == 0:
            raise ZeroDivisionError("a1 + a2 K vanishes identically")
        den = math.lcm(a0.denominator, a1.denominator, a2.denominator)
        b0, b1, b2 = (int(x * den) for x in (a0, a1, a2))
        if b0 == 0:
            return cls(0, 1, 0, "Rational")
        g = math.gcd(b0, b1, b2)
        b0, b1, b2 = b0 // g, b1 // g, b2 // g
        if b2 < 0 or (b2 == 0 and b1 < 0):
            b0, b1, b2 = -b0, -b1, -b2
        if b2 == 0:
            kind = "Rational"
        elif kind == "Rational":
            raise ValueError("a2 != 0 needs a transcendental kind")
        return cls(b0, b1, b2, kind)

    @classmethod
    def rational(cls, q) -> "QExact":
        q = Fraction(q)
        return cls.make(q.numerator, q.denominator, 0, "Rational")

    @property
    def triple(self) -> tuple[int, int, int]:
        return (self.a0, self.a1, self.a2)

    @property
    def is_rational(self) -> bool:
        return self.a2 == 0

    def as_fraction(self) -> Fraction:
        if self.a2:
            raise ValueError("value is not rational")
        return Fraction(self.a0, self.a1)

    def value(self, digits: int) -> HPReal:
        """Decimal value to ``digits`` significant digits (plus guard)."""
        if self.a2 == 0:
            return HPReal.from_fraction(self.as_fraction(), digits)
        k = constant_value(_CONSTANT_NAME[self.kind], digits + 10)
        return self.a0 / (self.a1 + self.a2 * k)

    def same_value(self, other: "QExact") -> bool:
        """Exact value equality (K is assumed irrational)."""
        if self.a2 and other.a2 and self.kind != other.kind:
            return False
        return self.triple == other.triple

    def matches_up_to_sign(self, triple) -> bool:
        t = tuple(int(x) for x in triple)
        return t == self.triple or tuple(-x for x in t) == self.triple

    def ratio_to(self, other: "QExact") -> Fraction | None:
        """``self / other`` when it is rational, else None."""
        if self.a2 == 0 and other.a2 == 0:
            return self.as_fraction() / other.as_fraction()
        if self.a2 == 0 or other.a2 == 0 or self.kind != other.kind:
            return None
        if self.a1 * other.a2 != self.a2 * other.a1:
            return None
        return Fraction(self.a0 * other.a2, other.a0 * self.a2)

    def __str__(self):
        if self.a2 == 0:
            return str(Fraction(self.a0, self.a1))
        k = "G" if self.kind == "G" else "log2"
        sign = "+" if self.a2 > 0 else "-"
        return f"{self.a0}/({self.a1} {sign} {abs(self.a2)}*{k})"
