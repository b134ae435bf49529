"""Fractions with Balkan-like structure outside the (j, kappa, c) family."""

from __future__ import annotations

import math
from fractions import Fraction

from ..cf_engine import CFSpec, poly_from_roots
from ..exactnum import semifactorial
from .qexact import QExact
from .types import two_term_sequence


def inostranstvo_spec(tau: int, eta: int, mu: int, i: int) -> CFSpec:
    """``x + 2(tau+eta+1)i + K(-2n(n+tau)(n+eta)(n+2i+mu) / T(n))``.

    ``x = (1+eta)(1+mu) + tau(1+eta+mu)`` and
    ``T(n) = lead + (2(tau+eta+mu+2i) + 3) n + 3n^2``.
    """
    if not (tau % 2 == eta % 2 == mu % 2):
        raise ValueError("tau, eta, mu must share parity")
    if i < 0:
        raise ValueError("i >= 0 required")
    x = (1 + eta) * (1 + mu) + tau * (1 + eta + mu)
    lead = x + 2 * (tau + eta + 1) * i
    P = poly_from_roots(-2, (0, tau, eta, 2 * i + mu))
    T = (lead, 2 * (tau + eta + mu + 2 * i) + 3, 3)
    return CFSpec.from_polys(P, T, kind="G", label=f"I[{tau},{eta},{mu};{i}]")


def inostranstvo_delta(i: int) -> int:
    return two_term_sequence(
        ("ino1",), 2, 15,
        lambda m: 2 * (2 * m - 1) ** 3 * (1 - m),
        lambda m: 8 * m * m - 2 * m + 3,
        i,
    )


def inostranstvo_q1(i: int) -> QExact:
    """Closed form of the (1, 1, 1) family."""
    if i < 0:
        raise ValueError("i >= 0 required")
    return QExact.make(
        math.factorial(2 * i + 1), inostranstvo_delta(i), -2 * semifactorial(2 * i + 1) ** 2, "G"
    )


def inostranstvo_q2_ratio(i: int) -> Fraction:
    """a0/a2 for the (1, 3, 3) family."""
    return Fraction(math.factorial(2 * i + 5), (2 * i + 4) * semifactorial(2 * i + 5) ** 2)
