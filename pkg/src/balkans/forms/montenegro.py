"""Closed form on the line j = 1."""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from ..exactnum import catalan_number, prod, semifactorial, semifactorial_ext
from .qexact import QExact
from .types import two_term_sequence


def montenegro_delta(kappa: int, c: int, alpha, beta):
    def back2(m):
        return -2 * m * (2 * m - 1) * (2 * (m - kappa) - 1) ** 2

    def back1(m):
        return 8 * m * m + (2 - 8 * kappa) * m - 2 * kappa + 1

    alpha, beta = Fraction(alpha), Fraction(beta)
    return two_term_sequence(("mont", kappa, alpha, beta), alpha, beta, back2, back1, c)


@lru_cache(maxsize=None)
def montenegro_constants(kappa: int) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """(delta, rho, alpha, beta) for kappa >= 1."""
    if kappa < 1:
        raise ValueError("kappa >= 1 required; kappa = 0 has its own form")
    delta = Fraction(4 ** (kappa - 1), (2 * kappa - 1) * catalan_number(kappa - 1))
    rho = delta * (-1) ** kappa * (1 - 2 * kappa) / (
        math.factorial(2 * kappa) * semifactorial_ext(2 * kappa - 3)
    )
    alpha = rho * montenegro_delta(1, kappa - 1, 1, -2)
    beta = -rho * (2 * kappa - 3) ** 2 * montenegro_delta(2, kappa - 1, 1, 12) - alpha
    return delta, rho, alpha, beta


def compact_delta(c: int) -> int:
    """``D_c = (2c)! + (2c+1)^2 D_{c-1}`` with ``D_0 = 1`` (kappa = 0)."""
    acc = 1
    for k in range(1, c + 1):
        acc = math.factorial(2 * k) + (2 * k + 1) ** 2 * acc
    return acc


def compact_delta_alt(c: int) -> int:
    """The same sequence from its two-term form with seeds 1 + 10c."""
    return two_term_sequence(
        ("mont0",), 1, 10,
        lambda m: 2 * m * (1 - 2 * m) ** 3,
        lambda m: 8 * m * m + 2 * m + 1,
        c,
    )


def montenegro_q(kappa: int, c: int) -> QExact:
    if kappa < 0 or c < 1:
        raise ValueError("montenegro_q needs kappa >= 0 and c >= 1")
    dfact = semifactorial(2 * c - 1) ** 2
    if kappa == 0:
        return QExact.make(math.factorial(2 * c), -compact_delta(c - 1), 2 * dfact, "G")
    delta, _, alpha, beta = montenegro_constants(kappa)
    tail = montenegro_delta(kappa, c - 1, alpha, beta) * prod(2 * (c - i) - 1 for i in range(kappa))
    return QExact.make(delta * math.factorial(2 * c), tail, dfact, "G")
