"""Kosovo-Serbia ratio of magic constants and the a0/a2 ratio law."""

from __future__ import annotations

import math
from fractions import Fraction

from ..exactnum import catalan_ext, pow2, prod, semifactorial, semifactorial_ext
from .regions import check_odd


def zeta(j: int, u: int) -> Fraction:
    return prod(2 + 2 * i - j for i in range(u)) / pow2(u)


def tau_ratio(j: int, u: int) -> Fraction:
    """alpha_{j, j-u-1} / alpha_{j-2u, j-u-1}; the beta ratio is the same."""
    check_odd(j)
    z = Fraction(zeta(j, u))
    if 2 * u > j - 1:
        sign = (z > 0) - (z < 0)
        return sign * semifactorial_ext(2 * j - 2 * u - 3) * semifactorial_ext(2 * u - j) * (-2) ** u
    return z * (-4) ** u


def ratio_a0_a2(j: int, kappa: int, c: int) -> Fraction:
    """Closed form for a0/a2 of the value at (j, kappa, c).

    Uses C_{-1} = -1 and C_{n} = 0 below that; the floor(1/j) term adds one
    power of two on the line j = 1.
    """
    check_odd(j)
    if j < 1 or kappa < 1 or c < 1:
        raise ValueError("ratio law needs j >= 1, kappa >= 1, c >= 1")
    half = (j - 1) // 2
    rho = Fraction(1)
    for i in range(1, half + 1):
        rho *= Fraction(
            (2 * c - 2 * kappa + 2 * i - 1) * (kappa - i + 1),
            (2 * c - 2 * i + 1) * (2 * kappa - 2 * i + 1),
        )
    eps = 2 * kappa + (j - 7) // 2 + (1 if j == 1 else 0)
    den = (
        semifactorial(2 * c - 1) ** 2
        * catalan_ext(kappa - 1)
        * catalan_ext((j - 3) // 2)
        * (2 * kappa - 1)
        * (j - 2)
        * rho
    )
    if den == 0:
        raise ZeroDivisionError(f"ratio law undefined at ({j},{kappa},{c})")
    return math.factorial(2 * c) * pow2(eps) / den
