"""Kosovo: kappa-level and j-level recurrences for the magic constants."""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from ..exactnum import pow2, prod
from .regions import check_odd
from .types import AlphaBeta, Seeds4, two_term_sequence

SEEDS_3 = Seeds4(-1, 4, Fraction(-1, 3), Fraction(-14, 3))
SEEDS_5 = Seeds4(19, 234, -17, -8)


def kappa_scale(n: int, j: int, kappa: int) -> Fraction:
    """Normalizer that turns the kappa-level sequence into alpha (n=0) or alpha+beta (n=1)."""
    s = prod((kappa - i) * (2 * kappa - 2 * i - 1) ** 2 for i in range((j - 1) // 2))
    den = (
        math.factorial(kappa)
        * pow2(3 * kappa - 2)
        * (2 * kappa - j)
        * (2 * kappa - 1)
        * (n * ((2 * kappa - j - 2) * (3 - 2 * kappa) - 1) + 1)
        * s
    )
    return (-1) ** (kappa + 1) * math.factorial(2 * kappa) ** 2 / den


def kappa_sequence(n: int, j: int, m: int, a, b):
    def back2(k):
        return (2 * k + 2 * j - 9 - 2 * n) * (2 * k + j - 8 - 2 * n) * (-2 * k + 5 - j) * (2 * k + j - 6)

    def back1(k):
        return 8 * k * k + k * (10 * j - 48 - 8 * n) + 3 * j * j - (28 + 4 * n) * j + 68 + 18 * n

    a, b = Fraction(a), Fraction(b)
    return two_term_sequence(("kappa", n, j, a, b), a, b, back2, back1, m)


def kosovo_kappa_level(j: int, seeds: Seeds4, kappa: int) -> AlphaBeta:
    check_odd(j)
    if j < 3 or kappa < j - 2:
        raise ValueError(f"kappa-level formula needs odd j >= 3 and kappa >= j - 2, got ({j}, {kappa})")
    m = kappa - j + 2
    alpha = kappa_sequence(0, j, m, seeds.aa, seeds.ab) / kappa_scale(0, j, kappa)
    beta = kappa_sequence(1, j, m, seeds.ba, seeds.bb) / kappa_scale(1, j, kappa) - alpha
    return AlphaBeta(alpha, beta)


def _step(j: int, s: Seeds4) -> Seeds4:
    """Seeds at j + 2 from seeds at j (valid for odd j >= 5)."""
    rho = Fraction(2 ** (j + 1) * math.factorial(j - 1), (j - 2) * (j - 4))
    b = (j - 6) * (j - 2) * (j - 1) * j * (2 * j - 7) * (2 * j - 5)
    a = 4 * (j - 1) * j * (2 * j - 5)
    p = Fraction((j - 6) * (j - 4) * (j - 1) * (j + 1), 4)
    x = j - 2
    d = 6 * x**6 - 15 * x**5 - 68 * x**4 + 74 * x**3 + 89 * x**2 - 44 * x - 18
    e = (3 * x + 1) * (x * x - 7) + 3
    return Seeds4(
        (s.aa * a * (2 * j - 3) - (3 * j - 2) * rho) / ((j - 1) * (j + 1)),
        (s.ab * a * (2 * j + 1) - e * rho) / ((j - 3) * (j + 1)),
        (s.ba * b - 3 * ((j - 3) * (j - 1) - 1) * rho) / p,
        (s.bb * b * (j * (2 * j - 3) - 1) - d * rho) / (p * ((j - 2) * (2 * j - 7) - 1)),
    )


_CHAIN: list[Seeds4] = [SEEDS_3, SEEDS_5]  # index (j - 3) // 2


def kosovo_j_seeds(j: int) -> Seeds4:
    check_odd(j)
    if j < 3:
        raise ValueError("j-level seeds exist for odd j >= 3")
    idx = (j - 3) // 2
    chain = _CHAIN
    while len(chain) <= idx:
        top = 2 * len(chain) + 1
        chain.append(_step(top, chain[-1]))
    return chain[idx]


@lru_cache(maxsize=None)
def kosovo_alphabeta(j: int, kappa: int) -> AlphaBeta:
    return kosovo_kappa_level(j, kosovo_j_seeds(j), kappa)
