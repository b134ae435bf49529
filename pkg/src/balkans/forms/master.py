"""The c-level master formula and the Bosnia-Herzegovina diagonal."""

from __future__ import annotations

import math
from fractions import Fraction

from ..exactnum import catalan_ext, pow2, prod, semifactorial
from .qexact import QExact
from .regions import check_odd
from .types import AlphaBeta, two_term_sequence


def c_level_delta(j: int, kappa: int, c: int, alpha, beta):
    def back2(m):
        return -2 * m * (2 * m - j) * (2 * m - 2 * kappa + j - 2) * (2 * m - 2 * kappa - 1)

    def back1(m):
        return 8 * m * m + (2 - 8 * kappa) * m + (j - 2) * (2 * kappa - j)

    alpha, beta = Fraction(alpha), Fraction(beta)
    return two_term_sequence(("clevel", j, kappa, alpha, beta), alpha, beta, back2, back1, c)


def c_level_f(j: int, kappa: int, c: int) -> Fraction:
    """Coefficient of G; it vanishes on and beyond the Bosnia diagonal."""
    return (
        catalan_ext((j - 3) // 2)
        * catalan_ext(kappa - 1)
        * (j - 2)
        * (2 * kappa - 1)
        * semifactorial(2 * c - 1) ** 2
        * prod((2 * c - 2 * kappa + 2 * i - 1) * (kappa - i + 1) for i in range(1, (j - 1) // 2 + 1))
    )


def c_level_g(j: int, kappa: int, c: int) -> Fraction:
    return (
        math.factorial(2 * c)
        * pow2((j + 4 * kappa - 7) // 2)
        * prod((2 * c - 2 * i + 1) * (2 * kappa - 2 * i + 1) for i in range(1, (j - 1) // 2 + 1))
    )


def c_level_h(j: int, kappa: int, c: int) -> int:
    return prod(2 * c - 2 * i - 1 for i in range((j - 1) // 2)) * prod(
        2 * c - 2 * i - 1 for i in range(kappa)
    )


def master_c_level(j: int, kappa: int, ab: AlphaBeta, c: int) -> QExact:
    """``g / (Delta_{c-1} h + f G)`` for the given magic constants."""
    check_odd(j)
    if j == 1:
        raise ValueError("j = 1 uses montenegro_q")
    if c < 1:
        raise ValueError("c >= 1 required")
    f = c_level_f(j, kappa, c)
    den = c_level_delta(j, kappa, c - 1, ab.alpha, ab.beta) * c_level_h(j, kappa, c)
    return QExact.make(c_level_g(j, kappa, c), den, f, "G" if f else "Rational")


def delta_basis(j: int, kappa: int, m: int) -> tuple[Fraction, Fraction]:
    """(A, B) with ``Delta_m(alpha, beta) = alpha A + beta B``."""
    return c_level_delta(j, kappa, m, 1, 0), c_level_delta(j, kappa, m, 0, 1)


def alphabeta_from_values(
    j: int, kappa: int, values: dict[int, QExact], check_g_term: bool = True
) -> AlphaBeta:
    """Invert the c-level formula from exact values at two or more c.

    With ``Q = a0 / (a1 + a2 G)`` the formula gives ``Delta_{c-1} = g a1 / (a0 h)``
    and requires ``g a2 = f a0``. The first two usable c values fix alpha and
    beta; any further ones are checked. Mismatches raise ValueError.
    ``check_g_term=False`` skips the G-coefficient test and uses a0/a1 only.
    """
    rows = []
    for c, q in sorted(values.items()):
        g, f, h = c_level_g(j, kappa, c), c_level_f(j, kappa, c), c_level_h(j, kappa, c)
        if check_g_term and g * q.a2 != f * q.a0:
            raise ValueError(f"({j},{kappa},{c}): value is inconsistent with the c-level form")
        if q.a0 == 0 or h == 0:
            continue
        rows.append((delta_basis(j, kappa, c - 1), g * q.a1 / (q.a0 * h)))
    for k in range(len(rows)):
        for l in range(k + 1, len(rows)):
            (a1, b1), r1 = rows[k]
            (a2, b2), r2 = rows[l]
            det = a1 * b2 - a2 * b1
            if det:
                ab = AlphaBeta((r1 * b2 - r2 * b1) / det, (a1 * r2 - a2 * r1) / det)
                for (a, b), r in rows:
                    if a * ab.alpha + b * ab.beta != r:
                        raise ValueError(f"({j},{kappa}): values disagree with one (alpha, beta)")
                return ab
    raise ValueError(f"({j},{kappa}): not enough usable values to fix (alpha, beta)")


def bosnia_value(j: int, c: int) -> Fraction:
    check_odd(j)
    return Fraction(2 + 2 * c - j)


def bosnia_q_via_delta(j: int, c: int) -> Fraction:
    """The same value through the diagonal's own recursion (alpha = 1, beta = 15 - 4j)."""
    check_odd(j)
    if j < 5 or c < 1:
        raise ValueError("bosnia_q_via_delta needs odd j >= 5 and c >= 1")

    def back2(m):
        return -2 * m * (2 * m - j) * (2 * m + 1) * (2 * m - j + 2)

    def back1(m):
        return 8 * m * m + (14 - 4 * j) * m - 3 * (j - 2)

    delta = two_term_sequence(("bosnia", j), 1, 15 - 4 * j, back2, back1, c - 1)
    g = Fraction(math.factorial(2 * c), 2) * prod(2 + 2 * i - j for i in range(1, (j - 1) // 2 + 1))
    h = prod(2 * c - 2 * i - 1 for i in range((j - 3) // 2))
    return g / (delta * h)
