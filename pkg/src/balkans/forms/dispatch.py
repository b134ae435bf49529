"""One entry point for exact values and magic constants anywhere on the grid."""

from __future__ import annotations

from functools import lru_cache

from ..cf_engine import balkan_cf_spec
from .croatia import finite_value
from .kosovo import kosovo_alphabeta
from .master import alphabeta_from_values, master_c_level
from .montenegro import montenegro_q
from .qexact import QExact
from .regions import Area, check_odd, classify, serbia_reflect
from .types import AlphaBeta


def _terminates(j: int, kappa: int) -> bool:
    # P(n) has the factors (j + n - 1) and (1 - j + 2 kappa + n)
    return j <= 0 or j >= 2 * kappa + 2


def q_exact(j: int, kappa: int, c: int) -> QExact:
    """Exact value of the fraction at (j, kappa, c).

    Terminating fractions are summed; Serbia is reflected; j = 1 uses the
    Montenegro form; Kosovo goes seeds -> kappa level -> c level.
    """
    check_odd(j)
    if j < 1 or kappa < 0 or c < 1:
        raise ValueError(f"q_exact needs odd j >= 1, kappa >= 0, c >= 1, got ({j},{kappa},{c})")
    if j >= 2 * kappa + 3:
        return finite_value(j, kappa, c)
    area = classify(j, kappa)
    if area is Area.SERBIA:
        j = serbia_reflect(j, kappa)
    if j == 1:
        return montenegro_q(kappa, c)
    return master_c_level(j, kappa, kosovo_alphabeta(j, kappa), c)


@lru_cache(maxsize=None)
def magic_constants(j: int, kappa: int, checked: bool = True) -> AlphaBeta:
    """alpha, beta for any odd j and integer kappa, exactly.

    Negative parameters give terminating fractions and are summed. With
    ``checked=False`` the constants are fitted to c = 1, 2 from a0/a1 alone,
    with no further consistency test; this is how they are defined where the
    c-level form does not hold (j = 1, kappa < 0).
    """
    check_odd(j)
    if checked and j >= 3 and kappa >= j - 2:
        return kosovo_alphabeta(j, kappa)
    cs = (1, 2, 3, 4) if checked else (1, 2)
    if _terminates(j, kappa):
        values = {c: finite_value(j, kappa, c) for c in cs}
    elif j == 1 and checked:
        raise ValueError("j = 1 does not follow the c-level form; pass checked=False")
    else:
        values = {c: q_exact(j, kappa, c) for c in cs}
    return alphabeta_from_values(j, kappa, values, check_g_term=checked)


def numeric_spec(j: int, kappa: int, c: int):
    return balkan_cf_spec(j, kappa, c)
