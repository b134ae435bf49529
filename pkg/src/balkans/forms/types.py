"""Small value types shared by the closed-form modules."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Hashable


@dataclass(frozen=True)
class AlphaBeta:
    """The two rational constants that pin down a c-level recurrence."""

    alpha: Fraction
    beta: Fraction

    def __post_init__(self):
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        object.__setattr__(self, "beta", Fraction(self.beta))


@dataclass(frozen=True)
class Seeds4:
    """Four j-level constants: (aa, ab) drive alpha, (ba, bb) drive beta."""

    aa: Fraction
    ab: Fraction
    ba: Fraction
    bb: Fraction

    def __post_init__(self):
        for name in ("aa", "ab", "ba", "bb"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    @property
    def alpha_pair(self) -> tuple[Fraction, Fraction]:
        return (self.aa, self.ab)

    @property
    def beta_pair(self) -> tuple[Fraction, Fraction]:
        return (self.ba, self.bb)


_SEQUENCES: dict[Hashable, list] = {}


def two_term_sequence(key: Hashable, alpha, beta, back2: Callable, back1: Callable, m: int):
    """``u_m`` for ``u_m = alpha + beta m`` (m < 2), ``back2(m) u_{m-2} + back1(m) u_{m-1}``.

    Values are cached per ``key`` (which must identify the coefficients and
    the two seeds) and extended on demand, so a sweep over m costs O(m).
    Concurrent fills are harmless: every writer stores the same values.
    """
    if m < 2:
        return alpha + beta * m
    seq = _SEQUENCES.get(key)
    if seq is None:
        seq = [alpha, alpha + beta]
    if len(seq) <= m:
        seq = list(seq)
        for k in range(len(seq), m + 1):
            seq.append(back2(k) * seq[k - 2] + back1(k) * seq[k - 1])
        _SEQUENCES[key] = seq
    return seq[m]


def clear_caches() -> None:
    _SEQUENCES.clear()
