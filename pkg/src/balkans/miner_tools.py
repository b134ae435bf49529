"""Divisibility sieving of candidate factors, and the brittleness measure."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Sequence

from .exactnum import catalan_ext, catalan_number, factorize, prod

FAMILIES = ("affine", "catalan", "product")
ZERO_POLICIES = ("zero-eliminates", "zero-skips")
NEGATIVE_POLICIES = ("negative-extended", "negative-eliminates", "negative-skips")


def brittleness(q) -> int:
    """Prime factors, with multiplicity, of numerator plus denominator."""
    q = Fraction(q)
    if q == 0:
        raise ValueError("brittleness of zero is undefined")
    total = 0
    for part in (q.numerator, q.denominator):
        if abs(part) > 1:
            total += sum(factorize(abs(part)).values())
    return total


def n_omega_target(j: int, kappa: int, c: int) -> int:
    """``C_{k-1} C_{(j-3)/2} (2k-1)(j-2) prod_{i=1}^{(j-1)/2} (2c-2k+2i-1)(k-i+1)``."""
    if j % 2 == 0 or j < 3 or kappa < 1 or c < 1:
        raise ValueError("target needs odd j >= 3, kappa >= 1, c >= 1")
    value = (
        catalan_ext(kappa - 1)
        * catalan_ext((j - 3) // 2)
        * (2 * kappa - 1)
        * (j - 2)
        * prod((2 * c - 2 * kappa + 2 * i - 1) * (kappa - i + 1) for i in range(1, (j - 1) // 2 + 1))
    )
    return int(value)


@dataclass(frozen=True)
class UVec:
    """Coefficients of ``u0 j + u1 kappa + u2 c + u3`` (and ``u4 i`` for products)."""

    coeffs: tuple

    def sigma(self, j, kappa, c):
        u = self.coeffs
        return u[0] * j + u[1] * kappa + u[2] * c + u[3]

    def __iter__(self):
        return iter(self.coeffs)


@dataclass
class MiningDB:
    entries: list[tuple[int, int, int, int]] = field(default_factory=list)

    @classmethod
    def parse(cls, text: str) -> "MiningDB":
        entries = []
        for lineno, line in enumerate(text.splitlines(), 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 4:
                raise ValueError(f"line {lineno}: expected 'j kappa c t', got {line!r}")
            try:
                entries.append(tuple(int(x) for x in parts))
            except ValueError:
                raise ValueError(f"line {lineno}: non-integer field in {line!r}") from None
        return cls(entries)

    @classmethod
    def read(cls, path) -> "MiningDB":
        return cls.parse(Path(path).read_text())

    def dumps(self) -> str:
        return "".join(f"{j} {k} {c} {t}\n" for j, k, c, t in self.entries)

    def write(self, path) -> None:
        Path(path).write_text(self.dumps())

    @classmethod
    def from_target(cls, j: int, kappa: int, cs: Iterable[int]) -> "MiningDB":
        return cls([(j, kappa, c, n_omega_target(j, kappa, c)) for c in cs])


@dataclass
class DecimationResult:
    family: str
    box_size: int
    survivors: list[UVec]
    eliminated_per_entry: list[int]
    policy: str

    @property
    def eliminated(self) -> int:
        return self.box_size - len(self.survivors)


_UNDEFINED = object()


@lru_cache(maxsize=4096)
def _catalan(n: int) -> int:
    return catalan_number(n)


def _candidate(family: str, u: Sequence[int], j: int, kappa: int, c: int, extended: bool = True):
    """Candidate value, or _UNDEFINED for a negative Catalan index when not extended."""
    s = u[0] * j + u[1] * kappa + u[2] * c + u[3]
    if family == "affine":
        return s
    if family == "catalan":
        if s >= 0:
            return _catalan(s)
        return int(catalan_ext(s)) if extended else _UNDEFINED
    if family == "product":
        return prod(s + u[4] * i for i in range(1, (j - 1) // 2 + 1))
    raise ValueError(f"unknown family {family!r}")


def _box(box, dim: int) -> list[range]:
    if isinstance(box, int):
        return [range(-box, box + 1)] * dim
    box = list(box)
    if len(box) != dim:
        raise ValueError(f"box needs {dim} intervals")
    return [range(lo, hi + 1) for lo, hi in box]


def decimate(
    family: str,
    box,
    db: MiningDB,
    zero_policy: str = "zero-eliminates",
    negative_policy: str = "negative-extended",
) -> DecimationResult:
    """Remove every u for which some database target is not divisible by the candidate.

    ``box`` is a half-width (the cube [-b, b]^d) or explicit (lo, hi) pairs.
    A zero candidate divides nothing, so by default it eliminates; with
    ``zero-skips`` that entry is ignored instead.  Negative Catalan indices
    follow ``negative_policy``: ``negative-extended`` uses C_{-1} = -1 and
    C_n = 0 below (then the zero policy applies); the other two eliminate or
    skip outright.
    """
    if family not in FAMILIES:
        raise ValueError(f"family must be one of {FAMILIES}")
    if zero_policy not in ZERO_POLICIES or negative_policy not in NEGATIVE_POLICIES:
        raise ValueError("unknown policy")
    dim = 5 if family == "product" else 4
    ranges = _box(box, dim)
    extended = negative_policy == "negative-extended"
    per_entry = [0] * len(db.entries)
    survivors = []
    size = 0
    for u in itertools.product(*ranges):
        size += 1
        alive = True
        for idx, (j, kappa, c, t) in enumerate(db.entries):
            y = _candidate(family, u, j, kappa, c, extended)
            if y is _UNDEFINED:
                killed = negative_policy == "negative-eliminates"
            elif y == 0:
                killed = zero_policy == "zero-eliminates"
            else:
                killed = t % y != 0
            if killed:
                per_entry[idx] += 1
                alive = False
        if alive:
            survivors.append(UVec(u))
    policy = zero_policy if family != "catalan" else f"{zero_policy},{negative_policy}"
    return DecimationResult(family, size, survivors, per_entry, policy)
