"""Polynomial continued fractions ``T(0) + K_{n>=1} P(n) / T(n)``.

Convergents come from the forward three-term recurrence

    p_n = T(n) p_{n-1} + P(n) p_{n-2},   q_n likewise,

started from ``p_{-1} = 1, q_{-1} = 0, p_0 = T(0), q_0 = 1``.  Exact values are
rationals; decimal values are produced by doubling the depth until two
successive checkpoints agree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import gmpy2

from .exactnum import HPReal, factorize

DEFAULT_DEPTH_CAP = 2**21
REDUCE_EVERY = 64


class ZeroConvergentDenominator(ArithmeticError):
    def __init__(self, depth: int):
        super().__init__(f"convergent denominator vanishes at depth {depth}")
        self.depth = depth


class NonConvergence(ArithmeticError):
    def __init__(self, maxdepth: int):
        super().__init__(f"no agreement reached by depth {maxdepth}")
        self.maxdepth = maxdepth


# ---------------------------------------------------------------------------
# Integer polynomials (ascending coefficient tuples)
# ---------------------------------------------------------------------------

def poly_eval(coeffs: Sequence[int], n: int) -> int:
    acc = 0
    for a in reversed(coeffs):
        acc = acc * n + a
    return acc


def poly_mul(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for k, y in enumerate(b):
            out[i + k] += x * y
    return tuple(out)


def poly_from_roots(scale: int, shifts: Sequence[int]) -> tuple[int, ...]:
    """Coefficients of ``scale * prod (n + s)`` over ``shifts``."""
    out: tuple[int, ...] = (scale,)
    for s in shifts:
        out = poly_mul(out, (s, 1))
    return _trim(out)


def _trim(coeffs: Sequence[int]) -> tuple[int, ...]:
    coeffs = list(coeffs)
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _divisors(m: int) -> list[int]:
    divs = [1]
    for p, e in factorize(m).items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def smallest_positive_root(coeffs: Sequence[int]) -> int | None:
    """Smallest positive integer root of an integer polynomial, if any."""
    coeffs = _trim(coeffs)
    if all(a == 0 for a in coeffs):
        return 1
    low = next(i for i, a in enumerate(coeffs) if a != 0)
    reduced = coeffs[low:]  # divide out n**low
    if len(reduced) == 1:
        return None
    for d in _divisors(reduced[0]):
        if poly_eval(reduced, d) == 0:
            return d
    return None


# ---------------------------------------------------------------------------
# Specs
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CFSpec:
    """A polynomial continued fraction; ``lead`` is ``T(0)``.

    ``termination`` is the depth N of a finite fraction (``P(N+1) = 0``).
    ``kind`` is a hint for relation recovery: ``"G"``, ``"Log2"`` or None.
    """

    P: tuple[int, ...]
    T: tuple[int, ...]
    termination: int | None = None
    kind: str | None = None
    label: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "P", _trim(self.P))
        object.__setattr__(self, "T", _trim(self.T))
        if self.termination is not None:
            if self.termination < 0 or poly_eval(self.P, self.termination + 1) != 0:
                raise ValueError(f"P({self.termination}+1) != 0; bad termination")

    @property
    def lead(self) -> int:
        return self.T[0]

    def p(self, n: int) -> int:
        return poly_eval(self.P, n)

    def t(self, n: int) -> int:
        return poly_eval(self.T, n)

    @classmethod
    def from_polys(cls, P, T, kind=None, label="") -> "CFSpec":
        """Build a spec and detect its termination from the roots of P."""
        root = smallest_positive_root(P)
        return cls(tuple(P), tuple(T), None if root is None else root - 1, kind, label)


def balkan_numerator(j: int, kappa: int, c: int) -> tuple[int, ...]:
    return poly_from_roots(-2, (0, c, j - 1, 1 - j + 2 * kappa))


def balkan_cf_spec(j: int, kappa: int, c: int) -> CFSpec:
    """``j(2-j+2k) + K(-2n(c+n)(j+n-1)(1-j+2k+n) / (j(2-j+2k) + (3+4k)n + 3n^2))``.

    Even j is accepted; such fractions evaluate to log 2 forms.
    """
    lead = j * (2 - j + 2 * kappa)
    P = balkan_numerator(j, kappa, c)
    T = (lead, 3 + 4 * kappa, 3)
    kind = "G" if j % 2 else "Log2"
    return CFSpec.from_polys(P, T, kind=kind, label=f"Q[{j},{kappa},{c}]")


def termination_index(spec: CFSpec | tuple[int, int, int]) -> int | None:
    """Smallest n >= 1 with P(n) = 0, or None for an infinite fraction.

    This is the upper summation index of the finite fraction; the partial
    quotient at that index has a zero numerator, so ``CFSpec.termination``
    (the last nontrivial depth) is one less.
    """
    if isinstance(spec, tuple):
        spec = balkan_cf_spec(*spec)
    return smallest_positive_root(spec.P)


# ---------------------------------------------------------------------------
# Evaluation
# ---------------------------------------------------------------------------

@dataclass
class Convergent:
    p: int
    q: int
    depth: int

    def value(self) -> Fraction:
        if self.q == 0:
            raise ZeroConvergentDenominator(self.depth)
        return Fraction(self.p, self.q)


class _Recurrence:
    """Stateful forward recurrence; can be advanced to any deeper depth."""

    def __init__(self, spec: CFSpec):
        self.spec = spec
        self.p0, self.q0 = gmpy2.mpz(1), gmpy2.mpz(0)
        self.p1, self.q1 = gmpy2.mpz(spec.lead), gmpy2.mpz(1)
        self.depth = 0

    def advance(self, depth: int) -> Convergent:
        P, T = self.spec.P, self.spec.T
        p0, q0, p1, q1 = self.p0, self.q0, self.p1, self.q1
        for n in range(self.depth + 1, depth + 1):
            a, b = poly_eval(T, n), poly_eval(P, n)
            p0, p1 = p1, a * p1 + b * p0
            q0, q1 = q1, a * q1 + b * q0
            if n % REDUCE_EVERY == 0:
                g = gmpy2.gcd(gmpy2.gcd(p0, p1), gmpy2.gcd(q0, q1))
                if g > 1:
                    p0, p1, q0, q1 = p0 // g, p1 // g, q0 // g, q1 // g
        self.p0, self.q0, self.p1, self.q1 = p0, q0, p1, q1
        self.depth = max(depth, self.depth)
        return Convergent(int(p1), int(q1), self.depth)


def eval_cf_convergent(spec: CFSpec, depth: int) -> Fraction:
    """Exact value of the fraction truncated after ``depth`` partial quotients.

    For a finite fraction any depth past the termination gives its exact value.
    """
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    if spec.termination is not None:
        depth = min(depth, spec.termination)
    conv = _Recurrence(spec).advance(depth)
    if conv.q == 0:
        raise ZeroConvergentDenominator(conv.depth)
    return Fraction(conv.p, conv.q)


def _fixed(p: int, q: int, scale: int) -> int:
    num = p * 10**scale
    if q < 0:
        num, q = -num, -q
    return (2 * num + q) // (2 * q)


def cf_decimal_and_depth(
    spec: CFSpec,
    digits: int,
    depth_cap: int = DEFAULT_DEPTH_CAP,
    start_depth: int = 64,
) -> tuple[HPReal, int]:
    """Evaluate to ``digits`` significant digits; also return the depth used.

    Successive checkpoints at doubling depths must agree to ``digits + 5``
    places (relative to ``max(1, |value|)``) before a value is accepted.
    """
    if spec.termination is not None:
        return HPReal.from_fraction(eval_cf_convergent(spec, spec.termination), digits), spec.termination
    rec = _Recurrence(spec)
    scale = digits + 5
    previous = None
    depth = start_depth
    while depth <= depth_cap:
        conv = rec.advance(depth)
        if conv.q != 0:
            current = _fixed(conv.p, conv.q, scale)
            if previous is not None:
                magnitude = max(10**scale, abs(current))
                if abs(current - previous) * 10**scale < magnitude:
                    return HPReal.from_fraction(Fraction(conv.p, conv.q), digits), depth
            previous = current
        depth *= 2
    raise NonConvergence(depth_cap)


def eval_cf_decimal(spec: CFSpec, digits: int, depth_cap: int = DEFAULT_DEPTH_CAP) -> HPReal:
    return cf_decimal_and_depth(spec, digits, depth_cap)[0]


def convergents(spec: CFSpec, depths: Sequence[int]) -> list[Convergent]:
    """Convergents at increasing ``depths`` sharing one recurrence run."""
    rec = _Recurrence(spec)
    return [rec.advance(d) for d in sorted(depths)]


def gcd_reduced(conv: Convergent) -> Convergent:
    g = math.gcd(conv.p, conv.q) or 1
    return Convergent(conv.p // g, conv.q // g, conv.depth)
