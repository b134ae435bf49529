"""Exact integer and rational arithmetic, fixed-point reals and factor vectors.

Rationals are plain :class:`fractions.Fraction` objects (always reduced, positive
denominator).  :class:`HPReal` is a decimal fixed-point real that carries a
worst-case error bound expressed in units of its last place.  :class:`FactorVec`
keeps a product as a sparse prime -> exponent map so that common factors can be
cancelled before any large multiplication happens.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

BigRational = Fraction

GUARD_DIGITS = 10
MAX_DIGITS = 20000
FACTOR_TABLE_LIMIT = 2998


# ---------------------------------------------------------------------------
# Combinatorial primitives
# ---------------------------------------------------------------------------

def semifactorial(n: int) -> int:
    """Return ``n!! = n (n-2) (n-4) ...`` for ``n >= -1``.

    The empty product convention gives ``(-1)!! = 0!! = 1!! = 1``.
    """
    if n < -1:
        raise ValueError(f"semifactorial undefined for n={n} < -1")
    result = 1
    for k in range(n, 1, -2):
        result *= k
    return result


def semifactorial_ext(n: int) -> Fraction:
    """Semifactorial continued to negative odd arguments.

    Uses ``n!! = (n+2)!! / (n+2)`` so that ``(-3)!! = -1``, ``(-5)!! = 1/3``.
    Negative even arguments have a pole and are rejected.
    """
    if n >= -1:
        return Fraction(semifactorial(n))
    if n % 2 == 0:
        raise ValueError(f"semifactorial has a pole at even n={n}")
    value = Fraction(1)
    for k in range(-1, n, -2):
        # step from k!! to (k-2)!! = k!! / k
        value /= k
    return value


def catalan_number(n: int) -> int:
    """Return the n-th Catalan number ``(2n)! / ((n+1)! n!)``."""
    if n < 0:
        raise ValueError(f"Catalan number undefined for n={n} < 0")
    return math.comb(2 * n, n) // (n + 1)


def catalan_ext(n: int) -> Fraction:
    """Catalan numbers extended to negative indices.

    ``C(-1) = -1`` and ``C(n) = 0`` for ``n <= -2``.  This is the convention
    under which the a0/a2 ratio law holds on the j = 1 line as well.
    """
    if n >= 0:
        return Fraction(catalan_number(n))
    if n == -1:
        return Fraction(-1)
    return Fraction(0)


def prod(values: Iterable) -> int | Fraction:
    """Product with the empty-product convention (returns 1)."""
    result = 1
    for v in values:
        result *= v
    return result


def pow2(e: int) -> Fraction:
    """``2**e`` as an exact rational, negative exponents allowed."""
    return Fraction(1 << e) if e >= 0 else Fraction(1, 1 << -e)


# ---------------------------------------------------------------------------
# Fixed-point reals
# ---------------------------------------------------------------------------

def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def _round_div(a: int, b: int) -> int:
    """Round a/b to the nearest integer (b > 0)."""
    q, r = divmod(2 * a + b, 2 * b)
    return q


class HPReal:
    """A real number ``mantissa / 10**scale`` with a worst-case error bound.

    ``digits`` is the number of significant digits the value was requested at;
    ``scale`` is ``digits + guard`` fractional places.  ``err`` counts units in
    the last place and is propagated conservatively through ``+ - * /``.
    """

    __slots__ = ("mantissa", "scale", "digits", "err")

    def __init__(self, mantissa: int, scale: int, digits: int, err: int = 0):
        self.mantissa = mantissa
        self.scale = scale
        self.digits = digits
        self.err = err

    @classmethod
    def from_fraction(cls, q, digits: int, guard: int = GUARD_DIGITS) -> "HPReal":
        q = Fraction(q)
        scale = digits + guard
        return cls(_round_div(q.numerator * 10**scale, q.denominator), scale, digits, 1)

    def to_fraction(self) -> Fraction:
        return Fraction(self.mantissa, 10**self.scale)

    def __float__(self) -> float:
        return self.mantissa / 10**self.scale

    @property
    def error_bound(self) -> Fraction:
        return Fraction(self.err, 10**self.scale)

    def _coerce(self, other) -> "HPReal":
        if isinstance(other, HPReal):
            return other
        if isinstance(other, (int, Fraction)):
            return HPReal.from_fraction(other, self.digits, self.scale - self.digits)
        return NotImplemented

    def _rescaled(self, scale: int) -> tuple[int, int]:
        """Mantissa and error at a smaller-or-equal scale."""
        if scale == self.scale:
            return self.mantissa, self.err
        shift = 10 ** (self.scale - scale)
        return _round_div(self.mantissa, shift), _ceil_div(self.err, shift) + 1

    def _align(self, other: "HPReal"):
        scale = min(self.scale, other.scale)
        digits = min(self.digits, other.digits)
        m1, e1 = self._rescaled(scale)
        m2, e2 = other._rescaled(scale)
        return scale, digits, m1, e1, m2, e2

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        scale, digits, m1, e1, m2, e2 = self._align(other)
        return HPReal(m1 + m2, scale, digits, e1 + e2)

    __radd__ = __add__

    def __neg__(self):
        return HPReal(-self.mantissa, self.scale, self.digits, self.err)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        scale, digits, m1, e1, m2, e2 = self._align(other)
        unit = 10**scale
        mantissa = _round_div(m1 * m2, unit)
        err = _ceil_div(abs(m1) * e2 + abs(m2) * e1 + e1 * e2, unit) + 1
        return HPReal(mantissa, scale, digits, err)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        scale, digits, m1, e1, m2, e2 = self._align(other)
        if abs(m2) <= e2:
            raise ZeroDivisionError("divisor is not bounded away from zero")
        unit = 10**scale
        num = m1 * unit
        mantissa = _round_div(num, m2) if m2 > 0 else _round_div(-num, -m2)
        err = _ceil_div(e1 * unit + (abs(mantissa) + 1) * e2, abs(m2) - e2) + 1
        return HPReal(mantissa, scale, digits, err)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __abs__(self):
        return HPReal(abs(self.mantissa), self.scale, self.digits, self.err)

    def __lt__(self, other):
        return self.to_fraction() < Fraction(other.to_fraction() if isinstance(other, HPReal) else other)

    def __eq__(self, other):
        if not isinstance(other, HPReal):
            return NotImplemented
        return (self.mantissa, self.scale) == (other.mantissa, other.scale)

    def __hash__(self):
        return hash((self.mantissa, self.scale))

    def agrees(self, other, digits: int) -> bool:
        """True when ``|self - other| <= 10**-digits * max(1, |self|)``."""
        a = self.to_fraction()
        b = other.to_fraction() if isinstance(other, HPReal) else Fraction(other)
        return abs(a - b) <= Fraction(1, 10**digits) * max(1, abs(a))

    def to_decimal_string(self, sig_digits: int | None = None) -> str:
        """Round to ``sig_digits`` significant digits (default: ``digits``)."""
        sig = self.digits if sig_digits is None else sig_digits
        m = self.mantissa
        if m == 0:
            return "0." + "0" * max(sig - 1, 1)
        sign = "-" if m < 0 else ""
        m = abs(m)
        int_digits = len(str(m)) - self.scale  # digits before the point
        places = max(sig - int_digits, 0)
        if places > self.scale:
            places = self.scale
        rounded = _round_div(m, 10 ** (self.scale - places))
        text = str(rounded).rjust(places + 1, "0")
        if places == 0:
            return sign + text
        return f"{sign}{text[:-places]}.{text[-places:]}"

    def __str__(self):
        return self.to_decimal_string()

    def __repr__(self):
        return f"HPReal({self.to_decimal_string(min(self.digits, 30))}..., digits={self.digits})"


# ---------------------------------------------------------------------------
# Constants
# ---------------------------------------------------------------------------

def _atanh_inv(x: int, unit: int) -> tuple[int, int]:
    """``atanh(1/x) * unit`` by the odd power series; returns (value, terms)."""
    total = 0
    power = unit // x
    x2 = x * x
    k = 0
    while power:
        total += power // (2 * k + 1)
        power //= x2
        k += 1
    return total, k


def _atan_inv(x: int, unit: int) -> tuple[int, int]:
    total = 0
    power = unit // x
    x2 = x * x
    k = 0
    while power:
        term = power // (2 * k + 1)
        total += -term if k % 2 else term
        power //= x2
        k += 1
    return total, k


def _pi_fixed(unit: int) -> tuple[int, int]:
    # Machin: pi = 16 atan(1/5) - 4 atan(1/239); each truncated term loses < 1 ulp
    a, na = _atan_inv(5, unit)
    b, nb = _atan_inv(239, unit)
    return 16 * a - 4 * b, 16 * (na + 1) + 4 * (nb + 1)


def _log2_fixed(unit: int) -> tuple[int, int]:
    # log 2 = 2 atanh(1/3)
    a, n = _atanh_inv(3, unit)
    return 2 * a, 2 * (n + 1)


def _catalan_fixed(unit: int) -> tuple[int, int]:
    """G = (pi/8) log(2 + sqrt 3) + (3/8) sum 1 / ((2n+1)^2 binom(2n, n)).

    ``log(2 + sqrt 3) = 2 atanh(1/sqrt 3) = (2/sqrt 3) sum 3^-k / (2k+1)``.
    The second series has ratio < 1/4; both tails are below one ulp when the
    running term underflows.
    """
    pi, e_pi = _pi_fixed(unit)
    sqrt3 = math.isqrt(3 * unit * unit)
    s = 0
    power = unit
    k = 0
    while power:
        s += power // (2 * k + 1)
        power //= 3
        k += 1
    log_term = 2 * s * unit // sqrt3  # log(2 + sqrt 3), error ~ 2k + 3 ulps
    e_log = 2 * (k + 1) + 3
    first = pi * log_term // (8 * unit)
    e_first = _ceil_div(abs(pi) * e_log + abs(log_term) * e_pi, 8 * unit) + 1
    t = 0
    binom = 1
    n = 0
    while True:
        term = unit // ((2 * n + 1) ** 2 * binom)
        if term == 0:
            break
        t += term
        n += 1
        binom = binom * (2 * n) * (2 * n - 1) // (n * n)
    second = 3 * t // 8
    return first + second, e_first + n + 2


_CONSTANTS = {"catalan_G": _catalan_fixed, "log2": _log2_fixed, "pi": _pi_fixed}
_constants_lock = threading.Lock()


@lru_cache(maxsize=None)
def _constant_cached(name: str, digits: int) -> HPReal:
    scale = digits + GUARD_DIGITS
    unit = 10**scale
    extra = 10**5
    value, err = _CONSTANTS[name](unit * extra)
    mantissa = _round_div(value, extra)
    return HPReal(mantissa, scale, digits, _ceil_div(err, extra) + 1)


def constant_value(name: str, digits: int, max_digits: int = MAX_DIGITS) -> HPReal:
    """Return ``catalan_G``, ``log2`` or ``pi`` to ``digits`` significant digits."""
    if name not in _CONSTANTS:
        raise ValueError(f"unknown constant {name!r}; expected one of {sorted(_CONSTANTS)}")
    if digits <= 0:
        raise ValueError("digits must be positive")
    if digits > max_digits:
        raise ValueError(f"digits={digits} exceeds the cap {max_digits}")
    with _constants_lock:
        return _constant_cached(name, digits)


# ---------------------------------------------------------------------------
# Factor vectors
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _smallest_prime_factors(limit: int = FACTOR_TABLE_LIMIT) -> tuple[int, ...]:
    spf = list(range(limit + 1))
    for p in range(2, math.isqrt(limit) + 1):
        if spf[p] == p:
            for m in range(p * p, limit + 1, p):
                if spf[m] == m:
                    spf[m] = p
    return tuple(spf)


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of ``|n| >= 1``: sieve table for small n, sympy beyond."""
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor zero")
    spf = _smallest_prime_factors()
    if n >= len(spf):
        from sympy import factorint  # deferred: slow import, only needed for large n

        return {int(p): int(e) for p, e in sorted(factorint(n).items())}
    out: dict[int, int] = {}
    while n > 1:
        q = spf[n]
        out[q] = out.get(q, 0) + 1
        n //= q
    return out


class FactorVec:
    """Sparse prime -> exponent map with a sign; realizes to a reduced rational."""

    __slots__ = ("exponents", "sign")

    def __init__(self, exponents: Mapping[int, int] | None = None, sign: int = 1):
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        self.exponents = {p: e for p, e in (exponents or {}).items() if e}
        self.sign = sign

    @classmethod
    def from_rational(cls, q) -> "FactorVec":
        q = Fraction(q)
        if q == 0:
            raise ValueError("zero has no factor vector")
        vec = dict(factorize(q.numerator))
        for p, e in factorize(q.denominator).items():
            vec[p] = vec.get(p, 0) - e
        return cls(vec, 1 if q > 0 else -1)

    def __mul__(self, other: "FactorVec") -> "FactorVec":
        vec = dict(self.exponents)
        for p, e in other.exponents.items():
            vec[p] = vec.get(p, 0) + e
        return FactorVec(vec, self.sign * other.sign)

    def __truediv__(self, other: "FactorVec") -> "FactorVec":
        return self * other.inverse()

    def inverse(self) -> "FactorVec":
        return FactorVec({p: -e for p, e in self.exponents.items()}, self.sign)

    def realize(self) -> Fraction:
        num = den = 1
        for p, e in self.exponents.items():
            if e > 0:
                num *= p**e
            else:
                den *= p ** (-e)
        return Fraction(self.sign * num, den)

    def __eq__(self, other):
        return isinstance(other, FactorVec) and (self.exponents, self.sign) == (other.exponents, other.sign)

    def __repr__(self):
        body = ", ".join(f"{p}:{e}" for p, e in sorted(self.exponents.items()))
        return f"FactorVec({{{body}}}, sign={'+' if self.sign > 0 else '-'})"


def factored_product(terms: Iterable[int]) -> FactorVec:
    """Factor vector of the product of nonzero integer ``terms``."""
    vec: dict[int, int] = {}
    sign = 1
    for t in terms:
        if t == 0:
            raise ValueError("zero term in factored product")
        if t < 0:
            sign = -sign
        for p, e in factorize(t).items():
            vec[p] = vec.get(p, 0) + e
    return FactorVec(vec, sign)


def reduce_common(vectors: list[FactorVec]) -> list[FactorVec]:
    """Subtract, prime by prime, the minimum exponent found across ``vectors``.

    A prime absent from a vector counts as exponent 0 there.
    """
    if not vectors:
        raise ValueError("reduce_common needs at least one vector")
    primes = set().union(*(v.exponents for v in vectors))
    mins = {p: min(v.exponents.get(p, 0) for v in vectors) for p in primes}
    return [
        FactorVec({p: v.exponents.get(p, 0) - mins[p] for p in primes}, v.sign)
        for v in vectors
    ]
