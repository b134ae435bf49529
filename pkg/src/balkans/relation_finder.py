"""Integer relations by lattice reduction, and the numeric derivation chain.

A relation for ``(x_0, ..., x_m)`` is sought as a short vector of the lattice
spanned by the rows ``(e_i | round(x_i 10^d))``.  Candidates are accepted only
after the residual is re-checked at a higher precision.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Sequence

from .cf_engine import CFSpec, balkan_cf_spec, cf_decimal_and_depth, eval_cf_convergent
from .exactnum import HPReal, constant_value
from .forms.master import alphabeta_from_values
from .forms.kosovo import kappa_scale
from .forms.qexact import QExact
from .forms.regions import check_odd
from .forms.types import AlphaBeta, Seeds4

DEFAULT_BOUND = 10**80
IntVector = tuple


class NoRelation(ArithmeticError):
    pass


class DependentRows(ValueError):
    pass


# ---------------------------------------------------------------------------
# LLL
# ---------------------------------------------------------------------------

def _dot(a, b) -> int:
    return sum(x * y for x, y in zip(a, b))


def lll_reduce(basis: Sequence[Sequence[int]], delta: Fraction = Fraction(3, 4)) -> list[list[int]]:
    """LLL-reduce integer row vectors using exact integer Gram-Schmidt data.

    Integral variant: with ``d_i`` the leading Gram minors and
    ``lam[k][i] = d_{i+1} mu[k][i]`` all quantities stay integers.
    """
    delta = Fraction(delta)
    if not Fraction(1, 4) < delta < 1:
        raise ValueError("delta must lie in (1/4, 1)")
    dp, dq = delta.numerator, delta.denominator
    b = [list(map(int, row)) for row in basis]
    n = len(b)
    if n == 0:
        return []
    d = [1] + [0] * n  # d[i] is the Gram determinant of the first i rows
    lam = [[0] * n for _ in range(n)]

    def gram_schmidt_row(k):
        for j in range(k + 1):
            u = _dot(b[k], b[j])
            for i in range(j):
                u = (d[i + 1] * u - lam[k][i] * lam[j][i]) // d[i]
            if j < k:
                lam[k][j] = u
            else:
                if u == 0:
                    raise DependentRows("basis rows are linearly dependent")
                d[k + 1] = u

    def reduce(k, l):
        if 2 * abs(lam[k][l]) > d[l + 1]:
            q = (2 * lam[k][l] + d[l + 1]) // (2 * d[l + 1])
            b[k] = [x - q * y for x, y in zip(b[k], b[l])]
            lam[k][l] -= q * d[l + 1]
            for i in range(l):
                lam[k][i] -= q * lam[l][i]

    def swap(k, kmax):
        b[k], b[k - 1] = b[k - 1], b[k]
        for j in range(k - 1):
            lam[k][j], lam[k - 1][j] = lam[k - 1][j], lam[k][j]
        lm = lam[k][k - 1]
        B = (d[k - 1] * d[k + 1] + lm * lm) // d[k]
        for i in range(k + 1, kmax + 1):
            t = lam[i][k]
            lam[i][k] = (d[k + 1] * lam[i][k - 1] - lm * t) // d[k]
            lam[i][k - 1] = (B * t + lm * lam[i][k]) // d[k + 1]
        d[k] = B

    gram_schmidt_row(0)
    k, kmax = 1, 0
    while k < n:
        if k > kmax:
            kmax = k
            gram_schmidt_row(k)
        reduce(k, k - 1)
        # Lovasz: d_k d_{k-2} >= delta d_{k-1}^2 - lam^2  (1-based minors)
        if dq * d[k + 1] * d[k - 1] < dp * d[k] ** 2 - dq * lam[k][k - 1] ** 2:
            swap(k, kmax)
            k = max(1, k - 1)
        else:
            for l in range(k - 2, -1, -1):
                reduce(k, l)
            k += 1
    return b


def is_lll_reduced(basis: Sequence[Sequence[int]], delta: Fraction = Fraction(3, 4)) -> bool:
    """Check size reduction and the Lovasz condition with exact rationals."""
    n = len(basis)
    bstar: list[list[Fraction]] = []
    mu = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        v = [Fraction(x) for x in basis[i]]
        for j in range(i):
            mu[i][j] = _dot(basis[i], bstar[j]) / _dot(bstar[j], bstar[j])
            v = [x - mu[i][j] * y for x, y in zip(v, bstar[j])]
        bstar.append(v)
    for i in range(n):
        for j in range(i):
            if abs(mu[i][j]) > Fraction(1, 2):
                return False
    for k in range(1, n):
        lhs = _dot(bstar[k], bstar[k])
        rhs = (delta - mu[k][k - 1] ** 2) * _dot(bstar[k - 1], bstar[k - 1])
        if lhs < rhs:
            return False
    return True


# ---------------------------------------------------------------------------
# Relations
# ---------------------------------------------------------------------------

def _fixed(x: HPReal, places: int) -> int:
    shift = x.scale - places
    if shift >= 0:
        return (2 * x.mantissa + 10**shift) // (2 * 10**shift)
    return x.mantissa * 10 ** (-shift)


def _normalize(v: Sequence[int]) -> tuple[int, ...]:
    v = list(v)
    g = math.gcd(*v)
    if g:
        v = [x // g for x in v]
    last = next((x for x in reversed(v) if x), 0)
    if last < 0:
        v = [-x for x in v]
    return tuple(v)


def _residual(v: Sequence[int], xs: Sequence[HPReal]) -> Fraction:
    return abs(sum(c * x.to_fraction() for c, x in zip(v, xs)))


def _precision_of(xs: Sequence[HPReal]) -> int:
    return min(x.digits for x in xs)


def _is_zero_at(v: Sequence[int], xs: Sequence[HPReal]) -> bool:
    """``v . xs`` vanishes to within the accumulated error of ``xs``."""
    digits = _precision_of(xs)
    slack = sum(abs(c) for c in v) + 1
    return _residual(v, xs) <= Fraction(slack, 10 ** (digits - 3))


def find_integer_relation(
    xs: Sequence[HPReal],
    digits: int | None = None,
    bound: int = DEFAULT_BOUND,
    refine: Callable[[int], Sequence[HPReal]] | None = None,
) -> IntVector:
    """Short integer vector ``v`` with ``v . xs = 0``.

    ``digits`` is the working precision (default: that of ``xs``).  When
    ``refine`` is given it must return ``xs`` recomputed at the requested
    precision; the candidate is then re-checked at twice the working
    precision.  Without it the candidate must vanish at the working
    precision while being far smaller than what that precision could force.
    The result is normalized so its last nonzero entry is positive.
    """
    if digits is None:
        digits = _precision_of(xs)
    scale = max(digits - 5, 10)
    m = len(xs)
    rows = [[1 if i == k else 0 for i in range(m)] + [_fixed(x, scale)] for k, x in enumerate(xs)]
    reduced = lll_reduce(rows)
    candidates = sorted((row[:m] for row in reduced if any(row[:m])), key=lambda r: _dot(r, r))
    threshold = Fraction(1, 10 ** (digits // 2))
    fine = None
    for v in candidates:
        if max(abs(c) for c in v) > bound:
            continue
        if _residual(v, xs) >= threshold:
            continue
        if refine is not None:
            fine = fine or refine(2 * digits)
            if not _is_zero_at(v, fine):
                continue
        else:
            size = max(len(str(abs(c))) for c in v)
            if size * m > digits - 20 or not _is_zero_at(v, xs):
                continue
        return _normalize(v)
    raise NoRelation(f"no validated relation at {digits} digits")


_CONSTANT = {"G": "catalan_G", "Log2": "log2"}


def recover_qexact(spec: CFSpec, kind: str | None = None, digits: int = 300) -> QExact:
    """Evaluate ``spec`` and identify it as ``a0 / (a1 + a2 K)``."""
    if spec.termination is not None:
        return QExact.rational(eval_cf_convergent(spec, spec.termination))
    kind = kind or spec.kind or "G"

    def vector(prec: int) -> list[HPReal]:
        r, _ = cf_decimal_and_depth(spec, prec)
        if kind == "Rational":
            return [HPReal.from_fraction(1, prec), r]
        k = constant_value(_CONSTANT[kind], prec + 10)
        return [HPReal.from_fraction(1, prec), r, r * k]

    v = list(find_integer_relation(vector(digits), digits, refine=vector)) + [0]
    # v0 + v1 r + v2 r K = 0  =>  r = -v0 / (v1 + v2 K)
    q = QExact.make(-v[0], v[1], v[2], kind if v[2] else "Rational")
    r, _ = cf_decimal_and_depth(spec, digits)
    if not q.value(digits).agrees(r, digits - 20):
        raise NoRelation("recovered triple does not reproduce the value")
    return q


def derive_alphabeta_numeric(j: int, kappa: int, digits: int = 2000) -> AlphaBeta:
    """Magic constants of (j, kappa) from values recovered at c = 1, 2."""
    check_odd(j)
    if j == 1:
        raise ValueError("j = 1 follows its own closed form")
    values = {c: recover_qexact(balkan_cf_spec(j, kappa, c), "G", digits) for c in (1, 2)}
    return alphabeta_from_values(j, kappa, values)


def derive_seeds_numeric(j: int, digits: int = 5000) -> Seeds4:
    """j-level seeds from the magic constants at kappa = j - 2 and j - 1."""
    check_odd(j)
    if j < 3:
        raise ValueError("seeds exist for odd j >= 3")
    pair = {k: derive_alphabeta_numeric(j, k, digits) for k in (j - 2, j - 1)}
    out = []
    for w in (0, 1):
        e = [(pair[k].alpha + w * pair[k].beta) * kappa_scale(w, j, k) for k in (j - 2, j - 1)]
        out.append((e[0], e[1] - e[0]))
    (aa, ab), (ba, bb) = out
    return Seeds4(aa, ab, ba, bb)
