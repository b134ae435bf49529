"""Croatia and Bosnia-Herzegovina: finite fractions and the psi polynomials."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from ..cf_engine import balkan_cf_spec, eval_cf_convergent, poly_eval
from ..exactnum import pow2, prod, semifactorial_ext
from ..tables import psi_table
from .master import alphabeta_from_values
from .qexact import QExact
from .regions import check_odd
from .types import AlphaBeta


@dataclass(frozen=True)
class PsiPoly:
    """psi1(i, .) and psi2(i, .) as ascending integer coefficients in j."""

    i: int
    coeffs1: tuple[int, ...]
    coeffs2: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs1) != self.i + 1 or len(self.coeffs2) != self.i + 2:
            raise ValueError("psi1 must have degree i and psi2 degree i + 1")

    def psi1(self, j: int) -> int:
        return poly_eval(self.coeffs1, j)

    def psi2(self, j: int) -> int:
        return poly_eval(self.coeffs2, j)

    def leading_law_holds(self) -> bool:
        """Leading coefficients are -(2i-1)!! for psi1 and 4(2i-1)!! for psi2."""
        lead = semifactorial_ext(2 * self.i - 1)
        return self.coeffs1[-1] == -lead and self.coeffs2[-1] == 4 * lead


def croatia_mu(i: int, j: int) -> Fraction:
    """``-prod_{q=1}^{i} (j - 2q - 2) / (-2)^((3j - 11 - 4i)/2)``."""
    e = (3 * j - 11 - 4 * i) // 2
    return -prod(j - 2 * q - 2 for q in range(1, i + 1)) * (-1) ** e / pow2(e)


def _check_croatia(i: int, j: int) -> None:
    check_odd(j)
    if i < 0 or j < 2 * i + 5:
        raise ValueError(f"Croatia form needs i >= 0 and j >= 2i + 5, got i={i}, j={j}")


def finite_value(j: int, kappa: int, c: int) -> QExact:
    """Exact value of a terminating fraction by summation."""
    spec = balkan_cf_spec(j, kappa, c)
    if spec.termination is None:
        raise ValueError(f"({j},{kappa},{c}) does not terminate")
    return QExact.rational(eval_cf_convergent(spec, spec.termination))


def finite_alphabeta(j: int, kappa: int, cs=(1, 2, 3, 4)) -> AlphaBeta:
    """Magic constants of a terminating (j, kappa) from exact finite values."""
    return alphabeta_from_values(j, kappa, {c: finite_value(j, kappa, c) for c in cs})


def croatia_alphabeta_from(psi: PsiPoly, j: int) -> AlphaBeta:
    _check_croatia(psi.i, j)
    mu = croatia_mu(psi.i, j)
    return AlphaBeta(psi.psi1(j) / mu, psi.psi2(j) / mu)


def croatia_alphabeta(i: int, j: int) -> AlphaBeta:
    _check_croatia(i, j)
    table = psi_table()
    if i not in table:
        raise ValueError(f"no built-in psi table for i={i}; use croatia_psi_interpolate")
    return croatia_alphabeta_from(PsiPoly(i, *table[i]), j)


def _interpolate(points: list[tuple[int, Fraction]]) -> list[Fraction]:
    """Ascending coefficients of the Lagrange polynomial through ``points``."""
    n = len(points)
    coeffs = [Fraction(0)] * n
    for k, (xk, yk) in enumerate(points):
        basis = [Fraction(1)]
        den = Fraction(1)
        for m, (xm, _) in enumerate(points):
            if m == k:
                continue
            basis = [Fraction(0)] + basis
            for t in range(len(basis) - 1):
                basis[t] -= xm * basis[t + 1]
            den *= xk - xm
        for t in range(n):
            coeffs[t] += yk * basis[t] / den
    return coeffs


def _as_ints(coeffs: list[Fraction], what: str) -> tuple[int, ...]:
    if any(c.denominator != 1 for c in coeffs):
        raise ArithmeticError(f"{what} interpolated with non-integer coefficients")
    return tuple(int(c) for c in coeffs)


@lru_cache(maxsize=None)
def croatia_psi_interpolate(i: int) -> PsiPoly:
    """psi polynomials rebuilt from finite-summation magic constants.

    Uses i + 3 consecutive admissible odd j (one more than psi2 needs) and
    checks the spare point against both polynomials.
    """
    if i < 0:
        raise ValueError("i >= 0 required")
    js = [2 * i + 5 + 2 * t for t in range(i + 3)]
    samples = []
    for j in js:
        ab = finite_alphabeta(j, (j - 2 * i - 3) // 2)
        mu = croatia_mu(i, j)
        samples.append((j, ab.alpha * mu, ab.beta * mu))
    c1 = _interpolate([(j, p1) for j, p1, _ in samples[: i + 1]])
    c2 = _interpolate([(j, p2) for j, _, p2 in samples[: i + 2]])
    psi = PsiPoly(i, _as_ints(c1, "psi1"), _as_ints(c2, "psi2"))
    for j, p1, p2 in samples[i + 1 :]:
        if psi.psi1(j) != p1 or psi.psi2(j) != p2:
            raise ArithmeticError(f"psi interpolation for i={i} fails its check point j={j}")
    return psi


def nested_value(constants, roots, sign: int, j: int):
    """``k0 + sign (k1 + (k2 + ...)(j - r2))(j - r1)`` evaluated inside out."""
    acc = constants[-1]
    for idx in range(len(roots) - 1, 0, -1):
        acc = constants[idx] + acc * (j - roots[idx])
    return constants[0] + sign * acc * (j - roots[0])
