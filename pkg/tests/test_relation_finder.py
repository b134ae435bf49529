import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from balkans.balkan_forms import QExact, finite_alphabeta, kosovo_j_seeds, kosovo_kappa_level, magic_constants, q_exact
from balkans.cf_engine import CFSpec, balkan_cf_spec, cf_decimal_and_depth
from balkans.exactnum import HPReal, constant_value
from balkans.relation_finder import (
    DependentRows,
    NoRelation,
    derive_alphabeta_numeric,
    derive_seeds_numeric,
    find_integer_relation,
    is_lll_reduced,
    lll_reduce,
    recover_qexact,
)


def norm2(v):
    return sum(x * x for x in v)


def det3(m):
    (a, b, c), (d, e, f), (g, h, i) = m
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


# -- LLL -------------------------------------------------------------------

def test_identity_is_reduced():
    basis = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert lll_reduce(basis) == basis


def test_two_dimensional_example():
    out = lll_reduce([[1, 0], [4, 1]])
    assert norm2(out[0]) <= min(norm2([1, 0]), norm2([4, 1]))
    assert is_lll_reduced(out)


def test_rejects_bad_delta_and_dependent_rows():
    with pytest.raises(ValueError):
        lll_reduce([[1, 0], [0, 1]], Fraction(1, 5))
    with pytest.raises(DependentRows):
        lll_reduce([[1, 2], [2, 4]])


matrices3 = st.lists(st.lists(st.integers(-60, 60), min_size=3, max_size=3), min_size=3, max_size=3).filter(
    lambda m: det3(m) != 0
)


@given(matrices3)
@settings(max_examples=100)
def test_lll_against_brute_force(basis):
    out = lll_reduce(basis)
    assert is_lll_reduced(out)
    assert abs(det3(out)) == abs(det3(basis))
    # every reduced row is an integer combination of the input rows
    for row in out:
        coeffs = _solve3(basis, row)
        assert all(c.denominator == 1 for c in coeffs)
    box = range(-4, 5)
    shortest = min(
        norm2([sum(c * out[k][i] for k, c in enumerate(cs)) for i in range(3)])
        for cs in itertools.product(box, repeat=3) if any(cs)
    )
    # shortest output vector within 2^((n-1)/2) of the shortest lattice vector
    assert norm2(out[0]) <= 4 * shortest


def _solve3(m, v):
    """Coefficients x with x . m = v, by Cramer's rule on the transpose."""
    t = [[Fraction(m[r][c]) for r in range(3)] for c in range(3)]
    d = det3(t)
    out = []
    for k in range(3):
        mk = [row[:k] + [Fraction(v[i])] + row[k + 1:] for i, row in enumerate(t)]
        out.append(det3(mk) / d)
    return out


@given(st.lists(st.lists(st.integers(-10**6, 10**6), min_size=4, max_size=4), min_size=4, max_size=4))
@settings(max_examples=40)
def test_lll_output_is_reduced_in_four_dimensions(basis):
    try:
        out = lll_reduce(basis)
    except DependentRows:
        return
    assert is_lll_reduced(out)


# -- relations -------------------------------------------------------------

def hp(q, digits=120):
    return HPReal.from_fraction(q, digits)


def test_rational_relation():
    g = constant_value("catalan_G", 120)
    assert find_integer_relation([hp(1), hp(3), g * 3]) == (-3, 1, 0)


def test_table10_relation():
    g = constant_value("catalan_G", 130)
    r = QExact.make(-288, 31, -90).value(120)
    v = find_integer_relation([hp(1), r, r * g])
    assert v in ((288, 31, -90), (-288, -31, 90))
    assert v == (-288, -31, 90)


def test_exact_dependence_normalization():
    g = constant_value("catalan_G", 120)
    v = find_integer_relation([hp(1), g, g])
    # last nonzero entry positive; the spec example prints the negation
    assert v == (0, -1, 1)
    assert tuple(-x for x in v) == (0, 1, -1)


def test_no_relation_among_unrelated_constants():
    xs = [hp(1, 60), constant_value("pi", 60), constant_value("catalan_G", 60), constant_value("log2", 60)]
    with pytest.raises(NoRelation):
        find_integer_relation(xs, bound=10**6)


def test_refined_residual_shrinks():
    spec = balkan_cf_spec(1, 1, 3)
    digits = 200

    def vector(prec):
        r, _ = cf_decimal_and_depth(spec, prec)
        g = constant_value("catalan_G", prec + 10)
        return [hp(1, prec), r, r * g]

    v = find_integer_relation(vector(digits), digits, refine=vector)
    coarse = abs(sum(c * x.to_fraction() for c, x in zip(v, vector(digits))))
    fine = abs(sum(c * x.to_fraction() for c, x in zip(v, vector(2 * digits))))
    assert fine * 10 ** (digits // 4) <= coarse or fine < Fraction(1, 10 ** (2 * digits - 20))


# -- recovery --------------------------------------------------------------

def test_recover_examples():
    assert recover_qexact(balkan_cf_spec(1, 1, 3), "G", 300) == QExact.make(-288, 31, -90)
    rc6 = CFSpec.from_polys((0, -2, -2), (6, 3), kind="Log2")
    assert recover_qexact(rc6, "Log2", 200) == QExact.make(-2, -17, 24, "Log2")
    assert recover_qexact(balkan_cf_spec(3, 2, 3), "G", 300) == QExact.make(192, 13, 18)


def test_recover_terminating_is_exact():
    assert recover_qexact(balkan_cf_spec(5, 1, 3)) == QExact.rational(3)


@pytest.mark.parametrize("j, kappa, c", [(1, 2, 4), (3, 1, 2), (3, 4, 5), (5, 3, 2), (7, 5, 1), (9, 6, 3), (5, 4, 6)])
def test_round_trip_with_closed_forms(j, kappa, c):
    assert recover_qexact(balkan_cf_spec(j, kappa, c), "G", 300) == q_exact(j, kappa, c)


# -- derivations -----------------------------------------------------------

def test_derive_bosnia_constants():
    ab = derive_alphabeta_numeric(5, 1, 300)
    assert (ab.alpha, ab.beta) == (4, -20)
    assert ab == finite_alphabeta(5, 1)
    ab = derive_alphabeta_numeric(7, 2, 300)
    assert ab.beta / ab.alpha == 15 - 4 * 7


def test_derive_matches_kappa_level():
    assert derive_alphabeta_numeric(3, 2, 300) == kosovo_kappa_level(3, kosovo_j_seeds(3), 2)


def test_derive_at_default_precision():
    assert derive_alphabeta_numeric(3, 1) == magic_constants(3, 1)


@pytest.mark.parametrize("j", [3, 5, 9])
def test_derive_seeds_examples(j):
    assert derive_seeds_numeric(j, 400) == kosovo_j_seeds(j)


def test_derive_seeds_values():
    assert derive_seeds_numeric(9, 400).alpha_pair == (667115, 60003486)


def test_derive_rejects_montenegro_and_even():
    with pytest.raises(ValueError):
        derive_alphabeta_numeric(1, 2, 100)
    with pytest.raises(ValueError):
        derive_alphabeta_numeric(4, 2, 100)
    with pytest.raises(ValueError):
        derive_seeds_numeric(1, 100)
