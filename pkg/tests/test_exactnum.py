import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from balkans.exactnum import (
    FactorVec,
    HPReal,
    catalan_ext,
    catalan_number,
    constant_value,
    factored_product,
    factorize,
    pow2,
    reduce_common,
    semifactorial,
    semifactorial_ext,
)


@pytest.mark.parametrize("n, expected", [(-1, 1), (0, 1), (1, 1), (5, 15), (6, 48), (9, 945)])
def test_semifactorial_values(n, expected):
    assert semifactorial(n) == expected


def test_semifactorial_rejects_below_minus_one():
    with pytest.raises(ValueError):
        semifactorial(-2)


@pytest.mark.parametrize("k", range(1, 51))
def test_odd_times_even_semifactorial_is_factorial(k):
    even = math.prod(range(2, 2 * k + 1, 2))
    assert semifactorial(2 * k - 1) * even == math.factorial(2 * k)


def test_semifactorial_extension_to_negative_odd():
    assert semifactorial_ext(-3) == -1
    assert semifactorial_ext(-5) == Fraction(1, 3)
    assert semifactorial_ext(7) == 105
    with pytest.raises(ValueError):
        semifactorial_ext(-4)


@pytest.mark.parametrize("n, expected", [(0, 1), (1, 1), (2, 2), (3, 5), (4, 14), (5, 42), (10, 16796)])
def test_catalan_numbers(n, expected):
    assert catalan_number(n) == expected


def test_catalan_rejects_negative_and_extension_convention():
    with pytest.raises(ValueError):
        catalan_number(-1)
    assert catalan_ext(-1) == -1
    assert catalan_ext(-2) == catalan_ext(-7) == 0
    assert catalan_ext(6) == 132


def test_pow2_negative_exponent():
    assert pow2(3) == 8
    assert pow2(-3) == Fraction(1, 8)
    assert pow2(0) == 1


@pytest.mark.parametrize(
    "name, digits, text",
    [("catalan_G", 8, "0.91596559"), ("log2", 10, "0.6931471806"), ("pi", 9, "3.14159265")],
)
def test_constant_examples(name, digits, text):
    assert constant_value(name, digits).to_decimal_string() == text


@pytest.mark.parametrize("name, oracle", [("catalan_G", mpmath.catalan), ("log2", mpmath.ln2), ("pi", mpmath.pi)])
@pytest.mark.parametrize("digits", [50, 400, 1500])
def test_constants_against_mpmath(name, oracle, digits):
    with mpmath.workdps(digits + 20):
        expected = Fraction(mpmath.nstr(+oracle, digits + 15, strip_zeros=False))
    got = constant_value(name, digits)
    assert got.agrees(expected, digits)
    assert abs(got.to_fraction() - expected) <= got.error_bound + Fraction(1, 10 ** (digits + 12))


@given(st.sampled_from(["catalan_G", "log2", "pi"]), st.integers(10, 600), st.integers(10, 600))
@settings(max_examples=30)
def test_constant_precisions_agree(name, d1, d2):
    low = min(d1, d2)
    assert constant_value(name, d1).agrees(constant_value(name, d2), low - 2)


def test_constant_errors():
    with pytest.raises(ValueError):
        constant_value("e", 10)
    with pytest.raises(ValueError):
        constant_value("pi", 30000)
    with pytest.raises(ValueError):
        constant_value("pi", 0)


def test_hpreal_arithmetic_tracks_error():
    third = HPReal.from_fraction(Fraction(1, 3), 30)
    seventh = HPReal.from_fraction(Fraction(1, 7), 30)
    for got, exact in [
        (third + seventh, Fraction(10, 21)),
        (third - seventh, Fraction(4, 21)),
        (third * seventh, Fraction(1, 21)),
        (third / seventh, Fraction(7, 3)),
        (1 / third, Fraction(3)),
    ]:
        assert abs(got.to_fraction() - exact) <= got.error_bound
        assert got.agrees(exact, 28)


@given(st.fractions(min_value=-1000, max_value=1000, max_denominator=10**9), st.fractions(min_value=-1000, max_value=1000, max_denominator=10**9))
def test_hpreal_product_within_bound(a, b):
    x, y = HPReal.from_fraction(a, 25), HPReal.from_fraction(b, 25)
    assert abs((x * y).to_fraction() - a * b) <= (x * y).error_bound
    assert abs((x + y).to_fraction() - (a + b)) <= (x + y).error_bound


def test_hpreal_division_by_near_zero():
    with pytest.raises(ZeroDivisionError):
        HPReal.from_fraction(1, 20) / HPReal.from_fraction(0, 20)


def test_decimal_rendering():
    assert HPReal.from_fraction(Fraction(-1, 8), 12).to_decimal_string(3) == "-0.125"
    assert HPReal.from_fraction(Fraction(1234, 10), 12).to_decimal_string(5) == "123.40"


@pytest.mark.parametrize("n", [1, 2, 97, 360, 2998, 2999, 10007 * 3, 1000003, 600851475143])
def test_factorize_reconstructs(n):
    f = factorize(n)
    assert math.prod(p**e for p, e in f.items()) == n
    assert all(len(factorize(p)) == 1 and factorize(p)[p] == 1 for p in f)


def test_factored_product_examples():
    v = factored_product([6, 10])
    assert v.exponents == {2: 2, 3: 1, 5: 1} and v.sign == 1 and v.realize() == 60
    v = factored_product([-4])
    assert v.exponents == {2: 2} and v.sign == -1 and v.realize() == -4
    v = factored_product([])
    assert v.exponents == {} and v.sign == 1 and v.realize() == 1
    with pytest.raises(ValueError):
        factored_product([3, 0])


@given(st.lists(st.integers(-10**6, 10**6).filter(bool), max_size=8))
@settings(max_examples=1000)
def test_factor_vector_realizes_plain_product(terms):
    assert factored_product(terms).realize() == math.prod(terms)


def test_reduce_common_examples():
    out = reduce_common([FactorVec({2: 3}), FactorVec({2: 1}), FactorVec({2: 2})])
    assert [v.exponents for v in out] == [{2: 2}, {}, {2: 1}]
    assert reduce_common([FactorVec({3: 4, 5: 1})])[0].exponents == {}
    out = reduce_common([FactorVec({2: 1, 3: 2}), FactorVec({3: 1})])
    assert [v.exponents for v in out] == [{2: 1, 3: 1}, {}]
    with pytest.raises(ValueError):
        reduce_common([])


@given(st.lists(st.fractions(min_value=-10**5, max_value=10**5, max_denominator=10**6).filter(bool), min_size=1, max_size=5))
def test_reduce_common_keeps_ratios(values):
    vecs = [FactorVec.from_rational(q) for q in values]
    reduced = reduce_common(vecs)
    for a, b, ra, rb in zip(vecs, vecs[1:], reduced, reduced[1:]):
        assert (a / b).realize() == (ra / rb).realize()


@given(st.fractions(min_value=-10**6, max_value=10**6, max_denominator=10**6).filter(bool))
def test_factor_vector_round_trip(q):
    v = FactorVec.from_rational(q)
    assert v.realize() == q
    assert (v * v.inverse()).realize() == 1
