import math

import pytest
from hypothesis import given, strategies as st

from balkans import tables
from balkans.miner_tools import MiningDB, UVec, brittleness, decimate, n_omega_target


def test_brittleness_examples():
    assert brittleness(1) == 0
    assert brittleness(12) == 3
    assert brittleness("3/4") == 3
    assert brittleness(-8) == 3
    with pytest.raises(ValueError):
        brittleness(0)


@given(st.integers(1, 10**9), st.integers(1, 10**9))
def test_brittleness_is_additive_on_coprimes(a, b):
    if math.gcd(a, b) != 1:
        b = b // math.gcd(a, b) or 1
        if math.gcd(a, b) != 1:
            return
    assert brittleness(a * b) == brittleness(a) + brittleness(b)


def test_target_examples():
    assert n_omega_target(11, 6, 40) == 86562004597992000
    assert n_omega_target(11, 6, 47) == 208349607563697600
    assert n_omega_target(3, 1, 1) == 1
    with pytest.raises(ValueError):
        n_omega_target(4, 1, 1)


def test_target_reproduces_database_rows():
    for j, kappa, c, t in tables.decimator_table():
        assert n_omega_target(j, kappa, c) == t


def test_db_parse_and_roundtrip(tmp_path):
    text = "# comment\n11 6 40 86562004597992000\n\n3 1 1 1  # trailing\n"
    db = MiningDB.parse(text)
    assert db.entries == [(11, 6, 40, 86562004597992000), (3, 1, 1, 1)]
    path = tmp_path / "db.txt"
    db.write(path)
    assert MiningDB.read(path) == db
    assert MiningDB.parse(db.dumps()) == db


@pytest.mark.parametrize("text", ["1 2 3\n", "1 2 x 4\n", "1 2 3 4 5\n"])
def test_db_parse_errors(text):
    with pytest.raises(ValueError):
        MiningDB.parse(text)


def test_from_target():
    db = MiningDB.from_target(11, 6, range(40, 48))
    assert db.entries == [tuple(e) for e in tables.decimator_table()]


@pytest.mark.parametrize("family, dim", [("affine", 4), ("catalan", 4), ("product", 5)])
def test_empty_db_keeps_the_whole_box(family, dim):
    result = decimate(family, 1, MiningDB())
    assert result.box_size == 3**dim
    assert len(result.survivors) == result.box_size


def test_small_box_survivors():
    result = decimate("affine", 3, MiningDB(tables.decimator_table()))
    assert result.box_size == 2401
    assert len(result.survivors) == 332


def test_true_factor_survives():
    # (2 kappa - 1) divides every target
    db = MiningDB(tables.decimator_table())
    result = decimate("affine", 3, db)
    assert UVec((0, 2, 0, -1)) in result.survivors
    assert UVec((0, -2, 0, 1)) in result.survivors


def test_explicit_intervals():
    db = MiningDB(tables.decimator_table())
    result = decimate("affine", [(0, 0), (2, 2), (0, 0), (-1, -1)], db)
    assert [u.coeffs for u in result.survivors] == [(0, 2, 0, -1)]


def test_zero_policy():
    db = MiningDB([(3, 1, 1, 6)])
    zero = [(0, 0)] * 4
    assert decimate("affine", zero, db).survivors == []
    assert len(decimate("affine", zero, db, "zero-skips").survivors) == 1


def test_negative_catalan_policies():
    db = MiningDB([(3, 1, 1, 6)])
    # sigma = -1: extended Catalan gives -1, which divides everything
    box = [(0, 0), (0, 0), (0, 0), (-1, -1)]
    assert len(decimate("catalan", box, db).survivors) == 1
    assert decimate("catalan", box, db, negative_policy="negative-eliminates").survivors == []
    assert len(decimate("catalan", box, db, negative_policy="negative-skips").survivors) == 1
    # sigma = -2: extended value is zero, so the zero policy decides
    box = [(0, 0), (0, 0), (0, 0), (-2, -2)]
    assert decimate("catalan", box, db).survivors == []
    assert len(decimate("catalan", box, db, "zero-skips").survivors) == 1


def test_product_family():
    # j = 3 gives the single factor sigma + u4
    db = MiningDB([(3, 1, 1, 6)])
    result = decimate("product", [(0, 0), (0, 0), (0, 0), (0, 0), (1, 7)], db)
    assert sorted(u.coeffs[4] for u in result.survivors) == [1, 2, 3, 6]


def test_per_entry_counts_sum_at_least_eliminated():
    result = decimate("affine", 2, MiningDB(tables.decimator_table()))
    assert sum(result.eliminated_per_entry) >= result.eliminated
    assert max(result.eliminated_per_entry) <= result.eliminated


def test_rejects_unknown_family_and_policy():
    with pytest.raises(ValueError):
        decimate("cubic", 1, MiningDB())
    with pytest.raises(ValueError):
        decimate("affine", 1, MiningDB(), "zero-maybe")
