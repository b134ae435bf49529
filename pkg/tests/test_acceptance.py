"""The fourteen acceptance criteria, each at its stated tolerance and time budget.

Every criterion prints one PASS/FAIL line (also collected into the pytest
terminal summary).  Run directly with ``python3 tests/test_acceptance.py``.
"""

import itertools
import math
import random
import sys
import time
from fractions import Fraction

import pytest

from balkans import tables
from balkans.exactnum import factored_product
from balkans.miner_tools import MiningDB, brittleness, decimate
from balkans.relation_finder import is_lll_reduced, lll_reduce
from balkans.report import Report
from balkans import verify as vf

RESULTS: list[str] = []


def _record(number: int, title: str, report: Report, elapsed: float, budget: float | None) -> None:
    failures = report.failures
    in_time = budget is None or elapsed <= budget
    status = "PASS" if report.checks and not failures and in_time else "FAIL"
    detail = f"{len(report.checks) - len(failures)}/{len(report.checks)} checks, {elapsed:.1f}s"
    if budget is not None:
        detail += f" (budget {budget:g}s)"
    line = f"criterion {number:2d} {status}  {title}: {detail}"
    RESULTS.append(line)
    print(line)
    for check in failures[:10]:
        print(f"    FAIL {check.name}: expected {check.expected}, actual {check.actual} [{check.mode}]")
    assert report.checks, "no checks ran"
    assert not failures, f"{len(failures)} failed checks, first: {failures[0].name}"
    assert in_time, f"took {elapsed:.1f}s over a budget of {budget}s"


def criterion(number: int, title: str, budget: float | None = None):
    def wrap(fill):
        def test():
            report = Report(f"criterion {number}")
            start = time.perf_counter()
            fill(report)
            _record(number, title, report.finish(), time.perf_counter() - start, budget)

        test.__name__ = fill.__name__
        test.__doc__ = title
        return test

    return wrap


@criterion(1, "Bosnia identity, exact", budget=10)
def test_c01_bosnia_identity(report):
    vf.verify_bosnia(report, jmax=13, cmax=14)


@criterion(2, "Montenegro grid to 200 digits", budget=600)
def test_c02_montenegro_grid(report):
    vf.verify_montenegro(report, kmax=14, cmax=14, digits=200)


@criterion(3, "northern grid with derived constants to 200 digits", budget=1800)
def test_c03_northern_grid(report):
    vf.verify_northern(report, kmax=6, cmax=7, digits=200)


@criterion(4, "Kosovo chain to 200 digits with anchor", budget=1800)
def test_c04_kosovo_chain(report):
    vf.verify_kosovo(report, jmax=11, kmax=10, cmax=7, digits=200)


@criterion(5, "j-level seeds through j = 35", budget=1)
def test_c05_seed_recurrence(report):
    vf.seeds_checks(report, jmax=35)


@criterion(6, "Croatia closed forms, interpolation and leading law", budget=60)
def test_c06_croatia(report):
    vf.verify_croatia(report, imax=5, jmax=37)
    vf.psi_checks(report, 1, imax=5)
    vf.psi_checks(report, 2, imax=5)
    vf.psi_leading_checks(report, imax=6)


@criterion(7, "Serbia, tau and kappa-c swap symmetries, exact")
def test_c07_symmetries(report):
    vf.verify_symmetry(report)


@criterion(8, "ratio law on odd j <= 7, kappa, c <= 7, exact")
def test_c08_ratio_law(report):
    vf.verify_ratio(report, jmax=7, kmax=7, cmax=7)


@criterion(9, "triple recovery of the G and log 2 tables at 300 digits", budget=1200)
def test_c09_triple_recovery(report):
    for number in (8, 9, 10, 11):
        vf.recovery_checks(report, number, 300)


@criterion(10, "log 2 families: R_c triples, coefficient property, closed form")
def test_c10_log2_families(report):
    vf.rc_checks(report, 300)
    vf.log2_family_checks(report, cmax=25, digits=50)


@criterion(11, "families outside the grid: Q', Q'' ratio, parity box")
def test_c11_inostranstvo(report):
    vf.inostranstvo_checks(report, imax1=14, imax2=10, box=6, digits1=80, digits2=180, box_digits=80)


@criterion(12, "weighted series within remainder bound + 1e-15")
def test_c12_series(report):
    vf.series_checks(report, Fraction(1, 10**15))


@criterion(13, "decimator targets and survivor counts", budget=60)
def test_c13_decimator(report):
    vf.table6_checks(report)
    db = MiningDB(tables.decimator_table())
    expected = dict(tables.decimator_eliminations(), survivors=4954)
    big = vf.run_decimate(db, "affine", 8, expected=expected)
    report.checks.extend(big.checks)
    small = decimate("affine", 3, db)
    report.exact("[-3,3]^4 survivors", 332, len(small.survivors))
    report.exact("[-3,3]^4 box size", 2401, small.box_size)


def _brute_shortest(basis, radius=4):
    best = None
    for cs in itertools.product(range(-radius, radius + 1), repeat=3):
        if any(cs):
            v = [sum(c * basis[k][i] for k, c in enumerate(cs)) for i in range(3)]
            n = sum(x * x for x in v)
            best = n if best is None else min(best, n)
    return best


@criterion(14, "property suites: factor vectors, LLL, limits, brittleness")
def test_c14_properties(report):
    rng = random.Random(20240601)
    bad = 0
    for _ in range(1000):
        terms = [rng.choice([-1, 1]) * rng.randint(1, 10**6) for _ in range(rng.randint(0, 8))]
        bad += factored_product(terms).realize() != math.prod(terms)
    report.exact("factor vectors realize their product (1000 cases)", 0, bad)

    bad = lattices = 0
    while lattices < 100:
        basis = [[rng.randint(-50, 50) for _ in range(3)] for _ in range(3)]
        m = basis
        det = (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
               + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))
        if det == 0:
            continue
        lattices += 1
        out = lll_reduce(basis)
        shortest = _brute_shortest(out)
        # |b1|^2 <= 2^(n-1) lambda1^2 with n = 3
        if not is_lll_reduced(out) or sum(x * x for x in out[0]) > 4 * shortest:
            bad += 1
    report.exact("LLL within 2^((n-1)/2) of brute-force shortest (100 lattices)", 0, bad)

    vf.limit_checks(report, far=200, tolerance=Fraction(1, 20))

    bad = 0
    for _ in range(1000):
        a, b = rng.randint(1, 10**9), rng.randint(1, 10**9)
        g = math.gcd(a, b)
        b //= g
        if math.gcd(a, b) == 1:
            bad += brittleness(a * b) != brittleness(a) + brittleness(b)
    report.exact("brittleness additive on coprime pairs (1000 cases)", 0, bad)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s", "-p", "no:cacheprovider"]))
