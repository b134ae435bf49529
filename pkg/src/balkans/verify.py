"""Grid verifications, table reproduction and series checks.

Each routine fills a :class:`Report`; the command-line front end and the
acceptance tests both call these.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable

from . import tables
from .cf_engine import CFSpec, DEFAULT_DEPTH_CAP, balkan_cf_spec, cf_decimal_and_depth, eval_cf_convergent
from .exactnum import constant_value, semifactorial_ext
from .forms import (
    Area,
    PsiPoly,
    QExact,
    Seeds4,
    bosnia_q_via_delta,
    bosnia_value,
    classify,
    croatia_alphabeta,
    croatia_psi_interpolate,
    finite_alphabeta,
    finite_value,
    inostranstvo_q1,
    inostranstvo_q2_ratio,
    inostranstvo_spec,
    kosovo_j_seeds,
    magic_constants,
    master_c_level,
    montenegro_q,
    nested_value,
    q_exact,
    ratio_a0_a2,
    serbia_reflect,
    tau_ratio,
)
from .miner_tools import MiningDB, decimate, n_omega_target
from .relation_finder import derive_alphabeta_numeric, derive_seeds_numeric, recover_qexact
from .report import Report

AREAS = ("montenegro", "bosnia", "northern", "kosovo", "symmetry", "croatia", "ratio", "altogether")
TABLES = (2, 3, 8, 9, 10, 11, 12, 13, 14)
SERIES = ("table5", "remark11", "limits", "inostranstvo")

GRID_DIGITS = 200
RECOVERY_DIGITS = 300


def odd_range(lo: int, hi: int) -> list[int]:
    return [j for j in range(lo, hi + 1) if j % 2]


# ---------------------------------------------------------------------------
# Area grids
# ---------------------------------------------------------------------------

def verify_montenegro(report: Report, kmax: int = 14, cmax: int = 14, digits: int = GRID_DIGITS,
                      depth_cap: int = DEFAULT_DEPTH_CAP) -> None:
    for kappa in range(1, kmax + 1):
        for c in range(1, cmax + 1):
            report.against_cf(f"Q[1,{kappa},{c}]", montenegro_q(kappa, c), balkan_cf_spec(1, kappa, c),
                              digits, depth_cap, key=(1, kappa, c))


def verify_bosnia(report: Report, jmax: int = 13, cmax: int = 14) -> None:
    for j in odd_range(5, jmax):
        kappa = (j - 3) // 2
        for c in range(1, cmax + 1):
            spec = balkan_cf_spec(j, kappa, c)
            summed = eval_cf_convergent(spec, spec.termination)
            closed = bosnia_value(j, c)
            via_delta = bosnia_q_via_delta(j, c)
            report.exact(f"Q[{j},{kappa},{c}] = 2+2c-j", summed, closed, key=(j, kappa, c, 0))
            report.exact(f"Q[{j},{kappa},{c}] via Delta", summed, via_delta, key=(j, kappa, c, 1))


def northern_grid(js: Iterable[int] | None = None, kmax: int = 6, cmax: int = 7):
    js = list(js) if js is not None else odd_range(-7, -1) + odd_range(3, 13)
    return [(j, kappa, c) for j in js for kappa in range(1, kmax + 1) for c in range(1, cmax + 1)]


def verify_northern(report: Report, js=None, kmax: int = 6, cmax: int = 7, digits: int = GRID_DIGITS,
                    derive_digits: int | None = None, depth_cap: int = DEFAULT_DEPTH_CAP) -> None:
    """c-level form with numerically derived magic constants against the fraction."""
    derive_digits = derive_digits or digits + 100
    constants = {}
    for j, kappa, c in northern_grid(js, kmax, cmax):
        if (j, kappa) not in constants:
            constants[j, kappa] = derive_alphabeta_numeric(j, kappa, derive_digits)
        q = master_c_level(j, kappa, constants[j, kappa], c)
        report.against_cf(f"Q[{j},{kappa},{c}]", q, balkan_cf_spec(j, kappa, c), digits, depth_cap,
                          key=(j, kappa, c))
    report.parameters.setdefault("deriveDigits", derive_digits)


def kosovo_grid(jmax: int = 11, kmax: int = 10, cmax: int = 7):
    return [(j, kappa, c) for j in odd_range(3, jmax) for kappa in range(j - 2, kmax + 1)
            for c in range(1, cmax + 1)]


def verify_kosovo(report: Report, jmax: int = 11, kmax: int = 10, cmax: int = 7, digits: int = GRID_DIGITS,
                  depth_cap: int = DEFAULT_DEPTH_CAP) -> None:
    report.up_to_sign("Q[3,2,3] anchor", (192, 13, 18), q_exact(3, 2, 3), key=(0,))
    for j, kappa, c in kosovo_grid(jmax, kmax, cmax):
        report.against_cf(f"Q[{j},{kappa},{c}]", q_exact(j, kappa, c), balkan_cf_spec(j, kappa, c), digits,
                          depth_cap, key=(j, kappa, c))


def _constants_any(j: int, kappa: int):
    try:
        return magic_constants(j, kappa)
    except (ValueError, ArithmeticError):
        return magic_constants(j, kappa, checked=False)


def verify_symmetry(report: Report, kmax_serbia: int = 6, jmax_tau: int = 13, kmax_swap: int = 14,
                    cmax: int = 7) -> None:
    # Serbia: j -> 2(kappa+1) - j leaves P and T unchanged, so the fractions coincide
    for kappa in range(1, kmax_serbia + 1):
        for j in odd_range(1, 2 * kappa + 1):
            if classify(j, kappa) is not Area.SERBIA:
                continue
            mirror = serbia_reflect(j, kappa)
            for c in range(1, cmax + 1):
                a, b = balkan_cf_spec(j, kappa, c), balkan_cf_spec(mirror, kappa, c)
                report.exact(f"Serbia Q[{j},{kappa},{c}] = Q[{mirror},{kappa},{c}]", (a.P, a.T), (b.P, b.T),
                             key=("serbia", j, kappa, c))
    # Kosovo-Serbia ratio of magic constants
    for j in odd_range(3, jmax_tau):
        for u in range(1, j + 4):
            kappa = j - u - 1
            left, right = _constants_any(j, kappa), _constants_any(j - 2 * u, kappa)
            tau = tau_ratio(j, u)
            if right.alpha:
                report.exact(f"tau[{j},{u}] alpha", tau, left.alpha / right.alpha, key=("tau", j, u, 0))
            if right.beta:
                report.exact(f"tau[{j},{u}] beta", tau, left.beta / right.beta, key=("tau", j, u, 1))
    # Q[1,kappa,1] = Q[1,1,kappa]
    for kappa in range(1, kmax_swap + 1):
        report.exact(f"Q[1,{kappa},1] = Q[1,1,{kappa}]", montenegro_q(kappa, 1).triple,
                     montenegro_q(1, kappa).triple, key=("swap", kappa))


def verify_croatia(report: Report, imax: int = 5, jmax: int = 37) -> None:
    for i in range(imax + 1):
        for j in odd_range(2 * i + 5, jmax):
            kappa = (j - 2 * i - 3) // 2
            closed = croatia_alphabeta(i, j)
            summed = finite_alphabeta(j, kappa)
            report.exact(f"psi/mu[{i},{j}]", (summed.alpha, summed.beta), (closed.alpha, closed.beta),
                         key=(i, j))


def ratio_grid(jmax: int = 7, kmax: int = 7, cmax: int = 7):
    """Points of the ratio law where the value involves G."""
    return [(j, kappa, c) for j in odd_range(1, jmax) for kappa in range(max(1, abs(j - 2)), kmax + 1)
            for c in range(1, cmax + 1)]


def verify_ratio(report: Report, jmax: int = 7, kmax: int = 7, cmax: int = 7) -> None:
    for j, kappa, c in ratio_grid(jmax, kmax, cmax):
        q = q_exact(j, kappa, c)
        law = ratio_a0_a2(j, kappa, c)
        report.exact(f"|a0/a2| Q[{j},{kappa},{c}]", abs(law), abs(Fraction(q.a0, q.a2)), key=(j, kappa, c))


def verify_altogether(report: Report, jmax: int = 13, kmax: int = 7, cmax: int = 5, digits: int = GRID_DIGITS,
                      depth_cap: int = DEFAULT_DEPTH_CAP) -> None:
    """The dispatcher everywhere on a box of odd j >= 1, kappa >= 0."""
    for j in odd_range(1, jmax):
        for kappa in range(0, kmax + 1):
            for c in range(1, cmax + 1):
                report.against_cf(f"Q[{j},{kappa},{c}] {classify(j, kappa).name.lower()}", q_exact(j, kappa, c),
                                  balkan_cf_spec(j, kappa, c), digits, depth_cap, key=(j, kappa, c))


def run_verify(area: str, digits: int = GRID_DIGITS, depth_cap: int = DEFAULT_DEPTH_CAP,
               box: tuple[int, ...] | None = None) -> Report:
    """``box`` overrides the grid bounds, in the order each routine takes them."""
    if area not in AREAS:
        raise ValueError(f"area must be one of {AREAS}")
    report = Report("verify", {"area": area, "digits": digits})
    box = tuple(box or ())
    if box:
        report.parameters["box"] = list(box)
    numeric = {"digits": digits, "depth_cap": depth_cap}
    if area == "montenegro":
        verify_montenegro(report, *box, **numeric)
    elif area == "bosnia":
        verify_bosnia(report, *box)
    elif area == "northern":
        js = None if not box else odd_range(-7, -1) + odd_range(3, box[0])
        verify_northern(report, js, *box[1:], **numeric)
    elif area == "kosovo":
        verify_kosovo(report, *box, **numeric)
    elif area == "symmetry":
        verify_symmetry(report, *box)
    elif area == "croatia":
        verify_croatia(report, *box)
    elif area == "ratio":
        verify_ratio(report, *box)
    else:
        verify_altogether(report, *box, **numeric)
    return report.finish()


# ---------------------------------------------------------------------------
# Tables
# ---------------------------------------------------------------------------

def psi_checks(report: Report, which: int, imax: int = 5) -> None:
    table = tables.psi_table()
    for i in range(imax + 1):
        psi = croatia_psi_interpolate(i)
        printed = table[i][0] if which == 1 else table[i][1]
        got = psi.coeffs1 if which == 1 else psi.coeffs2
        report.exact(f"psi{which}({i}, j)", printed, got, key=(i,))


def psi_leading_checks(report: Report, imax: int = 6) -> None:
    """Leading coefficients, and the shipped nested forms for i = 6."""
    for i in range(imax + 1):
        psi = croatia_psi_interpolate(i)
        lead = semifactorial_ext(2 * i - 1)
        report.exact(f"lead psi1({i})", -lead, psi.coeffs1[-1], key=("lead", i, 1))
        report.exact(f"lead psi2({i})", 4 * lead, psi.coeffs2[-1], key=("lead", i, 2))
    psi6 = croatia_psi_interpolate(6)
    for (name, sign), constants, roots in _nested_rows():
        poly = psi6.psi1 if name == "psi1" else psi6.psi2
        for j in odd_range(17, 41):
            report.exact(f"{name}(6, {j}) nested", nested_value(constants, roots, sign, j), poly(j),
                         key=("nested", name, j))


def _nested_rows():
    for head, constants, roots in tables.read_rows("psi6_nested"):
        yield (head[0], int(head[1])), [int(x) for x in constants], [int(x) for x in roots]


def triple_spec(row: dict, kind: str) -> CFSpec:
    """A printed row's fraction: ``P = -2n prod(n + s)``, ``T = t0 + t1 n + 3n^2``."""
    from .cf_engine import poly_from_roots

    return CFSpec.from_polys(poly_from_roots(-2, (0,) + row["shifts"]), row["T"], kind=kind)


def recovery_checks(report: Report, number: int, digits: int = RECOVERY_DIGITS) -> None:
    kind = "Log2" if number in (8, 9) else "G"
    for idx, row in enumerate(tables.triple_table(number)):
        spec = triple_spec(row, kind)
        label = f"row {idx + 1} shifts={row['shifts']} T=({row['T'][0]},{row['T'][1]})"
        try:
            q = recover_qexact(spec, kind, digits)
        except ArithmeticError as exc:
            report.add(label, row["triple"], f"no relation ({exc})", "upToSign", False, key=(idx,))
            continue
        report.up_to_sign(label, row["triple"], q, key=(idx,))


def rc_spec(c: int) -> CFSpec:
    return CFSpec.from_polys((0, -2, -2), (c, 3), kind="Log2", label=f"R[{c}]")


def rc_checks(report: Report, digits: int = RECOVERY_DIGITS) -> None:
    for c, triple in sorted(tables.rc_table().items()):
        q = recover_qexact(rc_spec(c), "Log2", digits)
        report.up_to_sign(f"R[{c}]", triple, q, key=(c, 0))
        if c >= 5:
            # on the null vector v1 + v2 r + v3 r log 2 = 0, so v1 = -a0, v3 = a2
            report.exact(f"R[{c}] 2^(c-4)(c-3)v1 = v3", q.a2, 2 ** (c - 4) * (c - 3) * -q.a0, key=(c, 1))


def seeds_checks(report: Report, jmax: int = 35) -> None:
    """The j-level chain against the printed seeds; listed errata use the listing value."""
    printed = tables.seeds_table()
    errata = tables.seeds_errata()
    for j in odd_range(3, jmax):
        got = kosovo_j_seeds(j)
        for name, value in zip(("aa", "ab", "ba", "bb"), printed[j]):
            expected = value
            if (j, name) in errata:
                expected = errata[j, name][1]
                report.notes.append(f"j={j} {name}: printed {value}, listing {expected}")
            report.exact(f"seeds[{j}].{name}", expected, getattr(got, name), key=(j, name))


def kosovo_ratio_checks(report: Report) -> None:
    for left, right, ratio in tables.kosovo_ratio_table():
        got = q_exact(*left).ratio_to(q_exact(*right))
        report.exact(f"Q{list(left)}/Q{list(right)}", ratio, got, key=left + right)


def run_table(number: int, digits: int = RECOVERY_DIGITS) -> Report:
    if number not in TABLES:
        raise ValueError(f"table must be one of {TABLES}")
    report = Report("table", {"name": number})
    if number in (2, 3):
        psi_checks(report, number - 1)
    elif number in (8, 9, 10, 11):
        report.parameters["digits"] = digits
        recovery_checks(report, number, digits)
    elif number == 12:
        report.parameters["digits"] = digits
        rc_checks(report, digits)
    elif number == 13:
        seeds_checks(report)
    else:
        kosovo_ratio_checks(report)
    return report.finish()


# ---------------------------------------------------------------------------
# Series and limits
# ---------------------------------------------------------------------------

_SERIES_PLACES = 60


def alternating_product_sum(eps: int, exponents, target: Fraction) -> tuple[Fraction, Fraction, int]:
    """``sum_{n>=1} (-1)^(n+1) prod_i (2n + 2i - 3 + eps)^(-e_i)`` truncated.

    Terms decrease in size, so the remainder is at most the first omitted
    term. Summation stops once that term is below ``target``. Returns the
    partial sum, the remainder bound (including rounding), and the count.
    """
    unit = 10**_SERIES_PLACES

    def denom(n):
        return math.prod((2 * n + 2 * i - 3 + eps) ** e for i, e in enumerate(exponents, 1))

    if any(2 + 2 * i - 3 + eps <= 0 for i, e in enumerate(exponents, 1) if e):
        raise ValueError("series has a vanishing factor")
    total = 0
    n = 1
    while True:
        d = denom(n)
        if Fraction(1, d) < target:
            break
        total += (unit // d) if n % 2 else -(unit // d)
        n += 1
    bound = Fraction(1, d) + Fraction(n, unit)
    return Fraction(total, unit), bound, n - 1


def series_checks(report: Report, tolerance: Fraction = Fraction(1, 10**15)) -> None:
    for idx, row in enumerate(tables.series_table()):
        w1, w2, w3 = row["weights"]
        s, bound, terms = alternating_product_sum(row["eps"], row["exponents"], tolerance / (100 * abs(w1)))
        k = constant_value(row["constant"], 40).to_fraction()
        residual = abs(w1 * s + w2 * k + w3)
        slack = abs(w1) * bound + Fraction(1, 10**35) * (abs(w2) + 1)
        report.within(
            f"row {idx + 1} {row['constant']} eps={row['eps']} e={row['exponents']} ({terms} terms)",
            0, residual, slack + tolerance, key=(idx,))


def lerch_form(c: int) -> Fraction:
    """``1 / (2^(c-2) log 2 - sum_{j=1}^{c-2} 2^(c-j-2)/j)`` with log 2 as a 100-digit rational."""
    log2 = constant_value("log2", 100).to_fraction()
    return 1 / (Fraction(2) ** (c - 2) * log2 - sum(Fraction(2 ** (c - j - 2), j) for j in range(1, c - 1)))


def log2_family_spec(c: int) -> CFSpec:
    return CFSpec.from_polys((0, 0, -2), (c, 3), kind="Log2", label=f"L[{c}]")


def log2_family_checks(report: Report, cmax: int = 25, digits: int = 50) -> None:
    for c in range(2, cmax + 1):
        r, depth = cf_decimal_and_depth(log2_family_spec(c), digits)
        report.depths.append(depth)
        closed = lerch_form(c)
        report.add(f"L[{c}] = 1/(2^(c-2) log2 - ...)", r.to_decimal_string(30),
                   f"{float(closed):.15g}", f"digits:{digits}", r.agrees(closed, digits), key=(c,))


def _numeric(j, kappa, c, digits=12) -> Fraction:
    return cf_decimal_and_depth(balkan_cf_spec(j, kappa, c), digits)[0].to_fraction()


def limit_checks(report: Report, far: int = 200, tolerance: Fraction = Fraction(1, 20)) -> None:
    """Differences of values far out along c, kappa, or the diagonal kappa = j + 2r."""
    for j, kappa in ((1, 1), (1, 3), (3, 2), (3, 5), (5, 4)):
        diff = _numeric(j, kappa, far + 1) - _numeric(j, kappa, far)
        report.within(f"Q[{j},{kappa},{far + 1}] - Q[{j},{kappa},{far}]", 2, diff, tolerance, key=("c", j, kappa))
    for j, c in ((1, 1), (3, 1), (3, 4), (5, 3)):
        diff = _numeric(j, far + 1, c) - _numeric(j, far, c)
        report.within(f"Q[{j},{far + 1},{c}] - Q[{j},{far},{c}]", 2 * j, diff, tolerance, key=("k", j, c))
    for r in (0, 1, 2):
        for c in (1, 3):
            j = far - 2 * r
            diff = _numeric(j + 1, far, c) - _numeric(j, far, c)
            report.within(f"Q[{j + 1},{far},{c}] - Q[{j},{far},{c}]", 4 * r + 1, diff, tolerance,
                          key=("d", r, c))


def inostranstvo_checks(report: Report, imax1: int = 14, imax2: int = 10, box: int = 6,
                        digits1: int = 80, digits2: int = 180, box_digits: int = 80) -> None:
    for i in range(imax1 + 1):
        report.against_cf(f"Q'[{i}] closed form", inostranstvo_q1(i), inostranstvo_spec(1, 1, 1, i), digits1,
                          key=("q1", i))
    for i in range(imax2 + 1):
        q = recover_qexact(inostranstvo_spec(1, 3, 3, i), "G", digits2)
        # relation v1 + v2 r + v3 G r = 0 has v1/v3 = -a0/a2
        got = Fraction(-q.a0, q.a2) if q.a2 else None
        report.exact(f"Q''[{i}] v1/v3", inostranstvo_q2_ratio(i), got, key=("q2", i))
    # the general parity formula: every member of the box is a G-form,
    # recognised from its own digits and confirmed against the fraction
    for tau, eta, mu, i in parity_box(box):
        spec = inostranstvo_spec(tau, eta, mu, i)
        key = ("box", tau, eta, mu, i)
        try:
            q = recover_qexact(spec, "G", box_digits)
        except ArithmeticError as exc:
            report.add(f"I[{tau},{eta},{mu};{i}]", "G-form", f"no relation ({exc})", f"digits:{box_digits}",
                       False, key=key)
            continue
        report.add(f"I[{tau},{eta},{mu};{i}] = {q}", "G-form", q.kind, "exact", q.kind == "G", key=key)


def parity_box(lim: int = 6):
    """(tau, eta, mu, i): tau <= eta even in [0, lim] plus the odd shifts, mu even, 0 <= i <= lim."""
    out = []
    for p in (0, 1):
        for a in range(0, lim + 1, 2):
            for b in range(a, lim + 1, 2):
                for c in range(0, lim + 1, 2):
                    out.extend((a + p, b + p, c + p, i) for i in range(lim + 1))
    return out


def run_series(check: str) -> Report:
    if check not in SERIES:
        raise ValueError(f"series check must be one of {SERIES}")
    report = Report("series", {"check": check})
    {"table5": series_checks, "remark11": log2_family_checks, "limits": limit_checks,
     "inostranstvo": inostranstvo_checks}[check](report)
    return report.finish()


# ---------------------------------------------------------------------------
# Decimator and derivations
# ---------------------------------------------------------------------------

def run_decimate(db: MiningDB, family: str = "affine", box=8, zero_policy: str = "zero-eliminates",
                 negative_policy: str = "negative-extended", expected: dict | None = None) -> Report:
    report = Report("decimate", {"family": family, "box": box, "entries": len(db.entries)})
    result = decimate(family, box, db, zero_policy, negative_policy)
    report.parameters["policy"] = result.policy
    report.parameters["boxSize"] = result.box_size
    report.parameters["survivors"] = len(result.survivors)
    for (j, kappa, c, t), removed in zip(db.entries, result.eliminated_per_entry):
        if expected and c in expected:
            report.exact(f"eliminated by c={c}", expected[c], removed, key=(j, kappa, c))
        else:
            report.notes.append(f"({j},{kappa},{c}) eliminates {removed}")
    if expected and "survivors" in expected:
        report.exact("survivors", expected["survivors"], len(result.survivors), key=(-1,))
    return report.finish()


def table6_checks(report: Report) -> None:
    for j, kappa, c, t in tables.decimator_table():
        report.exact(f"target({j},{kappa},{c})", t, n_omega_target(j, kappa, c), key=(j, kappa, c))


def run_derive(target: str, j: int, kappa: int | None = None, digits: int | None = None) -> Report:
    if target not in ("alphabeta", "seeds"):
        raise ValueError("target must be alphabeta or seeds")
    report = Report("derive", {"target": target, "j": j})
    if target == "alphabeta":
        if kappa is None:
            raise ValueError("alphabeta needs kappa")
        digits = digits or 2000
        report.parameters.update(kappa=kappa, digits=digits)
        got = derive_alphabeta_numeric(j, kappa, digits)
        exact = _constants_any(j, kappa)
        report.exact(f"alpha[{j},{kappa}]", exact.alpha, got.alpha, key=(0,))
        report.exact(f"beta[{j},{kappa}]", exact.beta, got.beta, key=(1,))
    else:
        digits = digits or 5000
        report.parameters["digits"] = digits
        got = derive_seeds_numeric(j, digits)
        exact = kosovo_j_seeds(j)
        for idx, name in enumerate(("aa", "ab", "ba", "bb")):
            report.exact(f"seeds[{j}].{name}", getattr(exact, name), getattr(got, name), key=(idx,))
    return report.finish()
