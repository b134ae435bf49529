"""Reference tables shipped as plain-text data files.

Each file holds whitespace-separated columns, optionally grouped with ``|``;
``#`` starts a comment.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from importlib import resources


@lru_cache(maxsize=None)
def read_rows(name: str) -> tuple[tuple[tuple[str, ...], ...], ...]:
    """Rows of ``data/<name>.txt``; each row is a tuple of ``|``-separated groups."""
    text = resources.files("balkans").joinpath("data", f"{name}.txt").read_text()
    rows = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            rows.append(tuple(tuple(g.split()) for g in line.split("|")))
    return tuple(rows)


def triple_table(number: int) -> list[dict]:
    """Rows of the triple tables 8 to 11: triple, shifts of P/(-2n), and T(n)."""
    out = []
    for (a, shifts, t) in read_rows(f"table{number}"):
        out.append({
            "triple": tuple(int(x) for x in a),
            "shifts": tuple(int(x) for x in shifts),
            "T": (int(t[0]), int(t[1]), 3),
        })
    return out


def seeds_table() -> dict[int, tuple[Fraction, Fraction, Fraction, Fraction]]:
    return {int(r[0][0]): tuple(Fraction(x) for x in r[0][1:]) for r in read_rows("table13")}


def rc_table() -> dict[int, tuple[int, int, int]]:
    return {int(r[0][0]): tuple(int(x) for x in r[0][1:]) for r in read_rows("table12")}


def kosovo_ratio_table() -> list[tuple[tuple[int, int, int], tuple[int, int, int], Fraction]]:
    out = []
    for (r,) in read_rows("table14"):
        v = [int(x) for x in r[:6]]
        out.append((tuple(v[:3]), tuple(v[3:]), Fraction(r[6])))
    return out


def psi_table() -> dict[int, tuple[tuple[int, ...], tuple[int, ...]]]:
    out = {}
    for (head, c1, c2) in read_rows("psi"):
        out[int(head[0])] = (tuple(int(x) for x in c1), tuple(int(x) for x in c2))
    return out


def series_table() -> list[dict]:
    out = []
    for (head, e, w) in read_rows("table5"):
        out.append({
            "eps": int(head[0]),
            "constant": head[1],
            "exponents": tuple(int(x) for x in e),
            "weights": tuple(int(x) for x in w),
        })
    return out


def decimator_table() -> list[tuple[int, int, int, int]]:
    return [tuple(int(x) for x in r[0]) for r in read_rows("table6")]


def decimator_eliminations() -> dict[int, int]:
    return {int(r[0][0]): int(r[0][1]) for r in read_rows("table7")}


def seeds_errata() -> dict[tuple[int, str], tuple[Fraction, Fraction]]:
    """(j, field) -> (tabulated, listing) where the two printings disagree."""
    return {(int(r[0][0]), r[0][1]): (Fraction(r[0][2]), Fraction(r[0][3])) for r in read_rows("table13_errata")}
