"""``balkan`` command line: compute, verify, table, series, decimate, derive.

Exit status is 0 when every check passes, 1 on a failed check or a missing
relation, and 2 on bad usage or an unreadable database.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import tables
from .cf_engine import DEFAULT_DEPTH_CAP, NonConvergence, balkan_cf_spec
from .forms import q_exact
from .miner_tools import FAMILIES, NEGATIVE_POLICIES, ZERO_POLICIES, MiningDB
from .relation_finder import NoRelation
from .report import Report
from .verify import AREAS, GRID_DIGITS, RECOVERY_DIGITS, SERIES, TABLES, run_decimate, run_derive, run_series
from .verify import run_table, run_verify

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def cmd_compute(j: int, kappa: int, c: int, fmt: str = "exact", digits: int = 50,
                depth_cap: int = DEFAULT_DEPTH_CAP) -> Report:
    """Closed form of Q[j, kappa, c], checked against the fraction to ``digits``."""
    if fmt not in ("exact", "decimal"):
        raise UsageError("format must be exact or decimal")
    if j % 2 == 0 or j < 1 or kappa < 0 or c < 1:
        raise UsageError("compute needs odd j >= 1, kappa >= 0, c >= 1")
    report = Report("compute", {"j": j, "kappa": kappa, "c": c, "format": fmt})
    q = q_exact(j, kappa, c)
    report.parameters["kind"] = q.kind
    report.parameters["triple"] = list(q.triple)
    report.parameters["value"] = str(q)
    if fmt == "decimal":
        report.parameters["decimal"] = q.value(digits).to_decimal_string(digits)
    report.parameters["digits"] = digits
    report.against_cf(f"Q[{j},{kappa},{c}]", q, balkan_cf_spec(j, kappa, c), digits, depth_cap)
    return report.finish()


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="balkan", description=__doc__.splitlines()[0])
    parser.add_argument("--format", dest="output", choices=("text", "json"), default="text",
                        help="report format (default text)")
    parser.add_argument("--verbose", action="store_true", help="list every check in text reports")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, digits_default):
        p.add_argument("--format", dest="output", choices=("text", "json"), default=argparse.SUPPRESS)
        p.add_argument("--verbose", action="store_true", default=argparse.SUPPRESS)
        p.add_argument("--digits", type=int, default=digits_default)
        p.add_argument("--depth-cap", type=int, default=DEFAULT_DEPTH_CAP)

    p = sub.add_parser("compute", help="exact value of one fraction")
    p.add_argument("pos", nargs="*", metavar="J KAPPA C [exact|decimal]")
    p.add_argument("--j", type=int)
    p.add_argument("--kappa", type=int)
    p.add_argument("--c", type=int)
    p.add_argument("--as", dest="form", choices=("exact", "decimal"), default=None)
    common(p, 50)

    p = sub.add_parser("verify", help="closed forms against numeric fractions on a grid")
    p.add_argument("area", choices=AREAS)
    p.add_argument("--box", type=int, nargs="+", help="grid bounds, in the order the area uses them")
    common(p, GRID_DIGITS)

    p = sub.add_parser("table", help="regenerate a published table")
    p.add_argument("name", type=int, choices=TABLES)
    common(p, RECOVERY_DIGITS)

    p = sub.add_parser("series", help="series, limits and the families outside the grid")
    p.add_argument("check", choices=SERIES)
    common(p, 0)

    p = sub.add_parser("decimate", help="divisibility sieve over a box of index vectors")
    p.add_argument("dbfile", nargs="?", help="database of 'j kappa c t' lines (default: table 6)")
    p.add_argument("--db", dest="db_opt")
    p.add_argument("--family", choices=FAMILIES, default="affine")
    p.add_argument("--box", type=int, default=8, help="half-width b of the box [-b, b]^d")
    p.add_argument("--policy", choices=ZERO_POLICIES, default="zero-eliminates")
    p.add_argument("--negative-policy", choices=NEGATIVE_POLICIES, default="negative-extended")
    common(p, 0)

    p = sub.add_parser("derive", help="magic constants or seeds from numeric values")
    p.add_argument("target", choices=("alphabeta", "seeds"))
    p.add_argument("pos", nargs="*", metavar="J [KAPPA]")
    p.add_argument("--j", type=int)
    p.add_argument("--kappa", type=int)
    common(p, 0)
    return parser


def _integers(pos: list[str]) -> list[int]:
    try:
        return [int(x) for x in pos]
    except ValueError:
        raise UsageError(f"expected integers, got {' '.join(pos)}") from None


def _pick(pos: list[int], idx: int, flag):
    if flag is not None:
        return flag
    if idx < len(pos):
        return pos[idx]
    return None


def _run(args) -> Report:
    if args.command == "compute":
        pos, form = list(args.pos), args.form
        if pos and pos[-1] in ("exact", "decimal"):
            form = form or pos.pop()
        pos = _integers(pos)
        j, kappa, c = (_pick(pos, i, v) for i, v in enumerate((args.j, args.kappa, args.c)))
        if None in (j, kappa, c):
            raise UsageError("compute needs j, kappa and c")
        return cmd_compute(j, kappa, c, form or "exact", args.digits, args.depth_cap)
    if args.command == "verify":
        return run_verify(args.area, args.digits, args.depth_cap, args.box)
    if args.command == "table":
        return run_table(args.name, args.digits)
    if args.command == "series":
        return run_series(args.check)
    if args.command == "decimate":
        path = args.db_opt or args.dbfile
        default_db = path is None
        try:
            db = MiningDB.read(path) if path else MiningDB(tables.decimator_table())
        except (OSError, ValueError) as exc:
            raise UsageError(f"cannot read database: {exc}") from None
        expected = None
        if default_db and args.family == "affine" and args.box == 8 and args.policy == "zero-eliminates":
            expected = dict(tables.decimator_eliminations(), survivors=4954)
        return run_decimate(db, args.family, args.box, args.policy, args.negative_policy, expected)
    pos = _integers(args.pos)
    j = _pick(pos, 0, args.j)
    kappa = _pick(pos, 1, args.kappa)
    if j is None:
        raise UsageError("derive needs j")
    if args.target == "alphabeta" and kappa is None:
        raise UsageError("derive alphabeta needs kappa")
    return run_derive(args.target, j, kappa, args.digits or None)


def main(argv: Sequence[str] | None = None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        report = _run(args)
    except UsageError as exc:
        print(f"balkan: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NoRelation, NonConvergence) as exc:
        print(f"balkan: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except ValueError as exc:
        print(f"balkan: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(report.to_json() if args.output == "json" else report.to_text(args.verbose))
    return EXIT_OK if report.ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
