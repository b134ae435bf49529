"""Check records and the report emitted by the command-line front end."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .cf_engine import CFSpec, DEFAULT_DEPTH_CAP, cf_decimal_and_depth
from .forms.qexact import QExact


@dataclass
class Check:
    """One comparison. ``mode`` is ``exact``, ``digits:N`` or ``upToSign``."""

    name: str
    expected: str
    actual: str
    mode: str
    passed: bool
    key: tuple = ()

    @property
    def digits(self) -> int | None:
        if self.mode.startswith("digits:"):
            return int(self.mode.split(":", 1)[1])
        return None

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "expected": self.expected,
            "actual": self.actual,
            "digits": self.digits,
            "mode": self.mode,
            "pass": self.passed,
        }


def _sort_key(key: tuple):
    # parameters may mix ints and strings; compare type names first
    return tuple((type(x).__name__, x) for x in key)


@dataclass
class Report:
    command: str
    parameters: dict[str, Any] = field(default_factory=dict)
    checks: list[Check] = field(default_factory=list)
    depths: list[int] = field(default_factory=list)
    wall_time: float = 0.0
    notes: list[str] = field(default_factory=list)
    _start: float = field(default_factory=time.perf_counter, repr=False)

    # -- recording ---------------------------------------------------------

    def add(self, name, expected, actual, mode: str, passed: bool, key: tuple = ()) -> Check:
        check = Check(name, str(expected), str(actual), mode, bool(passed), tuple(key))
        self.checks.append(check)
        return check

    def exact(self, name, expected, actual, key: tuple = ()) -> Check:
        return self.add(name, expected, actual, "exact", expected == actual, key)

    def up_to_sign(self, name, triple, q: QExact, key: tuple = ()) -> Check:
        return self.add(name, tuple(triple), q.triple, "upToSign", q.matches_up_to_sign(triple), key)

    def against_cf(
        self,
        name: str,
        q: QExact,
        spec: CFSpec,
        digits: int,
        depth_cap: int = DEFAULT_DEPTH_CAP,
        key: tuple = (),
    ) -> Check:
        """Closed form ``q`` against the numerically evaluated fraction."""
        numeric, depth = cf_decimal_and_depth(spec, digits, depth_cap)
        self.depths.append(depth)
        closed = q.value(digits)
        return self.add(
            name,
            closed.to_decimal_string(min(digits, 40)),
            numeric.to_decimal_string(min(digits, 40)),
            f"digits:{digits}",
            closed.agrees(numeric, digits),
            key,
        )

    def within(self, name, expected, actual, tolerance, key: tuple = ()) -> Check:
        """``|actual - expected| <= tolerance``; the tolerance sets the digit count."""
        tolerance = Fraction(tolerance)
        diff = abs(Fraction(actual) - Fraction(expected))
        digits = max(0, len(str(tolerance.denominator // max(1, tolerance.numerator))) - 1)
        return self.add(name, _short(expected), _short(actual), f"digits:{digits}", diff <= tolerance, key)

    # -- results -----------------------------------------------------------

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def finish(self) -> "Report":
        self.wall_time = time.perf_counter() - self._start
        self.checks.sort(key=lambda c: _sort_key(c.key))
        return self

    def as_dict(self) -> dict:
        out = {
            "command": self.command,
            "parameters": self.parameters,
            "checks": [c.as_dict() for c in self.checks],
            "depthsUsed": sorted(set(self.depths)),
            "wallTime": round(self.wall_time, 6),
        }
        if self.notes:
            out["notes"] = self.notes
        return out

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, ensure_ascii=False)

    def to_text(self, verbose: bool = False) -> str:
        lines = [f"{self.command} " + " ".join(f"{k}={v}" for k, v in self.parameters.items())]
        shown = self.checks if verbose or len(self.checks) <= 40 else self.failures
        if shown:
            width = max(len(c.name) for c in shown)
            for c in shown:
                mark = "ok  " if c.passed else "FAIL"
                lines.append(f"  {mark} {c.name:<{width}}  [{c.mode}]  expected {c.expected}  actual {c.actual}")
        lines.extend(f"  note: {n}" for n in self.notes)
        passed = sum(c.passed for c in self.checks)
        lines.append(
            f"{passed}/{len(self.checks)} checks passed in {self.wall_time:.2f}s"
            + (f", max depth {max(self.depths)}" if self.depths else "")
        )
        return "\n".join(lines)


def _short(x) -> str:
    if isinstance(x, Fraction) and x.denominator != 1:
        return f"{float(x):.6g}"
    if isinstance(x, float):
        return f"{x:.6g}"
    return str(x)
