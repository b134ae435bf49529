"""The five areas of the odd-j quarter plane and the Serbia reflection."""

from __future__ import annotations

from enum import Enum


class Area(Enum):
    MONTENEGRO = "Montenegro"
    KOSOVO = "Kosovo"
    SERBIA = "Serbia"
    BOSNIA_HERZEGOVINA = "BosniaHerzegovina"
    CROATIA = "Croatia"
    OFF_GRID = "OffGrid"


def check_odd(j: int) -> None:
    if j % 2 == 0:
        raise ValueError(f"j={j} is even; closed forms cover odd j only")


def classify(j: int, kappa: int) -> Area:
    check_odd(j)
    if j < 1 or kappa < 0:
        raise ValueError(f"classify needs j >= 1 and kappa >= 0, got ({j}, {kappa})")
    if j == 1:
        return Area.MONTENEGRO
    if 3 <= j <= kappa + 2:
        return Area.KOSOVO
    if kappa + 3 <= j <= 2 * kappa + 1:
        return Area.SERBIA
    if j == 2 * kappa + 3:
        return Area.BOSNIA_HERZEGOVINA
    if j >= 2 * kappa + 5:
        return Area.CROATIA
    return Area.OFF_GRID


def serbia_reflect(j: int, kappa: int) -> int:
    """Partner ``2(kappa+1) - j`` of a Serbia point; it lies in Montenegro or Kosovo."""
    if classify(j, kappa) is not Area.SERBIA:
        raise ValueError(f"({j}, {kappa}) is not in Serbia")
    return 2 * (kappa + 1) - j
