"""Closed-form Stanley depth values for path ideals and the maximal ideal.

These are the *expected* side of the verification harness. Integer arithmetic
only; ``-(-x // d)`` is the exact ceiling for every sign of ``x``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


def _ceil_div(x: int, d: int) -> int:
    return -(-x // d)


def _check_path(n: int, t: int = 1) -> None:
    if n < 2:
        raise ValueError(f"a path needs n >= 2, got {n}")
    if t < 1:
        raise ValueError(f"power t must be >= 1, got {t}")


def path_sdepth(n: int) -> int:
    """sdepth of ``S/I(P_n)``: ``ceil(n/3)``."""
    _check_path(n)
    return _ceil_div(n, 3)


def path_power_sdepth(n: int, t: int) -> int:
    """Claimed sdepth of ``S/I(P_n)^t``: ``max(ceil((n - t + 1)/3), 1)``."""
    _check_path(n, t)
    return max(_ceil_div(n - t + 1, 3), 1)


def morey_depth_lower_bound(n: int, t: int) -> int:
    """Cited depth bound ``depth(S/I(P_n)^t) >= max(ceil((n - t + 1)/3), 1)``.

    Not a computed depth; the package never computes depth.
    """
    _check_path(n, t)
    return max(_ceil_div(n - t + 1, 3), 1)


def maximal_ideal_sdepth(n: int) -> int:
    """sdepth of the graded maximal ideal ``(x1, ..., xn)``: ``ceil(n/2)``."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return _ceil_div(n, 2)


def stabilization_threshold(n: int) -> int:
    """Least ``tau`` with ``path_power_sdepth(n, t) == 1`` for every ``t >= tau``."""
    _check_path(n)
    return max(n - 2, 1)


FAMILIES = ("path", "path-power", "maximal")


@dataclass(frozen=True)
class FormulaRow:
    family: str
    n: int
    t: int
    expected_sdepth: int
    source: str


def formula_row(family: str, n: int, t: int = 1) -> FormulaRow:
    if family == "path" and t == 1:
        return FormulaRow(family, n, 1, path_sdepth(n), "path quotient: ceil(n/3)")
    if family in ("path", "path-power"):
        return FormulaRow(family, n, t, path_power_sdepth(n, t), "path power quotient: max(ceil((n-t+1)/3), 1)")
    if family == "maximal":
        if t != 1:
            raise ValueError("the maximal-ideal family has no power parameter")
        return FormulaRow(family, n, 1, maximal_ideal_sdepth(n), "maximal ideal: ceil(n/2)")
    raise ValueError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")


def formula_table(family: str, ns: Iterable[int], ts: Iterable[int] = (1,)) -> list[FormulaRow]:
    ts = list(ts)
    return [formula_row(family, n, t) for n in ns for t in ts]
