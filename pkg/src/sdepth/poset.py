"""Characteristic posets of ``S/I`` and ``I`` inside a bounded box.

Given a bound vector ``g`` the box is ``{a : 0 <= a <= g}``. The quotient
poset keeps the box points outside ``I``, the ideal poset the points inside
``I``. Membership is a dense boolean table over the box, addressed by the
mixed-radix index ``sum(a[i] * stride[i])`` (C order, last variable fastest).
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .ideal import MonomialIdeal
from .monomial import DimensionError, ExponentVector, lex_key

DEFAULT_VOLUME_LIMIT = 10**7
VOLUME_LIMIT_ENV = "SDEPTH_VOLUME_LIMIT"


class Mode(str, Enum):
    QUOTIENT = "quotient"
    IDEAL = "ideal"


class EmptyPosetError(ValueError):
    """The requested poset has no members (unit-ideal quotient or zero ideal)."""


class BoundError(ValueError):
    """A bound vector is too small, or a point lies outside the box."""


class VolumeLimitError(RuntimeError):
    """The box would hold more points than the configured limit."""


def volume_limit() -> int:
    raw = os.environ.get(VOLUME_LIMIT_ENV)
    if raw is None:
        return DEFAULT_VOLUME_LIMIT
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{VOLUME_LIMIT_ENV} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{VOLUME_LIMIT_ENV} must be positive")
    return value


@dataclass(frozen=True)
class Interval:
    """The closed box ``[F, G] = {b : F <= b <= G}``."""

    F: ExponentVector
    G: ExponentVector

    def __post_init__(self):
        object.__setattr__(self, "F", ExponentVector(self.F))
        object.__setattr__(self, "G", ExponentVector(self.G))
        if len(self.F) != len(self.G):
            raise DimensionError("interval endpoints differ in length")
        if any(f > g for f, g in zip(self.F, self.G)):
            raise BoundError(f"interval bottom {tuple(self.F)} is not below top {tuple(self.G)}")

    def __iter__(self):
        return iter((self.F, self.G))

    def points(self):
        for b in itertools.product(*(range(f, g + 1) for f, g in zip(self.F, self.G))):
            yield ExponentVector(b)

    @property
    def size(self) -> int:
        out = 1
        for f, g in zip(self.F, self.G):
            out *= g - f + 1
        return out

    def slices(self) -> tuple[slice, ...]:
        return tuple(slice(f, g + 1) for f, g in zip(self.F, self.G))


class CharPoset:
    """A finite down-set (quotient mode) or up-set (ideal mode) of a box.

    Instances are read-only once built; use :func:`build_quotient_poset` or
    :func:`build_ideal_poset`.
    """

    def __init__(self, g: ExponentVector, mode: Mode, table: np.ndarray, ideal: MonomialIdeal | None = None):
        self.g = ExponentVector(g)
        self.mode = Mode(mode)
        self.n = len(self.g)
        self.shape = tuple(x + 1 for x in self.g)
        if table.shape != self.shape or table.dtype != np.bool_:
            raise ValueError("membership table does not match the box")
        table.setflags(write=False)
        self.table = table
        self.ideal = ideal
        strides, acc = [], 1
        for extent in reversed(self.shape):
            strides.append(acc)
            acc *= extent
        self.strides = tuple(reversed(strides))
        self.volume = acc

    def __repr__(self) -> str:
        return f"CharPoset(g={tuple(self.g)}, mode={self.mode.value}, size={len(self)})"

    def in_box(self, a: Sequence[int]) -> bool:
        if len(a) != self.n:
            raise DimensionError(f"point has {len(a)} coordinates, poset has {self.n}")
        return all(0 <= x <= y for x, y in zip(a, self.g))

    def __contains__(self, a) -> bool:
        return self.in_box(a) and bool(self.table[tuple(a)])

    def __len__(self) -> int:
        return int(self.table.sum())

    def index(self, a: Sequence[int]) -> int:
        return sum(x * s for x, s in zip(a, self.strides))

    def point(self, idx: int) -> ExponentVector:
        return ExponentVector(int(v) for v in np.unravel_index(idx, self.shape))

    @cached_property
    def members(self) -> tuple[ExponentVector, ...]:
        """All members sorted by (degree, lex)."""
        pts = [ExponentVector(int(v) for v in row) for row in np.argwhere(self.table)]
        return tuple(sorted(pts, key=lex_key))

    @cached_property
    def index_grid(self) -> np.ndarray:
        grid = np.arange(self.volume, dtype=np.int64).reshape(self.shape)
        grid.setflags(write=False)
        return grid


def _check_bound(I: MonomialIdeal, g: Sequence[int]) -> ExponentVector:
    g = ExponentVector(g)
    if len(g) != I.n_vars:
        raise DimensionError(f"bound has {len(g)} entries, ideal has {I.n_vars} variables")
    for h in I.gens:
        if any(x > y for x, y in zip(h, g)):
            raise BoundError(f"bound {tuple(g)} does not dominate generator {tuple(h)}")
    vol = 1
    for x in g:
        vol *= x + 1
    limit = volume_limit()
    if vol > limit:
        raise VolumeLimitError(f"box volume {vol} exceeds limit {limit} (set {VOLUME_LIMIT_ENV} to raise it)")
    return g


def _ideal_table(I: MonomialIdeal, g: ExponentVector) -> np.ndarray:
    table = np.zeros(tuple(x + 1 for x in g), dtype=np.bool_)
    for h in I.gens:
        # the multiples of x^h in the box form the orthant above h
        table[tuple(slice(x, None) for x in h)] = True
    return table


def default_bound(I: MonomialIdeal) -> ExponentVector:
    """Componentwise maximum of the generators, with every entry at least 1."""
    if I.is_zero or I.is_unit:
        raise ValueError("default bound needs an ideal that is neither zero nor the unit ideal")
    return ExponentVector(max(1, max(h[i] for h in I.gens)) for i in range(I.n_vars))


def build_quotient_poset(I: MonomialIdeal, g: Sequence[int] | None = None) -> CharPoset:
    if I.is_unit:
        raise EmptyPosetError("S/I is zero for the unit ideal; its poset is empty")
    g = _check_bound(I, default_bound(I) if g is None else g)
    return CharPoset(g, Mode.QUOTIENT, ~_ideal_table(I, g), I)


def build_ideal_poset(I: MonomialIdeal, g: Sequence[int] | None = None) -> CharPoset:
    if I.is_zero:
        raise EmptyPosetError("the zero ideal has an empty poset")
    if g is None:
        g = ExponentVector([1] * I.n_vars) if I.is_unit else default_bound(I)
    g = _check_bound(I, g)
    return CharPoset(g, Mode.IDEAL, _ideal_table(I, g), I)


def build_poset(I: MonomialIdeal, mode: Mode | str, g: Sequence[int] | None = None) -> CharPoset:
    if Mode(mode) is Mode.QUOTIENT:
        return build_quotient_poset(I, g)
    return build_ideal_poset(I, g)


def rho(G: Sequence[int], g: Sequence[int]) -> int:
    """Number of coordinates where ``G`` reaches the bound ``g``."""
    if len(G) != len(g):
        raise DimensionError(f"length mismatch: {len(G)} vs {len(g)}")
    if any(x > y for x, y in zip(G, g)):
        raise BoundError(f"{tuple(G)} exceeds bound {tuple(g)}")
    return sum(1 for x, y in zip(G, g) if x == y)


def interval_contained(P: CharPoset, F: Sequence[int], G: Sequence[int]) -> bool:
    iv = Interval(F, G)
    if not P.in_box(iv.G):
        raise BoundError(f"{tuple(iv.G)} lies outside the box {tuple(P.g)}")
    return bool(P.table[iv.slices()].all())


def make_interval(P: CharPoset, F: Sequence[int], G: Sequence[int]) -> Interval:
    """An :class:`Interval` checked to lie entirely inside ``P``."""
    if not interval_contained(P, F, G):
        raise ValueError(f"[{tuple(F)}, {tuple(G)}] is not contained in the poset")
    return Interval(F, G)


def covers(P: CharPoset, a: Sequence[int]) -> set[ExponentVector]:
    """Members of the form ``a + e_j``."""
    if a not in P:
        raise ValueError(f"{tuple(a)} is not a member of the poset")
    out = set()
    for j in range(P.n):
        if a[j] < P.g[j]:
            b = list(a)
            b[j] += 1
            if P.table[tuple(b)]:
                out.add(ExponentVector(b))
    return out


def layer(P: CharPoset, d: int) -> set[ExponentVector]:
    return {a for a in P.members if sum(a) == d}


def layer_multiples(P: CharPoset, d: int, alpha: Sequence[int]) -> set[ExponentVector]:
    if len(alpha) != P.n:
        raise DimensionError(f"alpha has {len(alpha)} entries, poset has {P.n}")
    return {a for a in layer(P, d) if all(x <= y for x, y in zip(alpha, a))}


def maximal_members(P: CharPoset) -> list[ExponentVector]:
    """Members with no cover; an interval holding one must end there."""
    return [a for a in P.members if not covers(P, a)]


def minimal_members(P: CharPoset) -> list[ExponentVector]:
    out = []
    for a in P.members:
        below = False
        for j in range(P.n):
            if a[j] > 0:
                b = list(a)
                b[j] -= 1
                if P.table[tuple(b)]:
                    below = True
                    break
        if not below:
            out.append(a)
    return out


def dump_poset(P: CharPoset) -> str:
    lines = ["g=" + ",".join(map(str, P.g)), f"mode={P.mode.value}"]
    lines.extend(",".join(map(str, a)) for a in P.members)
    return "\n".join(lines) + "\n"


def points_of(intervals: Iterable[Interval]):
    for iv in intervals:
        yield from iv.points()
