"""Exponent vectors: the shared representation of monomials and poset points.

A vector ``a = (a1, ..., an)`` stands for the monomial ``x1^a1 * ... * xn^an``.
Variables are numbered from 1 in every textual form.
"""

from __future__ import annotations

import operator
import re
from typing import Iterable, Sequence

MAX_EXPONENT = 2**16


class DimensionError(ValueError):
    """Two vectors (or a vector and an ideal) disagree on the variable count."""


class ExponentOverflowError(OverflowError):
    """An exponent left the range ``0..MAX_EXPONENT``."""


class ExponentVector(tuple):
    """Immutable point of N^n.

    Ordinary tuple semantics apply (hashing, equality, indexing), so a vector
    can be used directly as a dict key or set member.
    """

    __slots__ = ()

    def __new__(cls, exps: Iterable[int] = ()) -> "ExponentVector":
        if isinstance(exps, ExponentVector):
            return exps
        raw = tuple(exps)
        if any(isinstance(e, bool) for e in raw):
            raise TypeError("exponents must be integers, not booleans")
        exps = tuple(operator.index(e) for e in raw)
        if not exps:
            raise DimensionError("an exponent vector needs at least one variable")
        for e in exps:
            if e < 0:
                raise ValueError(f"negative exponent {e}")
            if e > MAX_EXPONENT:
                raise ExponentOverflowError(f"exponent {e} exceeds ceiling {MAX_EXPONENT}")
        return super().__new__(cls, exps)

    @property
    def n(self) -> int:
        return len(self)

    def __repr__(self) -> str:
        return f"ExponentVector({tuple(self)!r})"

    def __str__(self) -> str:
        return format_monomial(self)

    # Arithmetic helpers; tuple's own + (concatenation) is deliberately shadowed.
    def __add__(self, other):  # type: ignore[override]
        return add(self, other)

    def __radd__(self, other):  # type: ignore[override]
        return add(other, self)


def _check_dims(a: Sequence[int], b: Sequence[int]) -> None:
    if len(a) != len(b):
        raise DimensionError(f"length mismatch: {len(a)} vs {len(b)}")


def zero(n: int) -> ExponentVector:
    return ExponentVector((0,) * n)


def unit(n: int, i: int) -> ExponentVector:
    """Unit vector ``e_i`` in ``n`` variables, ``i`` counted from 1."""
    if not 1 <= i <= n:
        raise ValueError(f"variable index {i} outside 1..{n}")
    return ExponentVector(tuple(1 if j == i - 1 else 0 for j in range(n)))


def total_degree(a: Sequence[int]) -> int:
    return sum(a)


def divides(a: Sequence[int], b: Sequence[int]) -> bool:
    """True iff ``x^a | x^b``, i.e. ``a <= b`` componentwise."""
    _check_dims(a, b)
    return all(x <= y for x, y in zip(a, b))


def add(a: Sequence[int], b: Sequence[int]) -> ExponentVector:
    _check_dims(a, b)
    return ExponentVector(tuple(x + y for x, y in zip(a, b)))


def saturating_subtract(a: Sequence[int], b: Sequence[int]) -> ExponentVector:
    """Componentwise ``max(a - b, 0)``; the exponent of ``x^a / gcd(x^a, x^b)``."""
    _check_dims(a, b)
    return ExponentVector(tuple(x - y if x > y else 0 for x, y in zip(a, b)))


def lex_key(a: Sequence[int]) -> tuple:
    """Sort key used everywhere for output: degree first, then lexicographic."""
    return (sum(a), tuple(a))


_FACTOR = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def parse_monomial(text: str, n: int) -> ExponentVector:
    """Parse ``x1^2*x3`` style text (or ``1``) into a vector of length ``n``.

    Repeated variables multiply, so ``x1*x1`` equals ``x1^2``.
    """
    text = text.strip().replace(" ", "")
    exps = [0] * n
    if text == "1":
        return ExponentVector(exps)
    if not text:
        raise ValueError("empty monomial")
    for factor in text.split("*"):
        m = _FACTOR.match(factor)
        if m is None:
            raise ValueError(f"cannot parse factor {factor!r} in {text!r}")
        i = int(m.group(1))
        if not 1 <= i <= n:
            raise ValueError(f"variable x{i} outside x1..x{n}")
        exps[i - 1] += int(m.group(2)) if m.group(2) is not None else 1
    return ExponentVector(exps)


def format_monomial(a: Sequence[int]) -> str:
    parts = []
    for i, e in enumerate(a, start=1):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts) if parts else "1"
