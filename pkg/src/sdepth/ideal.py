"""Monomial ideals stored as their (unique) minimal generating antichain."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .monomial import (
    DimensionError,
    ExponentVector,
    add,
    divides,
    format_monomial,
    lex_key,
    parse_monomial,
    saturating_subtract,
    unit,
    zero,
)


@dataclass(frozen=True)
class MonomialIdeal:
    """Ideal of ``K[x1..xn]`` generated by monomials.

    ``gens`` is the minimal generating set sorted by (degree, lex), which makes
    structural equality the same thing as ideal equality. Build instances with
    :func:`minimalize` or the constructors below rather than directly.
    """

    n_vars: int
    gens: tuple[ExponentVector, ...]

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and not any(self.gens[0])

    def __contains__(self, m) -> bool:
        return contains(self, m)

    def __iter__(self):
        return iter(self.gens)

    def __len__(self) -> int:
        return len(self.gens)

    def __str__(self) -> str:
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(format_monomial(g) for g in self.gens) + ")"


def _same_dims(n: int, vectors: Iterable[ExponentVector]) -> None:
    for v in vectors:
        if len(v) != n:
            raise DimensionError(f"expected {n} variables, got vector of length {len(v)}")


def minimalize(gens: Iterable, n_vars: int | None = None) -> MonomialIdeal:
    """Drop every generator that is a proper multiple of another one."""
    vecs = sorted({ExponentVector(g) for g in gens}, key=lex_key)
    if n_vars is None:
        if not vecs:
            raise ValueError("n_vars is required for an empty generator set")
        n_vars = len(vecs[0])
    _same_dims(n_vars, vecs)
    kept: list[ExponentVector] = []
    # Sorted by degree, so a divisor of v can only appear before v.
    for v in vecs:
        if not any(divides(k, v) for k in kept):
            kept.append(v)
    return MonomialIdeal(n_vars, tuple(kept))


def zero_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal(n, ())


def unit_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal(n, (zero(n),))


def contains(I: MonomialIdeal, m) -> bool:
    if len(m) != I.n_vars:
        raise DimensionError(f"monomial has {len(m)} variables, ideal has {I.n_vars}")
    return any(all(x <= y for x, y in zip(g, m)) for g in I.gens)


def edge_ideal(n: int, edges: Iterable[tuple[int, int]]) -> MonomialIdeal:
    """Edge ideal of a simple graph on vertices ``1..n``."""
    gens = []
    for i, j in edges:
        if i == j:
            raise ValueError(f"loop edge ({i}, {j})")
        if not (1 <= i <= n and 1 <= j <= n):
            raise ValueError(f"edge ({i}, {j}) outside vertices 1..{n}")
        gens.append(add(unit(n, i), unit(n, j)))
    return minimalize(gens, n)


def path_ideal(n: int, n_vars: int | None = None) -> MonomialIdeal:
    """Edge ideal of the path ``x1 - x2 - ... - xn``.

    With ``n_vars > n`` the ideal is embedded in a larger ring, living on the
    first ``n`` variables only.
    """
    if n < 2:
        raise ValueError(f"a path needs at least 2 vertices, got {n}")
    n_vars = n if n_vars is None else n_vars
    if n_vars < n:
        raise ValueError(f"cannot embed P_{n} in {n_vars} variables")
    return edge_ideal(n_vars, [(i, i + 1) for i in range(1, n)])


def maximal_ideal(n: int) -> MonomialIdeal:
    if n < 1:
        raise ValueError("need at least one variable")
    return MonomialIdeal(n, tuple(sorted((unit(n, i) for i in range(1, n + 1)), key=lex_key)))


def power(I: MonomialIdeal, t: int) -> MonomialIdeal:
    if t < 1:
        raise ValueError(f"power exponent must be >= 1, got {t}")
    result = I
    for _ in range(t - 1):
        result = minimalize((add(a, b) for a in result.gens for b in I.gens), I.n_vars)
    return result


def colon(I: MonomialIdeal, u) -> MonomialIdeal:
    """The colon ideal ``(I : x^u)``."""
    if len(u) != I.n_vars:
        raise DimensionError(f"monomial has {len(u)} variables, ideal has {I.n_vars}")
    return minimalize((saturating_subtract(g, u) for g in I.gens), I.n_vars)


def add_generators(I: MonomialIdeal, extra: Iterable) -> MonomialIdeal:
    """The sum ``(I, extra)``."""
    extra = [ExponentVector(e) for e in extra]
    _same_dims(I.n_vars, extra)
    return minimalize([*I.gens, *extra], I.n_vars)


def equals(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    if I.n_vars != J.n_vars:
        raise DimensionError(f"ideals live in {I.n_vars} and {J.n_vars} variables")
    return I.gens == J.gens


def embed(I: MonomialIdeal, n_vars: int) -> MonomialIdeal:
    """Same generators, padded with zero exponents for the extra variables."""
    if n_vars < I.n_vars:
        raise DimensionError(f"cannot shrink {I.n_vars} variables to {n_vars}")
    pad = (0,) * (n_vars - I.n_vars)
    return minimalize((tuple(g) + pad for g in I.gens), n_vars)


def parse_ideal(text: str) -> MonomialIdeal:
    """Read the ideal file format: ``vars <n>`` then one monomial per line."""
    n = None
    gens = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            head = line.split()
            if len(head) != 2 or head[0] != "vars":
                raise ValueError(f"line {lineno}: expected 'vars <n>', got {line!r}")
            try:
                n = int(head[1])
            except ValueError:
                raise ValueError(f"line {lineno}: bad variable count {head[1]!r}") from None
            if n < 1:
                raise ValueError(f"line {lineno}: variable count must be positive")
            continue
        try:
            gens.append(parse_monomial(line, n))
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    if n is None:
        raise ValueError("missing 'vars <n>' header")
    return minimalize(gens, n)


def format_ideal(I: MonomialIdeal) -> str:
    lines = [f"vars {I.n_vars}"]
    lines.extend(format_monomial(g) for g in I.gens)
    return "\n".join(lines) + "\n"
