import random

import pytest

from sdepth.ideal import add_generators, colon, equals, minimalize, path_ideal, power
from sdepth.monomial import add, unit
from sdepth.poset import BoundError, EmptyPosetError, build_ideal_poset, build_quotient_poset


def random_small_poset(rng: random.Random, max_members: int = 14):
    """A random poset with n <= 4, g <= 2 and at most ``max_members`` members."""
    while True:
        n = rng.randint(1, 4)
        g = tuple(rng.randint(1, 2) for _ in range(n))
        gens = [tuple(rng.randint(0, gi) for gi in g) for _ in range(rng.randint(1, 4))]
        I = minimalize(gens, n)
        build = rng.choice([build_quotient_poset, build_ideal_poset])
        try:
            P = build(I, g)
        except (EmptyPosetError, BoundError):
            continue
        if 1 <= len(P) <= max_members:
            return P


@pytest.fixture
def rng():
    return random.Random(20261016)


def path_identity_checks(n, t):
    """The ideal identities of the path-power argument that apply at (n, t)."""
    I = path_ideal(n)
    It = power(I, t)
    x = lambda i: unit(n, i)
    checks = {}
    if t >= 2:
        checks["a"] = equals(colon(It, add(x(n - 1), x(n))), power(I, t - 1))
    if n >= 4:
        J = path_ideal(n - 2, n_vars=n)
        checks["b"] = equals(add_generators(It, [x(n - 1)]), add_generators(power(J, t), [x(n - 1)]))
    if n >= 5 and t == 1:
        J = path_ideal(n - 3, n_vars=n)
        checks["c"] = equals(colon(I, x(n - 1)), add_generators(J, [x(n - 2), x(n)]))
    if n >= 3:
        L = path_ideal(n - 1, n_vars=n)
        checks["d"] = equals(
            add_generators(colon(It, x(n - 1)), [x(n)]),
            add_generators(colon(power(L, t), x(n - 1)), [x(n)]),
        )
    return checks


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
