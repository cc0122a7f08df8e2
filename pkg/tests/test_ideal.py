import random

import pytest
from hypothesis import given, strategies as st

from sdepth.ideal import (
    add_generators,
    colon,
    contains,
    edge_ideal,
    embed,
    equals,
    format_ideal,
    maximal_ideal,
    minimalize,
    parse_ideal,
    path_ideal,
    power,
    unit_ideal,
    zero_ideal,
)
from conftest import path_identity_checks
from sdepth.monomial import DimensionError, ExponentOverflowError, MAX_EXPONENT, add, parse_monomial, unit, zero


def ideal(n, *monos):
    return minimalize([parse_monomial(m, n) for m in monos], n)


def test_minimalize_examples():
    assert ideal(2, "x1*x2", "x1^2*x2") == ideal(2, "x1*x2")
    assert minimalize([], 3) == zero_ideal(3)
    got = ideal(3, "x1^2*x2^2", "x1*x2^2*x3", "x2^2*x3^2", "x1^2*x2^3*x3")
    # hand check: x1^2x2^3x3 is a multiple of x1^2x2^2, nothing else divides anything
    assert set(got.gens) == {(2, 2, 0), (1, 2, 1), (0, 2, 2)}


def test_minimalize_dimension_error():
    with pytest.raises(DimensionError):
        minimalize([(1, 0), (1, 0, 0)])


def test_contains():
    P3 = path_ideal(3)
    assert not contains(P3, (1, 0, 1))
    assert contains(P3, (1, 2, 0))
    assert not contains(zero_ideal(3), (5, 5, 5))
    assert (0, 1, 1) in P3
    with pytest.raises(DimensionError):
        contains(P3, (1, 1))


def test_path_ideal():
    assert path_ideal(2).gens == ((1, 1),)
    assert set(path_ideal(4).gens) == {(1, 1, 0, 0), (0, 1, 1, 0), (0, 0, 1, 1)}
    assert set(path_ideal(3).gens) == {(1, 1, 0), (0, 1, 1)}
    assert path_ideal(3, n_vars=5) == embed(path_ideal(3), 5)
    with pytest.raises(ValueError):
        path_ideal(1)


def test_edge_ideal():
    assert edge_ideal(3, [(1, 2), (2, 3)]) == path_ideal(3)
    assert edge_ideal(3, []) == zero_ideal(3)
    cycle = edge_ideal(4, [(1, 2), (2, 3), (3, 4), (4, 1)])
    assert set(cycle.gens) == {(1, 1, 0, 0), (0, 1, 1, 0), (0, 0, 1, 1), (1, 0, 0, 1)}
    for bad in [[(1, 1)], [(0, 2)], [(1, 5)]]:
        with pytest.raises(ValueError):
            edge_ideal(4, bad)


def test_maximal_ideal():
    assert maximal_ideal(1).gens == ((1,),)
    assert set(maximal_ideal(3).gens) == {(1, 0, 0), (0, 1, 0), (0, 0, 1)}
    assert len(maximal_ideal(2)) == 2


def test_power_examples():
    assert power(path_ideal(2), 3).gens == ((3, 3),)
    assert set(power(path_ideal(3), 2).gens) == {(2, 2, 0), (1, 2, 1), (0, 2, 2)}
    assert power(zero_ideal(2), 4) == zero_ideal(2)
    assert power(path_ideal(4), 1) == path_ideal(4)
    with pytest.raises(ValueError):
        power(path_ideal(3), 0)
    with pytest.raises(ExponentOverflowError):
        power(minimalize([(MAX_EXPONENT // 2 + 1,)]), 2)


def test_colon_examples():
    assert set(colon(path_ideal(4), unit(4, 3)).gens) == {(0, 1, 0, 0), (0, 0, 0, 1)}
    assert colon(power(path_ideal(2), 2), (1, 1)) == path_ideal(2)
    I = power(path_ideal(4), 2)
    assert colon(I, zero(4)) == I


def test_add_generators_examples():
    assert set(add_generators(path_ideal(4), [unit(4, 3)]).gens) == {(1, 1, 0, 0), (0, 0, 1, 0)}
    assert add_generators(path_ideal(4), []) == path_ideal(4)
    assert add_generators(zero_ideal(3), [unit(3, 1)]).gens == ((1, 0, 0),)


def test_equals():
    I = power(path_ideal(4), 2)
    assert equals(colon(I, add(unit(4, 3), unit(4, 4))), path_ideal(4))
    assert equals(I, I)
    lhs = add_generators(power(path_ideal(5), 2), [unit(5, 4)])
    rhs = add_generators(power(path_ideal(3, n_vars=5), 2), [unit(5, 4)])
    assert equals(lhs, rhs)
    with pytest.raises(DimensionError):
        equals(path_ideal(3), path_ideal(4))


def test_unit_ideal_absorbs():
    U = unit_ideal(3)
    assert U.is_unit and not U.is_zero
    assert add_generators(path_ideal(3), [zero(3)]) == U
    assert all(contains(U, m) for m in [(0, 0, 0), (4, 1, 0)])


def test_file_round_trip():
    text = "# the square of P_3\nvars 3\n\nx2^2*x3^2\nx1^2*x2^2\nx1*x2^2*x3\nx1^2*x2^3*x3\n"
    I = parse_ideal(text)
    assert I == power(path_ideal(3), 2)
    out = format_ideal(I)
    # (degree, lex) on exponent tuples: (0,2,2) < (1,2,1) < (2,2,0)
    assert out == "vars 3\nx2^2*x3^2\nx1*x2^2*x3\nx1^2*x2^2\n"
    assert parse_ideal(out) == I
    assert format_ideal(parse_ideal(out)) == out


@pytest.mark.parametrize("text", ["", "x1\n", "vars\n", "vars two\n", "vars 0\n", "vars 2\nx3\n", "vars 2\nz\n"])
def test_file_parse_errors(text):
    with pytest.raises(ValueError):
        parse_ideal(text)


# ---- properties -------------------------------------------------------------

vecs = st.lists(st.tuples(*[st.integers(0, 3)] * 3), max_size=6)


@given(vecs)
def test_minimalize_idempotent_and_order_insensitive(gs):
    I = minimalize(gs, 3)
    assert minimalize(I.gens, 3) == I
    assert minimalize(list(reversed(gs)), 3) == I
    for a in I.gens:
        assert not any(b != a and all(x <= y for x, y in zip(b, a)) for b in I.gens)
    # same ideal: every input vector is still a member
    assert all(contains(I, g) for g in gs)


@given(vecs, st.tuples(*[st.integers(0, 3)] * 3), st.tuples(*[st.integers(0, 4)] * 3))
def test_colon_adjunction(gs, u, m):
    I = minimalize(gs, 3)
    assert contains(colon(I, u), m) == contains(I, add(m, u))


@pytest.mark.parametrize("s, t", [(1, 1), (1, 2), (2, 1), (2, 2)])
def test_power_product_law(s, t):
    rng = random.Random(s * 10 + t)
    for _ in range(10):
        I = minimalize([tuple(rng.randint(0, 2) for _ in range(3)) for _ in range(rng.randint(1, 3))], 3)
        product = [add(a, b) for a in power(I, s).gens for b in power(I, t).gens]
        big = power(I, s + t)
        assert all(contains(big, p) for p in product)
        assert big == minimalize(product, 3)


@pytest.mark.parametrize("n", range(2, 8))
@pytest.mark.parametrize("t", range(1, 4))
def test_path_identities(n, t):
    checks = path_identity_checks(n, t)
    assert all(checks.values()), checks
