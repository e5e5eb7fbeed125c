from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from skein_s1s2.scalars import (
    DELTA,
    ONE,
    S,
    V,
    X,
    ZERO,
    LaurentPoly,
    ParseError,
    Scalar,
    collapse_exponents,
    find_separating_n,
    format_scalar,
    has_exponent_collision,
    normalize,
    parse_laurent,
    parse_scalar,
    quantum_factorial,
    quantum_int,
)

exps = st.tuples(*[st.integers(-3, 3)] * 3)
laurents = st.dictionaries(exps, st.integers(-4, 4).filter(bool), max_size=4).map(LaurentPoly)
nonzero_laurents = laurents.filter(lambda p: not p.is_zero())


def L(text):
    return parse_laurent(text)


def test_normalize_examples():
    assert normalize(L("x^2"), L("x")) == X
    assert normalize(L("s^2 - 1"), L("s - 1")) == S + 1
    assert normalize(LaurentPoly(), L("v^3")).is_zero()
    with pytest.raises(ZeroDivisionError):
        normalize(L("x"), LaurentPoly())


def test_quantum_integers():
    assert quantum_int(1) == ONE
    assert quantum_int(2) == S + S.inverse()
    assert quantum_int(0) == ZERO
    assert quantum_factorial(3) == (S + S.inverse()) * (S**2 + 1 + S**-2)
    assert quantum_factorial(0) == ONE


def test_delta_is_the_unknot_value():
    assert DELTA == (V.inverse() - V) / (S - S.inverse())


def test_collapse_examples():
    assert collapse_exponents(L("x^2"), 5) == {2: 1}
    assert collapse_exponents(L("x + v"), 2) == {1: 1, 4: 1}
    assert collapse_exponents(L("v - s"), 1) == {1: 1, -1: -1}


def test_separating_examples():
    assert find_separating_n(L("x^2")) == 1
    assert find_separating_n(L("x + v")) == 2
    assert find_separating_n(L("x*s + v")) == 1
    with pytest.raises(ValueError):
        find_separating_n(LaurentPoly())


@given(laurents, laurents, laurents)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a


@settings(max_examples=40, deadline=None)
@given(laurents, nonzero_laurents, nonzero_laurents)
def test_normalize_scale_invariant(a, b, c):
    assert normalize(a * c, b * c) == normalize(a, b)
    n = normalize(a, b)
    assert normalize(n.num, n.den) == n


@settings(max_examples=40, deadline=None)
@given(laurents, nonzero_laurents)
def test_equal_scalars_hash_alike(a, b):
    x = normalize(a, b)
    y = normalize(a * L("x*v - 2"), b * L("x*v - 2"))
    assert x == y and hash(x) == hash(y)


@settings(max_examples=40, deadline=None)
@given(laurents, nonzero_laurents)
def test_text_round_trip(a, b):
    x = normalize(a, b)
    assert parse_scalar(format_scalar(x)) == x
    assert format_scalar(parse_scalar(format_scalar(x))) == format_scalar(x)


@given(laurents, laurents, st.integers(1, 5))
def test_collapse_is_multiplicative(p, q, n):
    left = collapse_exponents(p * q, n)
    right: dict = {}
    for e1, c1 in collapse_exponents(p, n).items():
        for e2, c2 in collapse_exponents(q, n).items():
            right[e1 + e2] = right.get(e1 + e2, 0) + c1 * c2
    assert left == {e: c for e, c in right.items() if c}


@given(nonzero_laurents)
def test_separating_n_is_least(p):
    n = find_separating_n(p)
    assert not has_exponent_collision(p, n)
    assert all(has_exponent_collision(p, m) for m in range(1, n))


def test_print_format():
    assert format_scalar(parse_scalar("1 - x^2*v^-2")) == "-x^2*v^-2 + 1"
    assert str(Scalar.from_int(Fraction(3, 2))) == "3/2"
    assert format_scalar((S - 1) / (X + V)) == "(s - 1)/(x + v)"


def test_parse_errors_carry_position():
    with pytest.raises(ParseError) as err:
        parse_scalar("x +\n  * v")
    assert err.value.line == 2 and err.value.column == 3


def test_substitute():
    assert (X * V / S).substitute(x=S, v=S) == S
