from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from convexcount.errors import PoleError
from convexcount.exactnum import (
    binomial,
    chu_vandermonde_check,
    chu_vandermonde_sides,
    pochhammer,
)
from convexcount.sweeps import chu_vandermonde_samples


@pytest.mark.parametrize(
    "n, k, expected",
    [(4, 2, 6), (-2, 0, 0), (3, -1, 0), (0, 0, 1), (-1, -1, 0), (2, 3, 0), (-2, -1, 0)],
)
def test_binomial_examples(n, k, expected):
    assert binomial(n, k) == expected


def test_binomial_is_unbounded():
    # Central binomial of 256 has 76 digits; compare with the product formula.
    expected = 1
    for i in range(128):
        expected = expected * (256 - i) // (i + 1)
    assert binomial(256, 128) == expected
    assert len(str(expected)) == 76


@given(st.integers(1, 60), st.data())
def test_pascal(n, data):
    k = data.draw(st.integers(0, n))
    assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


@given(st.integers(0, 60), st.data())
def test_symmetry(n, data):
    k = data.draw(st.integers(0, n))
    assert binomial(n, k) == binomial(n, n - k)


def test_vanishing_grid():
    for n in range(-10, 31):
        for k in range(-10, 31):
            if not 0 <= k <= n:
                assert binomial(n, k) == 0, (n, k)
            else:
                assert binomial(n, k) > 0


@pytest.mark.parametrize(
    "x, n, expected",
    [(1, 4, 24), (Fraction(7, 3), 0, 1), (-5, 0, 1), (Fraction(1, 2), 2, Fraction(3, 4)), (-2, 3, 0)],
)
def test_pochhammer(x, n, expected):
    assert pochhammer(x, n) == expected


def test_pochhammer_rejects_negative_length():
    with pytest.raises(ValueError):
        pochhammer(1, -1)


@given(st.fractions(max_denominator=20), st.integers(0, 10))
def test_pochhammer_is_factorial_at_one_shift(x, n):
    assert pochhammer(x, n + 1) == pochhammer(x, n) * (x + n)


def test_chu_vandermonde_trivial():
    assert chu_vandermonde_check(0, Fraction(5, 7), Fraction(-3, 2))


def test_chu_vandermonde_hand_sum():
    # 1 - 6/5 + 3/5 - 4/35 on the left, (3)_3/(5)_3 on the right.
    lhs, rhs = chu_vandermonde_sides(3, 2, 5)
    assert lhs == rhs == Fraction(2, 7)
    assert chu_vandermonde_check(3, 2, 5)


def test_chu_vandermonde_pole():
    with pytest.raises(PoleError):
        chu_vandermonde_check(2, 1, 0)
    with pytest.raises(ZeroDivisionError):
        chu_vandermonde_check(3, 1, -1)


def test_chu_vandermonde_sampled():
    cases = list(chu_vandermonde_samples(200, seed=0))
    assert len(cases) == 200
    assert all(chu_vandermonde_check(n, a, c) for n, a, c in cases)


@settings(max_examples=50)
@given(st.integers(0, 12), st.fractions(max_denominator=9), st.fractions(min_value=Fraction(1, 3), max_denominator=9))
def test_chu_vandermonde_rational(n, a, c):
    # A positive c never hits a pole.
    assert chu_vandermonde_check(n, a, c)
