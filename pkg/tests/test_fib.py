from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import seed_pairs
from gfsums.errors import OutOfRange
from gfsums.fib import FIBONACCI, LUCAS, Seeds, fib, fib_pair, fibonomial, genfib


def _iterative(n):
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def test_small_values():
    assert [fib(i) for i in range(10)] == [0, 1, 1, 2, 3, 5, 8, 13, 21, 34]
    assert [LUCAS[i] for i in range(6)] == [2, 1, 3, 4, 7, 11]


@pytest.mark.parametrize("n", [63, 64, 65, 100, 1000, 4321])
def test_fast_doubling_beyond_table(n):
    assert fib(n) == _iterative(n)
    assert fib_pair(n) == (_iterative(n), _iterative(n + 1))


@given(st.integers(min_value=0, max_value=300))
def test_negative_index(i):
    assert fib(-i) == (-1) ** (i + 1) * fib(i)


@given(seed_pairs, st.integers(min_value=-40, max_value=40))
def test_recurrence_both_directions(seeds, i):
    assert seeds[i + 1] == seeds[i] + seeds[i - 1]


@given(seed_pairs, st.integers(min_value=0, max_value=30))
def test_negative_index_formula(seeds, i):
    # G_{-i} = (-1)^i (F_{i+1} G_0 - F_i G_1)
    assert seeds[-i] == (-1) ** i * (fib(i + 1) * seeds.g0 - fib(i) * seeds.g1)


def test_seeds_parse_and_str():
    s = Seeds.parse("1/2,-3")
    assert (s.g0, s.g1) == (Fraction(1, 2), -3)
    assert str(s) == "1/2,-3"
    with pytest.raises(ValueError):
        Seeds.parse("1,2,3")
    assert genfib(FIBONACCI, 10) == 55


def test_fibonomial_rows():
    assert [fibonomial(4, s) for s in range(5)] == [1, 3, 6, 3, 1]
    assert [fibonomial(5, s) for s in range(6)] == [1, 5, 15, 15, 5, 1]


@given(st.integers(min_value=0, max_value=40), st.data())
def test_fibonomial_symmetry(p, data):
    q = data.draw(st.integers(min_value=0, max_value=p))
    assert fibonomial(p, q) == fibonomial(p, p - q)


@pytest.mark.parametrize("p, q", [(-1, 0), (3, 4), (3, -1)])
def test_fibonomial_range(p, q):
    with pytest.raises(OutOfRange):
        fibonomial(p, q)
