from dataclasses import replace
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import seed_pairs
from gfsums.engine import (
    SYMBOLIC,
    a_functions,
    bar_a,
    canonicalize,
    char_poly,
    classic_a,
    closed_form,
    converges,
    evaluate_closed,
    generating_function,
    rebase_tail,
    span_sum,
    specialize,
    split_alternating,
    closed_form_n1,
)
from gfsums.errors import Divergent, SingularWeight, UnsupportedBasis
from gfsums.exact import I, as_gauss
from gfsums.fib import FIBONACCI, LUCAS, Seeds
from gfsums.oracle import brute_even, brute_odd, brute_sum
from gfsums.poly import Poly, RatFun

W = RatFun.w()
weights = st.sampled_from(["1", "-1", "2", "1/2", "-1/2", "3", "2/3", "1/16", "i", "-i", "1+i", "1/3-2/5*i"])


@pytest.mark.parametrize(
    "n, coeffs",
    [
        (1, [1, -1, -1]),
        (2, [1, -2, -2, 1]),
        (3, [1, -3, -6, 3, 1]),
        (4, [1, -5, -15, 15, 5, -1]),
    ],
)
def test_char_poly(n, coeffs):
    assert char_poly(n).poly == Poly(coeffs)


@pytest.mark.parametrize("n, w", [(2, -1), (4, 1)])
def test_singular_weights(n, w):
    assert char_poly(n)(w) == 0
    with pytest.raises(SingularWeight):
        closed_form(n, 0, w)


def test_span_sum_conventions():
    f = lambda j: j  # noqa: E731
    assert span_sum(1, 3, f) == 6
    assert span_sum(3, 2, f) == 0
    assert span_sum(4, 1, f) == -(2 + 3)
    with pytest.raises(AssertionError):
        span_sum(4, 1, f, strict=True)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_a_functions_are_iterated_D(n):
    target = 1 / RatFun(char_poly(n).poly)
    values = a_functions(n, 4, SYMBOLIC).values
    for m in range(5):
        assert values[m] == target
        target = target.D()


def test_independent_recursions_at_plus_minus_one():
    assert [a_functions(1, 6, 1).values[m] for m in range(7)] == [classic_a(m) for m in range(7)]
    assert [a_functions(1, 6, -1).values[m] for m in range(7)] == [bar_a(m) for m in range(7)]


@given(weights, st.integers(min_value=0, max_value=4))
def test_n1_construction_matches_leibniz(w, r):
    assert canonicalize(closed_form_n1(r, w)) == canonicalize(closed_form(1, r, w, "standard"))


@given(weights, st.integers(min_value=0, max_value=4))
def test_rebase_round_trip(w, r):
    cf = closed_form(1, r, w)
    assert rebase_tail(rebase_tail(cf, "standard"), "shifted") == canonicalize(cf)


def test_rebase_needs_n1():
    with pytest.raises(UnsupportedBasis):
        closed_form(2, 0, 1, "standard")


@given(
    st.integers(min_value=1, max_value=3),
    st.integers(min_value=0, max_value=3),
    weights,
    seed_pairs,
    st.integers(min_value=0, max_value=15),
)
def test_closed_form_matches_direct_sum(n, r, w, seeds, k):
    try:
        cf = closed_form(n, r, w)
    except SingularWeight:
        return
    assert evaluate_closed(cf, k, seeds) == brute_sum(n, r, w, k, seeds)


@given(st.integers(min_value=1, max_value=3), st.integers(min_value=0, max_value=2), weights)
def test_symbolic_specializes(n, r, w):
    try:
        numeric = closed_form(n, r, w)
    except SingularWeight:
        return
    assert specialize(closed_form(n, r, SYMBOLIC), w) == canonicalize(numeric)


def test_symbolic_r1_tail():
    cf = closed_form(1, 1, SYMBOLIC, "standard")
    tail = cf.tail_dict()[0]
    P2 = (1 - W - W**2) ** 2
    # (k w^2 + (k+1) w - (k+2)) / (1-w-w^2)^2, collected by powers of k
    assert tail.w_exp == 2
    assert tail.poly[0] == (W - 2) / P2
    assert tail.poly[1] == (W**2 + W - 1) / P2


@pytest.mark.parametrize(
    "w, n, expected",
    [("1/2", 1, True), ("2/3", 1, False), ("1/16", 2, True), ("1/4", 2, True), ("i", 1, False), ("1/2", 2, False)],
)
def test_convergence(w, n, expected):
    assert converges(as_gauss(w), n) is expected


def test_generating_function_flags():
    gf = generating_function(1, 1, "1/2")
    assert gf.infinite and not gf.tail and not gf.extension
    assert generating_function(2, 1, "1/16").extension
    with pytest.raises(Divergent):
        generating_function(1, 0, 2)
    assert generating_function(1, 0, 2, analytic=True).divergent


@given(st.integers(min_value=1, max_value=3), st.integers(min_value=0, max_value=3))
def test_generating_function_is_limit(n, r):
    w = Fraction(1, 16) if n > 1 else Fraction(1, 3)
    if not converges(as_gauss(w), n):
        return
    gf = generating_function(n, r, w)
    for seeds in (FIBONACCI, LUCAS):
        limit = evaluate_closed(gf, 0, seeds)
        err100 = (limit - brute_sum(n, r, w, 100, seeds)).norm()
        err200 = (limit - brute_sum(n, r, w, 200, seeds)).norm()
        assert err200 < err100


@given(st.integers(min_value=1, max_value=3), st.integers(min_value=0, max_value=3), seed_pairs, st.integers(min_value=0, max_value=10))
def test_split_matches_direct_sums(n, r, seeds, K):
    from gfsums.engine import evaluate_split_part

    split = split_alternating(n, r)
    assert evaluate_split_part(split.even, n, K, seeds) == brute_even(n, r, K, seeds)
    assert evaluate_split_part(split.odd, n, K, seeds) == brute_odd(n, r, K, seeds)


def test_split_is_real_and_imaginary_part():
    n, r, K = 2, 1, 4
    total = brute_sum(n, r, I, 2 * K, LUCAS)
    split = split_alternating(n, r)
    from gfsums.engine import evaluate_split_part

    assert total.re == 2**r * evaluate_split_part(split.even, n, K, LUCAS)
    assert total.im == evaluate_split_part(split.odd, n, K, LUCAS)


def test_zero_weight():
    cf = closed_form(2, 0, 0)
    assert evaluate_closed(cf, 7, Seeds(3, 5)) == 9
    assert evaluate_closed(closed_form(1, 2, 0), 5, LUCAS) == 0  # 0^j j^2 vanishes at j=0


def test_head_only_form_is_cached_value():
    cf = closed_form(1, 0, "1/2")
    assert evaluate_closed(replace(cf, tail=(), infinite=True), 0, FIBONACCI) == 2
