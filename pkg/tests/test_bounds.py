import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hirschkit.bounds import (
    bound_report,
    kalai_kleitman_binomial,
    kk_power_bracket,
    kk_power_check,
    kk_recursion_table,
    klee_formula,
    larman_bound,
    lower_bound_formula,
)
from hirschkit.errors import BadInput


def test_klee_formula():
    assert klee_formula(9) == 5
    assert klee_formula(12) == 7
    assert klee_formula(4) == 1
    with pytest.raises(BadInput):
        klee_formula(3)


def test_lower_bound_formula():
    assert lower_bound_formula(8, 2) == 4
    assert lower_bound_formula(9, 3) == 5
    assert lower_bound_formula(8, 4) == 4
    with pytest.raises(BadInput):
        lower_bound_formula(3, 4)


def test_larman():
    assert larman_bound(9, 4) == 18
    assert larman_bound(7, 3) == 7
    with pytest.raises(BadInput):
        larman_bound(4, 4)


def test_kalai_kleitman_binomial():
    assert kalai_kleitman_binomial(8, 3) == 160
    assert kalai_kleitman_binomial(2, 2) == 6
    assert kalai_kleitman_binomial(9, 4) == 16 * 70


def test_kk_table():
    t = kk_recursion_table(6, 6)
    assert t[(0, 4)] == 0
    assert t[(1, 2)] == 0 and t[(3, 2)] == Fraction(3, 8)
    assert t[(2, 3)] == t[(1, 3)] + t[(2, 2)]
    assert all(v <= math.comb(k + d, d) for (k, d), v in t.items())


def test_kk_power_check_examples():
    assert kk_power_check(5, 9, 4)
    assert kk_power_check(64, 4, 4)
    assert not kk_power_check(65, 4, 4)
    # 4^(log2 3 + 1) = 36 exactly
    assert kk_power_check(36, 4, 3) and not kk_power_check(37, 4, 3)


def test_bound_report():
    r = bound_report(9, 4)
    assert (r.hirsch, r.larman, r.klee_d3) == (5, 18, None)
    assert r.kk_power == (729, 729)
    r3 = bound_report(9, 3)
    assert r3.klee_d3 == 5 < r3.hirsch == 6
    assert bound_report(5, 5).hirsch == 0
    with pytest.raises(BadInput):
        bound_report(3, 4)


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=2, max_value=60), st.integers(min_value=2, max_value=12))
def test_power_check_matches_float_away_from_boundary(n, d):
    value = n ** (math.log2(d) + 1)
    lo, hi = kk_power_bracket(n, d)
    assert lo <= value + 1e-6 and value - 1e-6 <= hi
    for diam in (math.floor(value * 0.999), math.ceil(value * 1.001)):
        if diam >= 1:
            assert kk_power_check(diam, n, d) == (diam <= value)


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=2, max_value=40), st.integers(min_value=2, max_value=10))
def test_lower_bound_below_hirsch(n, d):
    # bounded polytopes need n > d; at n = d the formula gives 1 > 0
    if n > d:
        assert lower_bound_formula(n, d) <= n - d
    elif n == d:
        assert lower_bound_formula(n, d) == 1


@settings(max_examples=50, deadline=None)
@given(st.integers(min_value=2, max_value=200), st.integers(min_value=2, max_value=8))
def test_binomial_monotone(n, d):
    assert kalai_kleitman_binomial(n, d) <= kalai_kleitman_binomial(n + 1, d)
    assert kalai_kleitman_binomial(n, d) <= kalai_kleitman_binomial(n, d + 1)
