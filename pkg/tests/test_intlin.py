from __future__ import annotations

import itertools
from math import gcd, prod

import pytest
from hypothesis import given, strategies as st

from sl3ext.intlin import (crt, factorize, gcd_list, inverse_mod, positive_divisors,
                           solve_integer_system, xgcd, xgcd_list)

ints = st.integers(-10**12, 10**12)


@given(ints, ints)
def test_xgcd_bezout(a, b):
    g, x, y = xgcd(a, b)
    assert g == gcd(a, b) >= 0
    assert a * x + b * y == g


@given(st.lists(ints, min_size=1, max_size=6))
def test_xgcd_list(values):
    g, cs = xgcd_list(values)
    assert g == gcd_list(values)
    assert sum(c * v for c, v in zip(cs, values)) == g


def test_xgcd_zero():
    assert xgcd(0, 0)[0] == 0
    assert xgcd(0, -5)[0] == 5


@given(st.integers(2, 10**6), st.integers(-10**6, 10**6))
def test_inverse_mod(n, a):
    if gcd(a, n) == 1:
        assert a * inverse_mod(a, n) % n == 1
    else:
        with pytest.raises(ValueError):
            inverse_mod(a, n)


@given(st.integers(1, 10**7))
def test_factorize(n):
    f = factorize(n)
    assert prod(p ** k for p, k in f.items()) == n
    assert all(all(p % q for q in range(2, int(p ** 0.5) + 1)) for p in f)


def test_divisors():
    assert positive_divisors(12) == [1, 2, 3, 4, 6, 12]
    assert positive_divisors(-7) == [1, 7]


def test_crt():
    x = crt([2, 3, 1], [3, 5, 7])
    assert x % 3 == 2 and x % 5 == 3 and x % 7 == 1


@given(st.lists(st.lists(st.integers(-6, 6), min_size=3, max_size=3), min_size=1, max_size=2),
       st.lists(st.integers(-6, 6), min_size=2, max_size=2))
def test_solve_integer_system_agrees_with_brute_force(rows, rhs):
    rhs = rhs[:len(rows)]
    sol = solve_integer_system(rows, rhs)
    if sol is not None:
        assert [sum(r * c for r, c in zip(row, sol)) for row in rows] == rhs
    else:
        # no solution in a box that contains one whenever any exists for
        # such small systems with unit-size coefficients is not guaranteed,
        # so only check the box is empty
        box = range(-8, 9)
        assert not any(all(sum(r * c for r, c in zip(row, v)) == b for row, b in zip(rows, rhs))
                       for v in itertools.product(box, repeat=3))
