from __future__ import annotations

from math import gcd

import pytest
from hypothesis import assume, given, strategies as st

from sl3ext.matrix import Mat2, Mat3
from sl3ext.rings import Integers, RingError
from sl3ext.witnesses import (c9_extension, c14_residual, c14_witness, cr3_statement3,
                              cr3_statement3_witness, cr3_witness, th5_8_witness)

ZZ = Integers()
small = st.integers(-20, 20)


@given(small, small, small, small)
def test_th5_8_exact(a, b, c, d):
    assume(gcd(a, b) == 1 and gcd(c, d) == 1)
    w = th5_8_witness(a, b, c, d)
    assert w is not None and w.exact
    t, d1, d2 = w.values["t"], w.values["d1"], w.values["d2"]
    assert d + c * t == d1 * d2 and gcd(a, d1) == 1 and gcd(b, d2) == 1


def test_th5_8_known():
    w = th5_8_witness(6, 5, 7, 3)
    assert w.values == {"t": 0, "d1": 1, "d2": 3}
    # the split 10 = 5 * 2 at t = 1 is another valid answer
    assert 3 + 7 * 1 == 5 * 2 and gcd(6, 5) == 1 and gcd(5, 2) == 1
    with pytest.raises(RingError):
        th5_8_witness(2, 4, 1, 1)


@given(small, small, small)
def test_cr3_exact(a, b, s):
    w = cr3_witness(a, b, s)
    assert w is not None and w.exact
    v = w.values
    assert v["y"] == v["r"] + s - a * s * v["q"] - b * v["q"] * v["r"]
    assert v["coef_y"] * v["y"] + v["coef_at"] * a * v["t"] == v["t"]


def test_cr3_known():
    w = cr3_witness(0, 0, 0)
    assert (w.values["q"], w.values["r"]) == (0, -1)


def test_cr3_statement3_shortcuts():
    # (1 - a, b) unimodular: (e, f) = (1, 0) works
    for a, b, s in [(3, 5, 2), (0, 7, 1), (-4, 1, 9)]:
        if gcd(1 - a, b) == 1:
            assert cr3_statement3(a, b, s, 1, 0)
    # (a, s) unimodular does not make (s, -1) work: a = b = 2, s = 1 gives the pair (0, -3)
    assert gcd(2, 1) == 1
    assert not cr3_statement3(2, 2, 1, 1, -1)
    assert cr3_statement3_witness(2, 2, 1) is not None


@given(small, small, small)
def test_c14_exact(a, u, t):
    assume(u != 0)
    w = c14_witness(a, u, t)
    assert w is not None and w.exact
    v = w.values
    assert c14_residual(a, u, t, v["s"], v["l"], v["z"]) == 0


def test_c14_known():
    w = c14_witness(0, 1, 0)
    assert w.values == {"s": 0, "l": -1, "z": 0}
    assert c14_residual(0, 1, 0, 1, 0, 0) == 0  # another solution
    with pytest.raises(RingError):
        c14_witness(1, 0, 1)


@pytest.mark.parametrize("rows,f", [([[0, 3], [0, 2]], -1), ([[0, 5], [0, 3]], -2)])
def test_c9_zero_corner(rows, f):
    w = c9_extension(Mat2.ints(ZZ, rows))
    assert w.e == 1 and w.f == f and w.valid()


def test_c9_family_member():
    w = c9_extension(Mat2.ints(ZZ, [[6, -10], [0, -15]]))
    assert w.aplus == Mat3.ints(ZZ, [[6, -10, -1], [0, -15, -1], [1, 1, 0]])


@given(st.integers(-200, 200), st.integers(-200, 200), st.integers(-200, 200))
def test_c9_random(a, b, d):
    assume(gcd(gcd(a, b), d) == 1)
    w = c9_extension(Mat2(ZZ, a, b, 0, d))
    assert w is not None and w.valid() and w.e == 1
