from __future__ import annotations

from hypothesis import given, strategies as st

from sl3ext.poly import Poly, X, Y, Z

exps = st.tuples(*[st.integers(0, 3)] * 3)
polys = st.dictionaries(exps, st.integers(-5, 5), max_size=5).map(Poly)
points = st.tuples(*[st.integers(-4, 4)] * 3)


def ev(p, pt):
    return p.evaluate(pt, 1, lambda a, b: a + b, lambda a, b: a * b, int)


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == Poly()


@given(polys, polys, points)
def test_evaluation_is_a_homomorphism(p, q, pt):
    assert ev(p * q, pt) == ev(p, pt) * ev(q, pt)
    assert ev(p + q, pt) == ev(p, pt) + ev(q, pt)


@given(polys, polys)
def test_divide_exact(p, q):
    if q.is_zero():
        return
    assert (p * q).divide_exact(q) == p


def test_divide_exact_refuses():
    assert (X + 1).divide_exact(X) is None
    assert (2 * X).divide_exact(Poly.const(3)) is None


def test_substitute():
    p = X * Y - Z
    assert p.substitute([Y, X, Z * Z]) == X * Y - Z * Z
    assert (X + Y) ** 2 == X * X + 2 * X * Y + Y * Y


def test_constant_and_degree():
    assert Poly.const(7).constant() == 7
    assert (X * Y * Y + 3).degree() == 3
    assert (X + 1).constant() is None
    assert str(Poly()) == "0"
