from __future__ import annotations

import itertools

import pytest
from hypothesis import given, strategies as st

from sl3ext.poly import Poly, X, Y, Z
from sl3ext.rings import (Integers, ModN, PolyZ3, Product, Quadratic, RingError, Undecided,
                          Unsupported, divides, elements_of_norm, gcd_bezout,
                          irreducible_in_quadratic, parse_element, parse_ring)

ZZ = Integers()
small = st.integers(-30, 30)


def elements(R):
    if isinstance(R, Integers):
        return small
    if isinstance(R, Quadratic):
        return st.tuples(small, small)
    if isinstance(R, Product):
        return st.tuples(elements(R.left), elements(R.right))
    if isinstance(R, PolyZ3):
        return st.dictionaries(st.tuples(*[st.integers(0, 2)] * 3), st.integers(-4, 4),
                               max_size=3).map(Poly)
    return st.sampled_from(R.elements())


RINGS = [ZZ, ModN(12), ModN(7), Quadratic(-5), Quadratic(2), PolyZ3(),
         Product(ModN(4), ModN(3)), Product(ZZ, ModN(5))]


@pytest.mark.parametrize("R", RINGS, ids=str)
def test_ring_axioms(R):
    @given(elements(R), elements(R), elements(R))
    def check(a, b, c):
        add, mul = R.add, R.mul
        assert R.eq(add(a, b), add(b, a))
        assert R.eq(mul(a, b), mul(b, a))
        assert R.eq(mul(mul(a, b), c), mul(a, mul(b, c)))
        assert R.eq(mul(a, add(b, c)), add(mul(a, b), mul(a, c)))
        assert R.eq(add(a, R.neg(a)), R.zero())
        assert R.eq(mul(a, R.one()), a)
    check()


@pytest.mark.parametrize("R", RINGS, ids=str)
def test_format_parse_round_trip(R):
    @given(elements(R))
    def check(a):
        assert R.eq(R.parse(R.format(a)), a)
    check()


def test_parse_ring_specifiers():
    assert parse_ring("Z") == ZZ
    assert parse_ring("Z/12") == ModN(12)
    assert parse_ring("Q[-5]") == Quadratic(-5)
    assert parse_ring("ZXYZ") == PolyZ3()
    assert parse_ring("(Z/2)x(Z/3)") == Product(ModN(2), ModN(3))
    for bad in ("", "Z/1", "Q[4]", "Q[1]", "R", "((Z)x(Z))x((Z)x((Z)x(Z)))"):
        with pytest.raises(RingError):
            parse_ring(bad)


def test_parse_elements():
    assert parse_element(Quadratic(-5), "1-w") == (1, -1)
    assert parse_element(Quadratic(-5), "w*w") == (-5, 0)
    assert parse_element(PolyZ3(), "x*y - 2") == X * Y - 2
    assert parse_element(ModN(6), "-1") == 5
    assert parse_element(Product(ModN(2), ZZ), "(1, -3)") == (1, -3)
    with pytest.raises(RingError):
        parse_element(ZZ, "import os")


@given(st.integers(2, 60), st.integers(0, 200), st.integers(0, 200))
def test_gcd_bezout_mod_n(n, a, b):
    R = ModN(n)
    a, b = a % n, b % n
    g, x, y = gcd_bezout(R, a, b)
    assert (a * x + b * y) % n == g
    ideal_ab = {(a * i + b * j) % n for i in range(n) for j in range(n)}
    assert ideal_ab == {g * i % n for i in range(n)}


@given(small, small)
def test_gcd_bezout_integers(a, b):
    g, x, y = gcd_bezout(ZZ, a, b)
    assert a * x + b * y == g >= 0


def _quadratic_ideal_has_one(R, xs, box=4):
    # brute force: some combination with coefficients in a box equals 1
    coeffs = list(itertools.product(range(-box, box + 1), repeat=2))
    for cs in itertools.product(coeffs, repeat=len(xs)):
        if R.eq(R.sum(R.mul(c, x) for c, x in zip(cs, xs)), R.one()):
            return True
    return False


@pytest.mark.parametrize("xs,expected", [
    ([(2, 0), (1, 1)], False),    # the non-principal ideal (2, 1+w) in Z[w], w^2 = -5
    ([(3, 0), (1, 1)], False),
    ([(2, 0), (3, 0)], True),
    ([(1, 1), (1, -1)], False),   # both have norm 6
    ([(2, 1), (3, 0)], False),    # 2+w lies in the prime (3, w-1)
    ([(2, 1), (2, 0)], True),     # coprime norms 9 and 4
])
def test_quadratic_unimodularity(xs, expected):
    R = Quadratic(-5)
    cert = R.unimodular_certificate(xs)
    assert (cert is not None) == expected
    if cert is not None:
        assert R.eq(R.dot(cert, xs), R.one())
    if expected:
        assert _quadratic_ideal_has_one(R, xs, box=2)


def test_quadratic_norms_and_irreducibility():
    R = Quadratic(-5)
    assert elements_of_norm(R, 2) == []
    assert sorted(elements_of_norm(R, 6)) == [(-1, -1), (-1, 1), (1, -1), (1, 1)]
    cert = irreducible_in_quadratic(R, (2, 0))
    assert cert.irreducible
    assert divides(R, (2, 0), (1, 1)) is None
    red = irreducible_in_quadratic(Quadratic(-1), (2, 0))
    assert not red.irreducible
    assert Quadratic(-1).eq(Quadratic(-1).mul(red.factor, red.cofactor), (2, 0))


def test_poly_unimodularity():
    P = PolyZ3()
    assert P.is_unimodular([X, 1 - X])
    assert P.is_unimodular([X * Y + 1, X])
    assert not P.is_unimodular([Poly.const(2), X])    # refuted at x = 0
    assert not P.is_unimodular([X, Y, Z])
    cert = P.unimodular_certificate([1 + X * Y, X])
    assert P.add(P.mul(cert[0], 1 + X * Y), P.mul(cert[1], X)) == Poly.const(1)


def test_modn_predicates():
    R = ModN(12)
    assert R.is_unit(5) and not R.is_unit(4)
    assert R.inverse(7) * 7 % 12 == 1
    assert not R.is_reduced() and ModN(6).is_reduced()
    assert R.is_unimodular([4, 3]) and not R.is_unimodular([4, 6])
    assert R.size == 12 and len(R.elements()) == 12


def test_product_ring():
    R = Product(ModN(2), ModN(3))
    assert R.size == 6
    assert R.is_unit((1, 2))
    assert not R.is_unit((0, 1))
    assert R.is_unimodular([(1, 0), (0, 1)])


def test_infinite_enumeration_unsupported():
    with pytest.raises(Unsupported):
        ZZ.elements()
